"""Exact multivariate polynomial arithmetic over the integers.

Polynomials live in a PolyRing with a fixed, ordered tuple of variable
names.  The monomial order is graded lexicographic, with earlier names
more significant.  Coefficients are plain Python ints, so arithmetic is
exact at any size.  Values are immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

import math

NEG_INF = float("-inf")


class PolyRing:
    """A polynomial ring ZZ[n0 > n1 > ...] with a fixed variable order."""

    __slots__ = ("names", "index", "_zero_exp", "_vars", "_zero", "_one")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names: %r" % (names,))
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}
        self._zero_exp = (0,) * len(names)
        self._vars = {}
        self._zero = Polynomial(self, {})
        self._one = Polynomial(self, {self._zero_exp: 1})

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def const(self, c):
        c = int(c)
        if c == 0:
            return self._zero
        return Polynomial(self, {self._zero_exp: c})

    def var(self, name):
        try:
            return self._vars[name]
        except KeyError:
            pass
        i = self.index[name]  # KeyError for unknown names
        exp = tuple(1 if j == i else 0 for j in range(len(self.names)))
        v = Polynomial(self, {exp: 1})
        self._vars[name] = v
        return v

    def monomial(self, name, e):
        """The monomial name**e."""
        if e < 0:
            raise ValueError("negative exponent")
        i = self.index[name]
        exp = tuple(e if j == i else 0 for j in range(len(self.names)))
        return Polynomial(self, {exp: 1})

    def from_terms(self, terms):
        """Build a polynomial from {exponent tuple: coefficient}, cleaning zeros."""
        clean = {}
        for exp, c in terms.items():
            c = int(c)
            if c == 0:
                continue
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(self.names) or any(e < 0 for e in exp):
                raise ValueError("bad exponent vector %r" % (exp,))
            clean[exp] = clean.get(exp, 0) + c
        return Polynomial(self, {e: c for e, c in clean.items() if c != 0})

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "PolyRing(%s)" % ", ".join(self.names)


def _grlex_key(item):
    exp = item[0]
    return (sum(exp), exp)


class Polynomial:
    """An element of a PolyRing; term map from exponent tuple to nonzero int."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic predicates ------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def is_one(self):
        return self.terms == {self.ring._zero_exp: 1}

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get(self.ring._zero_exp, 0)

    # -- ring operations --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        terms = dict(self.terms)
        for exp, c in q.terms.items():
            s = terms.get(exp, 0) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if not self.terms or not q.terms:
            return self.ring._zero
        # multiply the smaller term map into the larger one
        a, b = self.terms, q.terms
        if len(a) > len(b):
            a, b = b, a
        terms = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exp = tuple(i + j for i, j in zip(ea, eb))
                s = terms.get(exp, 0) + ca * cb
                if s:
                    terms[exp] = s
                else:
                    del terms[exp]
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring._one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.terms.get(self.ring._zero_exp, 0) == other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring.names, frozenset(self.terms.items())))
            self._hash = h
        return h

    # -- structure --------------------------------------------------------

    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        """Degree in one variable; -inf sentinel for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        i = self.ring.index[name]
        return max(e[i] for e in self.terms)

    def coeff_in(self, name, d):
        """Coefficient of name**d, as a polynomial in the remaining variables."""
        i = self.ring.index[name]
        terms = {}
        for exp, c in self.terms.items():
            if exp[i] == d:
                e = list(exp)
                e[i] = 0
                terms[tuple(e)] = c
        return Polynomial(self.ring, terms)

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=lambda e: (sum(e), e))
        return exp, self.terms[exp]

    def leading_coefficient(self):
        return self.leading()[1]

    def variables(self):
        """Names that actually occur."""
        present = [False] * len(self.ring.names)
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    present[i] = True
        return tuple(n for n, p in zip(self.ring.names, present) if p)

    def derivative(self, name):
        i = self.ring.index[name]
        terms = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e == 0:
                continue
            new = list(exp)
            new[i] = e - 1
            new = tuple(new)
            s = terms.get(new, 0) + c * e
            if s:
                terms[new] = s
            else:
                del terms[new]
        return Polynomial(self.ring, terms)

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, name, value):
        """Replace every occurrence of one variable by a polynomial (same ring)."""
        value = self._coerce(value)
        d = self.degree_in(name)
        if d is NEG_INF or d == 0:
            return self
        parts = {}
        i = self.ring.index[name]
        for exp, c in self.terms.items():
            e = list(exp)
            k = e[i]
            e[i] = 0
            part = parts.setdefault(k, {})
            part[tuple(e)] = part.get(tuple(e), 0) + c
        acc = Polynomial(self.ring, parts.get(d, {}))
        for k in range(d - 1, -1, -1):
            acc = acc * value + Polynomial(self.ring, parts.get(k, {}))
        return acc

    def map_values(self, mapping, ring):
        """Simultaneous substitution into a target ring.

        mapping sends variable names to Polynomials of `ring`; every
        variable that occurs in self must be mapped.
        """
        powers = {}

        def power(name, e):
            key = (name, e)
            p = powers.get(key)
            if p is None:
                p = mapping[name] ** e
                powers[key] = p
            return p

        acc = ring.zero()
        names = self.ring.names
        for exp, c in self.terms.items():
            term = ring.const(c)
            for name, e in zip(names, exp):
                if e:
                    term = term * power(name, e)
            acc = acc + term
        return acc

    def cast(self, ring):
        """Inject into another ring containing all occurring variables."""
        mapping = {n: ring.var(n) for n in self.variables()}
        return self.map_values(mapping, ring)

    def evaluate(self, assignment):
        """Evaluate at a point; Horner in each variable in turn.

        Raises KeyError if a variable with positive degree is missing.
        """
        for n in self.variables():
            if n not in assignment:
                raise KeyError("no value for variable %r" % n)
        return self._eval(dict(assignment))

    def _eval(self, assignment):
        if self.is_constant():
            return complex(self.terms.get(self.ring._zero_exp, 0))
        name = self.variables()[0]
        i = self.ring.index[name]
        parts = {}
        for exp, c in self.terms.items():
            e = list(exp)
            k = e[i]
            e[i] = 0
            parts.setdefault(k, {})[tuple(e)] = c
        d = max(parts)
        xv = complex(assignment[name])
        acc = Polynomial(self.ring, parts[d])._eval(assignment)
        for k in range(d - 1, -1, -1):
            sub = parts.get(k)
            acc = acc * xv
            if sub:
                acc = acc + Polynomial(self.ring, sub)._eval(assignment)
        return acc

    # -- divisibility -------------------------------------------------------

    def div_exact(self, q):
        """Exact quotient self/q, or None when q does not divide self."""
        q = self._coerce(q)
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self.ring._zero
        qexp, qc = q.leading()
        rem = self
        quot = {}
        while not rem.is_zero():
            rexp, rc = rem.leading()
            exp = tuple(i - j for i, j in zip(rexp, qexp))
            if any(e < 0 for e in exp):
                return None
            c, r = divmod(rc, qc)
            if r:
                return None
            quot[exp] = quot.get(exp, 0) + c
            rem = rem - Polynomial(self.ring, {exp: c}) * q
        return Polynomial(self.ring, {e: c for e, c in quot.items() if c})

    def content(self):
        """gcd of the integer coefficients (nonnegative)."""
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
            if g == 1:
                return 1
        return g

    def primitive_part(self):
        c = self.content()
        if c <= 1:
            return self
        return Polynomial(self.ring, {e: v // c for e, v in self.terms.items()})

    def normalized(self):
        """Sign-normalized: leading coefficient positive (zero stays zero)."""
        if self.is_zero():
            return self
        if self.leading_coefficient() < 0:
            return -self
        return self

    # -- rendering and serialization -----------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=_grlex_key, reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exp, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.names, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            if not factors:
                body = str(abs(c))
            else:
                mono = "*".join(factors)
                body = mono if abs(c) == 1 else "%d*%s" % (abs(c), mono)
            if not chunks:
                chunks.append(body if c > 0 else "-" + body)
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self):
        return "<Polynomial %s>" % self

    def to_json(self):
        """Interchange form: variables plus grlex-descending term list."""
        return {
            "vars": list(self.ring.names),
            "terms": [
                {"exp": list(exp), "coeff": str(c)} for exp, c in self.sorted_terms()
            ],
        }


def from_json(data, ring=None):
    """Rebuild a Polynomial from its interchange form."""
    names = tuple(data["vars"])
    if ring is None:
        ring = PolyRing(names)
    elif ring.names != names:
        raise ValueError("variable list %r does not match ring %r" % (names, ring.names))
    terms = {}
    for t in data["terms"]:
        exp = tuple(int(e) for e in t["exp"])
        terms[exp] = terms.get(exp, 0) + int(t["coeff"])
    return ring.from_terms(terms)


# -- gcd ----------------------------------------------------------------------


def _main_variable(p, q):
    """Most significant variable occurring in p or q, or None."""
    best = None
    for poly in (p, q):
        for exp in poly.terms:
            for i, e in enumerate(exp):
                if e and (best is None or i < best):
                    best = i
    if best is None:
        return None
    return p.ring.names[best]


def _prem(f, g, v):
    """Pseudo-remainder of f by g in the variable v (cross multiplication)."""
    ring = f.ring
    dg = g.degree_in(v)
    lc_g = g.coeff_in(v, dg)
    r = f
    while True:
        dr = r.degree_in(v)
        if r.is_zero() or dr < dg:
            return r
        lc_r = r.coeff_in(v, dr)
        r = r * lc_g - g * lc_r * ring.monomial(v, dr - dg)


def _content_pp(p, v):
    """Content and primitive part of p seen as univariate in v."""
    d = p.degree_in(v)
    coeffs = [p.coeff_in(v, e) for e in range(d + 1)]
    cont = p.ring.zero()
    for c in coeffs:
        if not c.is_zero():
            cont = _gcd(cont, c)
            if cont.is_one():
                return p.ring.one(), p
    pp = p.div_exact(cont)
    assert pp is not None
    return cont, pp


def _gcd(p, q):
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    if p.is_constant() and q.is_constant():
        return p.ring.const(math.gcd(p.constant_value(), q.constant_value()))
    v = _main_variable(p, q)
    cp, fp = _content_pp(p, v)
    cq, fq = _content_pp(q, v)
    cont = _gcd(cp, cq)
    f, g = fp, fq
    if f.degree_in(v) < g.degree_in(v):
        f, g = g, f
    # primitive remainder sequence in v: strip the full coefficient-ring
    # content after every pseudo-remainder to keep coefficients small
    while not g.is_zero():
        r = _prem(f, g, v)
        if not r.is_zero():
            r = _content_pp(r, v)[1]
        f, g = g, r
    if f.degree_in(v) == 0:
        # primitive parts coprime in v; only the contents are shared
        return cont.normalized()
    return (cont * _content_pp(f, v)[1]).normalized()


def poly_gcd(p, q):
    """A greatest common divisor, normalized to positive leading coefficient."""
    if p.ring != q.ring:
        raise ValueError("polynomials from different rings")
    g = _gcd(p, q)
    return g.normalized()


# -- perfect squares ------------------------------------------------------------


def is_perfect_square(p):
    """A square root of p in the integer-coefficient ring, or None.

    Works down the most significant occurring variable by coefficient
    matching from the leading term; constants use exact integer square
    roots.  Total function: never raises on valid polynomials.
    """
    if p.is_zero():
        return p.ring.zero()
    if p.is_constant():
        c = p.constant_value()
        if c < 0:
            return None
        r = math.isqrt(c)
        return p.ring.const(r) if r * r == c else None
    v = p.variables()[0]
    d = p.degree_in(v)
    if d % 2:
        return None
    e = d // 2
    coeffs = [p.coeff_in(v, i) for i in range(d + 1)]
    top = is_perfect_square(coeffs[d])
    if top is None or top.is_zero():
        return None
    ring = p.ring
    b = {e: top}
    two_top = 2 * top
    for i in range(e - 1, -1, -1):
        # coefficient of v^(e+i) in root^2 is 2*b_e*b_i plus cross terms
        # b_j*b_k with j+k = e+i and i < j,k < e
        cross = ring.zero()
        for j in range(i + 1, e):
            k = e + i - j
            if k < j or k >= e:
                continue
            prod = b[j] * b[k]
            cross = cross + (prod if j == k else 2 * prod)
        bi = (coeffs[e + i] - cross).div_exact(two_top)
        if bi is None:
            return None
        b[i] = bi
    root = ring.zero()
    for i, bi in b.items():
        root = root + bi * ring.monomial(v, i)
    if (root * root) != p:
        return None
    return root.normalized()
