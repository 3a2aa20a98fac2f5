"""Trace polynomials of words in the rank-2 free group.

For a word u in generators a, b there is a unique polynomial P_u with
tr(rho(u)) = P_u(x, y, z) for every representation rho into SL2(C),
where x = tr rho(a), y = tr rho(b), z = tr rho(ab).  trace_poly computes
it by the classical reductions

    tr(MN) + tr(MN^{-1}) = tr(M) tr(N)
    M^k = S_k(tr M) I - S_{k-1}(tr M) M^{-1}

with the power identity applied both to single-generator syllables and
to repeated blocks, so that words like (ba)^n (b^-1 a^-1)^n ... collapse
to a handful of short words with Chebyshev coefficients.

trace_poly_oracle recomputes the same polynomial by multiplying explicit
matrices over a Laurent ring and rewriting the result in z = c + 1/c; it
shares no code path with the reduction engine.

Words are tuples of (generator, exponent) syllables with generators in
{"a", "b"}, nonzero exponents, and distinct adjacent generators.
"""

from __future__ import annotations

from .chebyshev import cheb_at
from .polynomials import PolyRing

RING = PolyRing(("x", "y", "z"))
X = RING.var("x")
Y = RING.var("y")
Z = RING.var("z")

GAMMA = X**2 + Y**2 + Z**2 - X * Y * Z - 2

_GEN_TRACE = {"a": X, "b": Y}


# -- words -------------------------------------------------------------------


def free_reduce(syllables):
    """Merge adjacent same-generator syllables and drop zero exponents."""
    out = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if gen not in ("a", "b"):
            raise ValueError("unknown generator %r" % (gen,))
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return tuple(out)


def word_concat(*parts):
    combined = []
    for part in parts:
        combined.extend(part)
    return free_reduce(combined)


def word_inverse(word):
    return tuple((gen, -exp) for gen, exp in reversed(word))


def word_weight(word):
    return sum(abs(e) for _, e in word)


def word_to_string(word):
    chunks = []
    for gen, exp in word:
        if exp == 1:
            chunks.append(gen)
        elif exp == -1:
            chunks.append(gen.upper())
        else:
            chunks.append("%s^%d" % (gen, exp))
    return " ".join(chunks)


def parse_word(text):
    """Parse a word: lowercase = generator, uppercase = inverse.

    Supports optional ^k exponents (k a possibly negative integer) and
    parenthesized blocks like "(ba)^3".  Whitespace is ignored.  The
    result is freely reduced.
    """
    syllables, _ = _parse_chunk(text, 0, toplevel=True)
    return free_reduce(syllables)


def _parse_chunk(text, i, toplevel):
    out = []
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == ")":
            if toplevel:
                raise ValueError("unbalanced ')' at position %d" % i)
            return out, i
        if ch == "(":
            inner, j = _parse_chunk(text, i + 1, toplevel=False)
            if j >= n or text[j] != ")":
                raise ValueError("unbalanced '(' at position %d" % i)
            exp, i = _parse_exponent(text, j + 1)
            block = free_reduce(inner)
            if exp < 0:
                block, exp = word_inverse(block), -exp
            out.extend(block * exp)
            continue
        if ch in "abAB":
            gen = ch.lower()
            sign = 1 if ch.islower() else -1
            exp, i = _parse_exponent(text, i + 1)
            out.append((gen, sign * exp))
            continue
        raise ValueError("unknown character %r at position %d" % (ch, i))
    if not toplevel:
        raise ValueError("unbalanced '('")
    return out, i


def _parse_exponent(text, i):
    if i >= len(text) or text[i] != "^":
        return 1, i
    i += 1
    j = i
    if j < len(text) and text[j] in "+-":
        j += 1
    start_digits = j
    while j < len(text) and text[j].isdigit():
        j += 1
    if j == start_digits:
        raise ValueError("malformed exponent at position %d" % i)
    return int(text[i:j]), j


# -- canonical forms ----------------------------------------------------------


def cyclic_reduce(word):
    w = list(word)
    while len(w) >= 2 and w[0][0] == w[-1][0]:
        gen = w[0][0]
        exp = w[0][1] + w[-1][1]
        w = w[1:-1]
        if exp:
            w.insert(0, (gen, exp))
    return tuple(w)


def canonical_form(word):
    """Least representative among all rotations of the word and its inverse.

    Trace polynomials are invariant under conjugation (hence cyclic
    rotation) and inversion, so this is the right cache key.
    """
    w = cyclic_reduce(free_reduce(word))
    best = None
    for u in (w, cyclic_reduce(word_inverse(w))):
        n = len(u)
        for i in range(n):
            rot = u[i:] + u[:i]
            if best is None or rot < best:
                best = rot
    return best if best is not None else ()


# -- the reduction engine -----------------------------------------------------

_memo = {}


def trace_poly(word):
    """The unique trace polynomial P_word in x, y, z."""
    key = canonical_form(word)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    value = _compute(key)
    _memo[key] = value
    return value


def _compute(u):
    n = len(u)
    if n == 0:
        return RING.const(2)
    if n == 1:
        gen, exp = u[0]
        t = _GEN_TRACE[gen]
        # tr(g^e) = 2 S_e(t) - t S_{e-1}(t)
        return 2 * cheb_at(exp, t) - t * cheb_at(exp - 1, t)
    if all(abs(e) == 1 for _, e in u):
        if n == 2:
            ea, eb = u[0][1], u[1][1]
            return Z if ea == eb else X * Y - Z
        signs = {e for _, e in u}
        if len(signs) == 1:
            # alternating (ab)^k or its inverse; n is even after cyclic reduction
            k = n // 2
            return 2 * cheb_at(k, Z) - Z * cheb_at(k - 1, Z)
        # work on whichever of u, u^-1 has fewer inverse letters, so the
        # (weight, negatives) measure strictly decreases despite the
        # canonicalization inside recursive calls
        neg = sum(1 for _, e in u if e == -1)
        if 2 * neg > n:
            u = word_inverse(u)
        blk = _find_block(u)
        if blk is not None:
            return _block_reduce(*blk)
        return _negative_elimination(u)
    blk = _find_block(u)
    if blk is not None:
        return _block_reduce(*blk)
    return _exponent_flatten(u)


def _find_block(u):
    """Best repeated contiguous block over all rotations, or None.

    Returns (prefix, block, repeats, suffix) for the rotation maximizing
    the weight removed by one application of the power identity.
    """
    n = len(u)
    best = None
    best_saved = 0
    for r in range(n):
        w = u[r:] + u[:r]
        for L in range(2, n // 2 + 1):
            limit = n - 2 * L
            for i in range(limit + 1):
                block = w[i : i + L]
                reps = 1
                j = i + L
                while j + L <= n and w[j : j + L] == block:
                    reps += 1
                    j += L
                if reps >= 2:
                    saved = (reps - 1) * sum(abs(e) for _, e in block)
                    if saved > best_saved:
                        best_saved = saved
                        best = (w[:i], block, reps, w[j:])
    return best


def _block_reduce(prefix, block, reps, suffix):
    # tr(P B^r Q) = S_r(tau) tr(PQ) - S_{r-1}(tau) tr(P B^-1 Q), tau = P_B
    tau = trace_poly(block)
    without = trace_poly(word_concat(prefix, suffix))
    with_inv = trace_poly(word_concat(prefix, word_inverse(block), suffix))
    return cheb_at(reps, tau) * without - cheb_at(reps - 1, tau) * with_inv


def _exponent_flatten(u):
    # rotate the largest-exponent syllable to the front and peel it
    i = max(range(len(u)), key=lambda j: abs(u[j][1]))
    w = u[i:] + u[:i]
    gen, exp = w[0]
    rest = w[1:]
    t = _GEN_TRACE[gen]
    without = trace_poly(rest)
    with_inv = trace_poly(word_concat(((gen, -1),), rest))
    return cheb_at(exp, t) * without - cheb_at(exp - 1, t) * with_inv


def _negative_elimination(u):
    # rotate an inverse letter to the end: tr(W g^-1) = tr(W) tr(g) - tr(Wg)
    i = next(j for j, (_, e) in enumerate(u) if e == -1)
    w = u[i + 1 :] + u[: i + 1]
    gen = w[-1][0]
    head = w[:-1]
    t = _GEN_TRACE[gen]
    return trace_poly(head) * t - trace_poly(word_concat(head, ((gen, 1),)))


# -- the matrix oracle ---------------------------------------------------------

_ORACLE_RING = PolyRing(("x", "y", "c"))
_OX = _ORACLE_RING.var("x")
_OY = _ORACLE_RING.var("y")
_OC = _ORACLE_RING.var("c")


class _Laurent:
    """num / c^den with num a polynomial in (x, y, c); den >= 0."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=0):
        # strip common powers of c so den stays small
        if den and not num.is_zero():
            low = min(exp[2] for exp in num.terms)
            k = min(low, den)
            if k:
                num = num.div_exact(_ORACLE_RING.monomial("c", k))
                den -= k
        if num.is_zero():
            den = 0
        self.num = num
        self.den = den

    def __add__(self, other):
        d = max(self.den, other.den)
        a = self.num * _ORACLE_RING.monomial("c", d - self.den)
        b = other.num * _ORACLE_RING.monomial("c", d - other.den)
        return _Laurent(a + b, d)

    def __sub__(self, other):
        return self + _Laurent(-other.num, other.den)

    def __mul__(self, other):
        return _Laurent(self.num * other.num, self.den + other.den)

    def is_zero(self):
        return self.num.is_zero()


def _lc(poly):
    return _Laurent(poly, 0)


_L0 = _lc(_ORACLE_RING.zero())
_L1 = _lc(_ORACLE_RING.one())

# A = [[x, -1], [1, 0]], B = [[0, c], [-1/c, y]]; both have determinant 1,
# tr A = x, tr B = y, tr AB = c + 1/c
_MAT = {
    ("a", 1): ((_lc(_OX), _lc(-_ORACLE_RING.one())), (_L1, _L0)),
    ("a", -1): ((_L0, _L1), (_lc(-_ORACLE_RING.one()), _lc(_OX))),
    ("b", 1): ((_L0, _lc(_OC)), (_Laurent(-_ORACLE_RING.one(), 1), _lc(_OY))),
    ("b", -1): ((_lc(_OY), _lc(-_OC)), (_Laurent(_ORACLE_RING.one(), 1), _L0)),
}


def _mat_mul(m, n):
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def trace_poly_oracle(word):
    """P_word recomputed from explicit matrices; independent of trace_poly.

    The product is taken over the Laurent ring Z[x, y][c, 1/c]; the trace
    is symmetric in c <-> 1/c and is rewritten as a polynomial in
    z = c + 1/c by peeling the top symmetric power.  A nonzero residue
    would signal an arithmetic bug and raises ArithmeticError.
    """
    m = ((_L1, _L0), (_L0, _L1))
    for gen, exp in free_reduce(word):
        step = _MAT[(gen, 1 if exp > 0 else -1)]
        for _ in range(abs(exp)):
            m = _mat_mul(m, step)
    tr = m[0][0] + m[1][1]

    out = RING.zero()
    zc = _Laurent(_OC**2 + 1, 1)  # c + 1/c
    while not tr.is_zero():
        k = tr.num.degree_in("c") - tr.den
        if k < 0:
            raise ArithmeticError("asymmetric residue in c: %s / c^%d" % (tr.num, tr.den))
        lead = tr.num.coeff_in("c", k + tr.den)
        lead_xyz = lead.map_values({"x": X, "y": Y}, RING)
        out = out + lead_xyz * RING.monomial("z", k)
        if k == 0:
            tr = tr - _lc(lead)
        else:
            zk = _L1
            for _ in range(k):
                zk = zk * zc
            tr = tr - _lc(lead) * zk
    return out


# -- identity suite -------------------------------------------------------------


def trace_identity_suite():
    """Exact checks of the commutator-flavored difference identities.

    Returns {name: bool}; every value should be True.  Covers the six
    differences used to simplify the two-bridge reduction and the three
    longer explicit trace polynomials.
    """
    g = GAMMA
    two_minus_g = 2 - g
    w = parse_word
    checks = {
        "AB(ab)^-1 style: P[ABaB] - P[BB]": (
            trace_poly(w("ABaB")) - trace_poly(w("B^2")),
            two_minus_g,
        ),
        "P[A^2B^2aB] - P[B^2AB]": (
            trace_poly(w("A^2 B^2 a B")) - trace_poly(w("B^2 A B")),
            two_minus_g * X * Y,
        ),
        "P[A^2Ba^2B] - P[ABaB]": (
            trace_poly(w("A^2 B a^2 B")) - trace_poly(w("A B a B")),
            two_minus_g * (X**2 - 1),
        ),
        "P[A^2B^4] - P[AB^3AB]": (
            trace_poly(w("A^2 B^4")) - trace_poly(w("A B^3 A B")),
            two_minus_g * (Y**2 - 1),
        ),
        "P[B^2] - P[aBAB]": (
            trace_poly(w("B^2")) - trace_poly(w("a B A B")),
            g - 2,
        ),
        "P[A^2BaB^2] - P[ABaBAB]": (
            trace_poly(w("A^2 B a B^2")) - trace_poly(w("A B a B A B")),
            two_minus_g * (X * Y - Z),
        ),
        "P[abaBAB]": (
            trace_poly(w("abaBAB")),
            X * Y - (X**2 + Y**2 - 3) * Z + X * Y * Z**2 - Z**3,
        ),
        "P[aBabAB]": (
            trace_poly(w("aBabAB")),
            X * Y * (X**2 + Y**2 - 3)
            - (X**2 * Y**2 + X**2 + Y**2 - 3) * Z
            + 2 * X * Y * Z**2
            - Z**3,
        ),
        "P[abaBABabAB]": (
            trace_poly(w("abaBABabAB")),
            X * Y * (X**2 + Y**2 - 3)
            - (X**4 + Y**4 + 3 * X**2 * Y**2 - 5 * X**2 - 5 * Y**2 + 5) * Z
            + 2 * X * Y * (X**2 + Y**2 - 2) * Z**2
            - (X**2 * Y**2 + 2 * X**2 + 2 * Y**2 - 5) * Z**3
            + 2 * X * Y * Z**4
            - Z**5,
        ),
    }
    return {name: lhs == rhs for name, (lhs, rhs) in checks.items()}
