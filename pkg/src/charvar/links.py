"""Link catalog: presentations and character polynomials.

Covers three families:

  * two-bridge links b(2p, m), presented as <a, b | a w = w a> with the
    Riley word w = b^e1 a^e2 ... b^e(2p-1), e_j = (-1)^floor(m j / 2p);
  * (-2, 2m+1, 2n)-pretzel links, via the closed-form defining
    polynomial (gamma - 2) * Q(m, n);
  * k-twisted Whitehead links W_k = b(4k+4, 2k+1), with closed-form
    factor lists.

The defining polynomial of a two-bridge link is the difference
P_{a w a^-1 b^-1} - P_{w b^-1}, computed by the trace engine; the closed
forms below are compared against it (up to overall sign) in the
verification layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .chebyshev import cheb_at
from .polynomials import Polynomial
from .traces import GAMMA, RING, X, Y, Z, trace_poly, word_concat

REDUCIBLE_SURFACE = GAMMA - 2  # x^2 + y^2 + z^2 - xyz - 4


# -- link specifications -------------------------------------------------------


@dataclass(frozen=True)
class TwoBridge:
    p: int
    m: int

    def validate(self):
        if not (self.p > self.m > 0):
            raise ValueError("need p > m > 0, got (%d, %d)" % (self.p, self.m))
        if self.m % 2 == 0:
            raise ValueError("m must be odd, got %d" % self.m)
        if math.gcd(self.p, self.m) != 1:
            raise ValueError("p and m must be coprime, got (%d, %d)" % (self.p, self.m))

    def __str__(self):
        return "twobridge:%d,%d" % (self.p, self.m)


@dataclass(frozen=True)
class Pretzel:
    m: int
    n: int

    def __str__(self):
        return "pretzel:%d,%d" % (self.m, self.n)


@dataclass(frozen=True)
class TwistedWhitehead:
    k: int

    def validate(self):
        if self.k < 0:
            raise ValueError("twist count must be nonnegative, got %d" % self.k)

    def as_two_bridge(self):
        self.validate()
        return TwoBridge(2 * self.k + 2, 2 * self.k + 1)

    def __str__(self):
        return "whitehead:%d" % self.k


def parse_link(text):
    """Parse "twobridge:p,m", "pretzel:m,n" or "whitehead:k"."""
    try:
        kind, _, args = text.partition(":")
        parts = [int(s) for s in args.split(",")] if args else []
        if kind == "twobridge" and len(parts) == 2:
            spec = TwoBridge(*parts)
            spec.validate()
            return spec
        if kind == "pretzel" and len(parts) == 2:
            return Pretzel(*parts)
        if kind == "whitehead" and len(parts) == 1:
            spec = TwistedWhitehead(parts[0])
            spec.validate()
            return spec
    except ValueError as exc:
        raise ValueError("bad link %r: %s" % (text, exc)) from None
    raise ValueError("bad link %r" % text)


def as_two_bridge(link):
    if isinstance(link, TwoBridge):
        link.validate()
        return link
    if isinstance(link, TwistedWhitehead):
        return link.as_two_bridge()
    raise ValueError("not a two-bridge link: %r" % (link,))


# -- two-bridge words and polynomials -------------------------------------------


@lru_cache(maxsize=None)
def riley_word(p, m):
    """b^e1 a^e2 ... b^e(2p-1) with e_j = (-1)^floor(m j / 2p)."""
    TwoBridge(p, m).validate()
    out = []
    gen = "b"
    for j in range(1, 2 * p):
        eps = -1 if (m * j // (2 * p)) % 2 else 1
        out.append((gen, eps))
        gen = "a" if gen == "b" else "b"
    return tuple(out)


@dataclass(frozen=True)
class CharPoly:
    """A defining polynomial, with the nonabelian cofactor when known.

    full = (reducible surface factor) * nonabelian whenever the closed
    form provides the split; word-derived polynomials carry only `full`.
    """

    full: Polynomial
    nonabelian: Polynomial | None = None
    degenerate: bool = False


@lru_cache(maxsize=None)
def char_poly_twobridge(p, m):
    """Word-derived defining polynomial P_{a w a^-1 b^-1} - P_{w b^-1}."""
    w = riley_word(p, m)
    full = _relator_difference(w, conjugate_by_inverse=False)
    return CharPoly(full=full)


def char_poly_variants(p, m):
    """Both conjugate variants of the word-derived polynomial.

    Returns (P_{a w a^-1 b^-1} - P_{w b^-1}, P_{a^-1 w a b^-1} - P_{w b^-1}).
    The two generate the same principal ideal up to sign for the links
    in this catalog; the verification layer asserts that.
    """
    w = riley_word(p, m)
    return (
        _relator_difference(w, conjugate_by_inverse=False),
        _relator_difference(w, conjugate_by_inverse=True),
    )


def _relator_difference(w, conjugate_by_inverse):
    if conjugate_by_inverse:
        left = word_concat((("a", -1),), w, (("a", 1), ("b", -1)))
    else:
        left = word_concat((("a", 1),), w, (("a", -1), ("b", -1)))
    right = word_concat(w, (("b", -1),))
    return trace_poly(left) - trace_poly(right)


# -- pretzel closed form ---------------------------------------------------------


def pretzel_beta():
    return X * Y * Z + 2 - Y**2 - Z**2


def pretzel_alpha(m):
    beta = pretzel_beta()
    return Y * cheb_at(m - 1, beta) - (X * Z - Y) * cheb_at(m - 2, beta)


def pretzel_nonabelian(m, n):
    """Q with (gamma - 2) * Q the defining polynomial of the pretzel link."""
    beta = pretzel_beta()
    alpha = pretzel_alpha(m)
    return (X * Z - Y) * cheb_at(n - 1, alpha) - (
        cheb_at(m, beta) - cheb_at(m - 1, beta)
    ) * cheb_at(n - 2, alpha)


@lru_cache(maxsize=None)
def pretzel_char_poly(m, n):
    """Defining polynomial of the (-2, 2m+1, 2n)-pretzel link.

    Total in (m, n).  The (0, -1) case is the two-component unlink whose
    character variety is all of C^3; the formula then evaluates to the
    zero polynomial and the result is flagged degenerate.
    """
    q = pretzel_nonabelian(m, n)
    return CharPoly(
        full=REDUCIBLE_SURFACE * q,
        nonabelian=q,
        degenerate=(m, n) == (0, -1),
    )


# -- closed forms for the two-bridge families ------------------------------------


def twobridge3_nonabelian(p):
    """Closed-form nonabelian factor Q_p for b(2p, 3).

    Requires p > 3 with p not divisible by 3, so p = 3n+1 or 3n+2.
    """
    if p <= 3:
        raise ValueError("need p > 3, got %d" % p)
    if p % 3 == 0:
        raise ValueError("p must not be divisible by 3, got %d" % p)
    n, r = divmod(p, 3)
    sn = cheb_at(n, Z)
    sn1 = cheb_at(n - 1, Z)
    if r == 1:
        return (
            (X**2 + Y**2) * sn * sn1**2
            - X * Y * sn1 * (sn**2 + sn1**2)
            + cheb_at(3 * n, Z)
        )
    return (
        (X**2 + Y**2) * sn**2 * sn1
        - X * Y * sn * (sn**2 + sn1**2)
        + cheb_at(3 * n + 1, Z)
    )


def twisted_whitehead_factors(k):
    """(reducible factor, Chebyshev factor at gamma, nonabelian factor Q) for W_k.

    For k = 2n-1 the Chebyshev factor is S_{n-1} composed at gamma and
    Q = (xy - gamma z) S_{n-1}(gamma) - (xy - 2z) S_{n-2}(gamma); for
    k = 2n it is (S_n - S_{n-1}) composed at gamma and
    Q = z S_n(gamma) - (xy - z) S_{n-1}(gamma).
    """
    if k < 0:
        raise ValueError("twist count must be nonnegative, got %d" % k)
    g = GAMMA
    if k % 2:
        n = (k + 1) // 2
        cheb_factor = cheb_at(n - 1, g)
        q = (X * Y - g * Z) * cheb_at(n - 1, g) - (X * Y - 2 * Z) * cheb_at(n - 2, g)
    else:
        n = k // 2
        cheb_factor = cheb_at(n, g) - cheb_at(n - 1, g)
        q = Z * cheb_at(n, g) - (X * Y - Z) * cheb_at(n - 1, g)
    return REDUCIBLE_SURFACE, cheb_factor, q


# -- block forms of the Whitehead-family Riley words (used by tests) -------------


def whitehead_block_word(k):
    """The Riley word of W_k written with repeated commutator blocks.

    k = 2n-1: (b a b^-1 a^-1)^n a (a^-1 b^-1 a b)^n
    k = 2n:   (b a b^-1 a^-1)^n b a b (a^-1 b^-1 a b)^n
    """
    blk = (("b", 1), ("a", 1), ("b", -1), ("a", -1))
    inv = (("a", -1), ("b", -1), ("a", 1), ("b", 1))
    if k % 2:
        n = (k + 1) // 2
        mid = (("a", 1),)
    else:
        n = k // 2
        mid = (("b", 1), ("a", 1), ("b", 1))
    return word_concat(blk * n, mid, inv * n)
