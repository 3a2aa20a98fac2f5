"""Acceptance suite: one check per shipped guarantee, with stated tolerances.

Run as `pytest -s tests/test_acceptance.py` to see one pass/fail line per
criterion.  Every polynomial comparison is exact (zero tolerance); only
the floating-point oracle checks carry the documented thresholds.
"""

import random
import time

from charvar import links, numeric, varieties
from charvar.chebyshev import T, cheb, cheb_at, distinct_root_count
from charvar.links import REDUCIBLE_SURFACE
from charvar.traces import (
    GAMMA,
    X,
    Y,
    Z,
    parse_word,
    trace_identity_suite,
    trace_poly,
    trace_poly_oracle,
)

from conftest import random_word


def _report(num, description, ok, elapsed=None):
    stamp = "" if elapsed is None else " (%.2f s)" % elapsed
    print("ACCEPTANCE %d %-58s %s%s" % (num, description, "PASS" if ok else "FAIL", stamp))
    assert ok, "criterion %d failed: %s" % (num, description)


def test_criterion_1_chebyshev_identities():
    t0 = time.monotonic()
    ok = True
    for k in range(-10, 11):
        ok = ok and cheb(k).evaluate({"t": 2}) == k + 1
        ok = ok and cheb(k).evaluate({"t": -2}) == (-1) ** k * (k + 1)
        ok = ok and cheb(-k) == -cheb(k - 2)
        ok = ok and cheb(k) ** 2 + cheb(k - 1) ** 2 - T * cheb(k) * cheb(k - 1) == 1
    for k in range(-6, 7):
        lhs = cheb(k) ** 3 - 3 * cheb(k) * cheb(k - 1) ** 2 + T * cheb(k - 1) ** 3
        ok = ok and lhs == cheb(3 * k)
    elapsed = time.monotonic() - t0
    _report(1, "Chebyshev identity suite, k in [-10,10]", ok and elapsed < 1.0, elapsed)


def test_criterion_2_trace_engine_vs_oracle():
    t0 = time.monotonic()
    rng = random.Random(901)
    ok = True
    for _ in range(200):
        w = random_word(rng, max_syllables=12, max_exp=4)
        ok = ok and trace_poly(w) == trace_poly_oracle(w)
        if not ok:
            break
    elapsed = time.monotonic() - t0
    _report(2, "trace engine = matrix oracle on 200 random words", ok and elapsed < 30, elapsed)


def test_criterion_3_difference_identity_reproduction():
    suite = trace_identity_suite()
    _report(3, "six difference identities + three explicit traces", all(suite.values()))


def test_criterion_4_twobridge3_family():
    t0 = time.monotonic()
    ok = True
    for p in range(4, 23):
        if p % 3 == 0:
            continue
        rep = varieties.verify_twobridge3(p)
        ok = ok and rep.product_check and rep.certificates_ok()
        ok = ok and rep.component_count == 2
    elapsed = time.monotonic() - t0
    _report(4, "b(2p,3), p <= 22: closed form, 2 components, certificates",
            ok and elapsed < 300, elapsed)


def test_criterion_5_twisted_whitehead_family():
    t0 = time.monotonic()
    ok = True
    for k in range(0, 11):
        rep = varieties.verify_twisted_whitehead(k)
        n = (k + 1) // 2 if k % 2 else k // 2
        expected = n + 1 if k % 2 else n + 2
        ok = ok and rep.product_check and rep.certificates_ok()
        ok = ok and rep.component_count == expected
    elapsed = time.monotonic() - t0
    _report(5, "W_k, k <= 10: factor product, n+1 / n+2 components",
            ok and elapsed < 300, elapsed)


def test_criterion_6_pretzel_component_table():
    t0 = time.monotonic()
    ok = True
    for m in range(-4, 5):
        for n in range(-4, 5):
            rep = varieties.count_components_pretzel(m, n)
            expected = varieties.pretzel_table_count(m, n)
            ok = ok and rep.component_count == expected
            ok = ok and rep.product_check
            ok = ok and rep.certificates_ok()
            if (m, n) == (0, -1):
                ok = ok and rep.unlink
    q22 = links.pretzel_char_poly(2, 2).nonabelian
    ok = ok and q22 == (
        -(X**2) * Z**2 + X * Y * Z**3 + X * Y * Z - Y**2 * Z**2 - Z**4 + 3 * Z**2 - 1
    )
    elapsed = time.monotonic() - t0
    _report(6, "pretzel table on [-4,4]^2 with certificates and (2,2) value", ok, elapsed)


def test_criterion_7_z0_specialization():
    t0 = time.monotonic()
    ok = True
    for m in range(-4, 5):
        for n in range(-4, 5):
            q = links.pretzel_char_poly(m, n).nonabelian
            slice0 = q.substitute("z", q.ring.zero())
            sign = -1 if ((m - 1) * (n - 1)) % 2 else 1
            ok = ok and slice0 == sign * cheb_at(2 * m * n - 2 * m - n - 2, Y)
    elapsed = time.monotonic() - t0
    _report(7, "pretzel z = 0 slice = +-S_{2mn-2m-n-2}(y) on [-4,4]^2", ok, elapsed)


def test_criterion_8_numeric_oracle():
    t0 = time.monotonic()
    ok = True
    for seed in range(100):
        pair = numeric.random_rep(seed)
        ok = ok and abs(numeric.commutator_trace_check(pair)) < 1e-8
    for p, m in [(2, 1), (4, 3), (5, 3), (8, 3), (10, 3), (10, 7)]:
        link = links.TwoBridge(p, m)
        for seed in range(100):
            ok = ok and numeric.relator_residual(link, numeric.random_rep(seed)) < 1e-6
        if not ok:
            break
    elapsed = time.monotonic() - t0
    _report(8, "numeric oracle: commutator < 1e-8, relator < 1e-6, 100 seeds",
            ok and elapsed < 10, elapsed)


def test_criterion_9_whitehead_cross_consistency():
    q4 = links.twobridge3_nonabelian(4)
    ok = q4 == -(X * Y - GAMMA * Z)
    _report(9, "closed form of b(8,3) equals -(xy - gamma z)", ok)
