import dataclasses
import math
from decimal import ROUND_DOWN, Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minvar.analysis import semigroup_of
from minvar.growth import (
    CertificationError,
    RootBracket,
    b_sequence,
    beta_bracket,
    fallback_beta,
    gcd_subsequence_roots,
    max_order_from_env,
    nth_root,
    roots_table,
    solve_alpha,
    verify_bracket,
)
from minvar.multisets import MultisetSpec, coefficients, parse_spec
from minvar.series import eval_lower

from oracles import fib

PAPER_ROOTS = [1, 1, 1, 1.1892, 1.2457, 1.2599, 1.2584, 1.2753, 1.3052, 1.3195,
               1.3244, 1.3276, 1.3355, 1.3428, 1.3478, 1.3515]


def contains_golden(lo: Fraction, hi: Fraction) -> bool:
    # x <= (sqrt5 - 1)/2  <=>  (2x + 1)^2 <= 5  for x >= 0
    return (2 * lo + 1) ** 2 < 5 < (2 * hi + 1) ** 2


def test_b_sequence_examples():
    assert b_sequence(MultisetSpec("fg-codim"), 10) == [1, 1, 1, 1, 2, 3, 4, 5, 7, 11, 16]
    assert b_sequence(MultisetSpec.custom([(1, 1), (2, 1)]), 6) == [1, 1, 2, 3, 5, 8, 13]
    assert b_sequence(MultisetSpec.custom([(2, 1), (4, 1)]), 5) == [1, 0, 1, 0, 2, 0]
    assert b_sequence(MultisetSpec("codim"), 0) == [1]
    with pytest.raises(ValueError):
        b_sequence(MultisetSpec("codim"), -1)


def test_roots_table_fg_codim():
    table = roots_table(MultisetSpec("fg-codim"), 24)
    roots = [float(r.root) for r in table]
    for got, paper in zip(roots, PAPER_ROOTS):
        assert abs(got - paper) <= 2e-4
    # the printed values are the exact roots truncated to four decimals
    truncated = [r.root.quantize(Decimal("0.0001"), rounding=ROUND_DOWN) for r in table]
    assert truncated[:16] == [Decimal(str(p)).quantize(Decimal("0.0001")) for p in PAPER_ROOTS]
    assert truncated[23] == Decimal("1.3732")
    assert table.row(7).b == 5


def test_roots_table_trivial():
    table = roots_table(MultisetSpec.custom([(1, 1)]), 5)
    assert [r.root for r in table] == [Decimal(1)] * 5


def test_roots_table_zero_rows_have_no_root():
    table = roots_table(MultisetSpec.custom([(2, 1), (4, 1)]), 7)
    assert [r.root is None for r in table] == [True, False] * 3 + [True]


@pytest.mark.parametrize("n", [1, 3, 17, 200, 999, 2000])
def test_nth_root_relative_error(n):
    b = b_sequence(MultisetSpec("codim"), 2000)[n]
    r = Fraction(nth_root(b, n))
    lo, hi = r * (1 - Fraction(1, 10**9)), r * (1 + Fraction(1, 10**9))
    assert lo**n < b < hi**n


def test_gcd_subsequence_roots():
    even = gcd_subsequence_roots(MultisetSpec.custom([(2, 1)]), 12)
    assert even.step == 2
    assert [r.n for r in even] == [2, 4, 6, 8, 10, 12]
    assert all(r.root == 1 for r in even)

    spec = MultisetSpec.custom([(2, 1), (4, 1)])
    sub = gcd_subsequence_roots(spec, 40)
    assert [r.b for r in sub] == [fib(m + 1) for m in range(1, 21)]

    fg = MultisetSpec("fg-codim")
    assert gcd_subsequence_roots(fg, 30) == roots_table(fg, 30)


def test_golden_ratio_bracket(fib_spec):
    rb = solve_alpha(fib_spec, Fraction(1, 10**9))
    assert rb.bracketed
    assert rb.width <= Fraction(1, 10**9)
    assert contains_golden(rb.alpha_lo, rb.alpha_hi)
    assert verify_bracket(fib_spec, rb)
    b_lo, b_hi = beta_bracket(rb)
    assert b_lo <= Fraction(16180339887, 10**10) <= b_hi


def test_fg_codim_bracket():
    spec = MultisetSpec("fg-codim")
    rb = solve_alpha(spec, "1e-6")
    assert rb.width <= Fraction(1, 10**6)
    assert abs(float(rb.midpoint) - 0.7054) <= 5e-4
    assert verify_bracket(spec, rb)
    # independent float check of a(lo) < 1 < a(hi)
    a = lambda t: sum(t ** (m * m) for m in range(1, 200))
    assert a(float(rb.alpha_lo)) < 1 < a(float(rb.alpha_hi))


@pytest.mark.parametrize("text", ["codim", "gk-fg:d=2", "gk:d=2", "gk:d=3", "factorial"])
def test_builtin_brackets_verify(text):
    spec = parse_spec(text)
    rb = solve_alpha(spec, "1e-8")
    assert rb.bracketed and 0 < rb.alpha_lo < rb.alpha_hi < 1
    assert verify_bracket(spec, rb)


def test_zeta_no_root():
    for n, cap in ((1, Fraction(645, 1000)), (2, Fraction(824, 10000))):
        spec = MultisetSpec("zeta", n=n)
        rb = solve_alpha(spec, "1e-6")
        assert rb.verdict == "no-root-below-radius"
        assert rb.rho == Fraction(1, 2)
        assert rb.certified_sup < cap
        assert verify_bracket(spec, rb)
        assert fallback_beta(rb) == 2
        with pytest.raises(ValueError):
            beta_bracket(rb)


def test_root_at_radius():
    spec = MultisetSpec.custom([(1, 1)])
    rb = solve_alpha(spec, Fraction(1, 10**9))
    assert rb.alpha_hi == 1 and rb.alpha_lo < 1
    assert rb.width <= Fraction(1, 10**9)
    assert rb.hi_value == 1
    assert verify_bracket(spec, rb)


def test_exact_dyadic_root():
    spec = MultisetSpec.custom([(1, 2)])
    rb = solve_alpha(spec, Fraction(1, 2**20))
    assert rb.alpha_lo < Fraction(1, 2) <= rb.alpha_hi


def test_beta_bracket_examples():
    rb = RootBracket("bracketed", Fraction(1), Fraction("0.70535"), Fraction("0.70545"))
    lo, hi = beta_bracket(rb)
    assert lo <= Fraction("1.4176") <= hi
    assert abs(float(lo) - 1.41754) < 1e-5 and abs(float(hi) - 1.41774) < 1e-5
    one = RootBracket("bracketed", Fraction(1), Fraction(1), Fraction(1))
    assert beta_bracket(one) == (1, 1)
    with pytest.raises(ValueError):
        beta_bracket(RootBracket("bracketed", Fraction(1), Fraction(0), Fraction(1)))


def test_certification_failure():
    with pytest.raises(CertificationError):
        solve_alpha(MultisetSpec("fg-codim"), Fraction(1, 10**40), max_order=64)
    with pytest.raises(ValueError):
        solve_alpha(MultisetSpec("fg-codim"), 0)


def test_max_order_env(monkeypatch):
    monkeypatch.delenv("MINVAR_MAX_ORDER", raising=False)
    assert max_order_from_env() == 1_000_000
    monkeypatch.setenv("MINVAR_MAX_ORDER", "100")
    assert max_order_from_env() == 100
    with pytest.raises(CertificationError):
        solve_alpha(MultisetSpec("fg-codim"), Fraction(1, 10**40))
    monkeypatch.setenv("MINVAR_MAX_ORDER", "lots")
    with pytest.raises(ValueError):
        max_order_from_env()


def test_tampered_bracket_fails_verification():
    spec = MultisetSpec("fg-codim")
    rb = solve_alpha(spec, "1e-6")
    assert not verify_bracket(spec, dataclasses.replace(rb, alpha_hi=rb.alpha_lo))
    assert not verify_bracket(spec, dataclasses.replace(rb, alpha_lo=rb.alpha_hi))
    assert not verify_bracket(spec, dataclasses.replace(rb, lo_order=8))


def test_supermultiplicativity(builtin):
    b = b_sequence(builtin, 120)
    for m in range(61):
        for n in range(61):
            assert b[m + n] >= b[m] * b[n]


def test_eventual_positivity(builtin):
    rep = semigroup_of(builtin, 200)
    b = b_sequence(builtin, rep.conductor + 100)
    assert all(x >= 1 for x in b[rep.conductor :])


def test_convergence_consistency():
    spec = MultisetSpec("fg-codim")
    root200 = float(roots_table(spec, 200).row(200).root)
    lo, hi = beta_bracket(solve_alpha(spec, "1e-6"))
    assert abs(root200 - float((lo + hi) / 2)) <= 0.01


@settings(max_examples=40, deadline=None)
@given(
    text=st.sampled_from(["fg-codim", "codim", "gk:d=2", "factorial"]),
    x=st.fractions(min_value=0, max_value=Fraction(99, 100)),
    y=st.fractions(min_value=0, max_value=Fraction(99, 100)),
)
def test_partial_sums_monotone(text, x, y):
    q1, q2 = sorted((x, y))
    a = coefficients(parse_spec(text), 80)
    assert eval_lower(a, q1) <= eval_lower(a, q2)


def test_gcd_two_solver_matches_substitution():
    even = solve_alpha(MultisetSpec.custom([(2, 1), (4, 1)]), Fraction(1, 10**9))
    golden = solve_alpha(MultisetSpec.custom([(1, 1), (2, 1)]), Fraction(1, 10**9))
    # alpha for t^2 + t^4 is the square root of alpha for t + t^2
    assert even.alpha_lo**2 <= golden.alpha_hi and golden.alpha_lo <= even.alpha_hi**2
    beta = math.sqrt((1 + math.sqrt(5)) / 2)
    b_lo, b_hi = beta_bracket(even)
    assert b_lo <= beta <= b_hi
