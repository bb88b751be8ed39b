"""Growth of b_n: exact sequences, nth-root tables and certified brackets for
the positive root alpha of a(t) = 1, with beta = lim b_n^(1/n) = 1/alpha.

Certification is exact rational arithmetic throughout. For nonnegative
coefficients a partial sum is a lower bound for a(q), so

* ``eval_lower(a_N, q) >= 1``                      certifies a(q) >= 1,
* ``eval_lower(a_N, q) + tail_bound(q, N) < 1``    certifies a(q) < 1,

and a(t) is increasing on (0, rho), so the root sits between a certified
"below" point and a certified "above" point.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction

from minvar.multisets import (
    MultisetSpec,
    coefficients,
    tail_bound,
    tail_bound_at_radius,
    true_gcd,
)
from minvar.series import TruncatedSeries, eval_lower, recip_one_minus

DEFAULT_MAX_ORDER = 1_000_000
INITIAL_ORDER = 64
ROOT_DIGITS = 20


class CertificationError(RuntimeError):
    """The solver could not certify a probe within the configured max order."""


def max_order_from_env() -> int:
    raw = os.environ.get("MINVAR_MAX_ORDER")
    if not raw:
        return DEFAULT_MAX_ORDER
    try:
        val = int(raw)
    except ValueError:
        raise ValueError(f"MINVAR_MAX_ORDER must be an integer, got {raw!r}") from None
    if val < 1:
        raise ValueError(f"MINVAR_MAX_ORDER must be positive, got {val}")
    return val


def b_sequence(spec: MultisetSpec, order: int) -> list[int]:
    """b_0..b_order: numbers of colored A-compositions of each n."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    if order == 0:
        return [1]
    return list(recip_one_minus(coefficients(spec, order)))


def nth_root(b: int, n: int, digits: int = ROOT_DIGITS) -> Decimal:
    """b**(1/n) to ``digits`` significant digits (b >= 1, n >= 1)."""
    ctx = Context(prec=digits + 10)
    r = ctx.exp(ctx.divide(ctx.ln(Decimal(b)), n))
    return Context(prec=digits).plus(r)


@dataclass(frozen=True)
class RootRow:
    n: int
    b: int
    root: Decimal | None


@dataclass(frozen=True)
class RootsTable:
    rows: tuple[RootRow, ...]
    step: int = 1

    def __iter__(self):
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> RootRow:
        return self.rows[i]

    def row(self, n: int) -> RootRow:
        for r in self.rows:
            if r.n == n:
                return r
        raise KeyError(n)


def _rows(bs: list[int], ns, digits: int) -> tuple[RootRow, ...]:
    return tuple(RootRow(n, bs[n], nth_root(bs[n], n, digits) if bs[n] > 0 else None) for n in ns)


def roots_table(spec: MultisetSpec, order: int, digits: int = ROOT_DIGITS) -> RootsTable:
    """Rows (n, b_n, b_n^(1/n)) for n = 1..order; rows with b_n = 0 carry no root."""
    bs = b_sequence(spec, order)
    return RootsTable(_rows(bs, range(1, order + 1), digits))


def gcd_subsequence_roots(spec: MultisetSpec, order: int, digits: int = ROOT_DIGITS) -> RootsTable:
    """Roots b_n^(1/n) along n = d, 2d, ... where d is the gcd of the support."""
    d = true_gcd(spec)
    bs = b_sequence(spec, order)
    return RootsTable(_rows(bs, range(d, order + 1, d), digits), step=d)


@dataclass(frozen=True)
class RootBracket:
    """Certified location of the positive root of a(t) = 1.

    ``verdict`` is ``"bracketed"`` (alpha in [alpha_lo, alpha_hi]) or
    ``"no-root-below-radius"`` (a(t) <= certified_sup < 1 on (0, rho)).
    Witness pairs are (truncation order, certified value) at each endpoint:
    partial sum plus tail at alpha_lo, bare partial sum at alpha_hi.
    """

    verdict: str
    rho: Fraction
    alpha_lo: Fraction | None = None
    alpha_hi: Fraction | None = None
    lo_order: int = 0
    lo_value: Fraction | None = None
    hi_order: int = 0
    hi_value: Fraction | None = None
    certified_sup: Fraction | None = None
    sup_order: int = 0

    @property
    def bracketed(self) -> bool:
        return self.verdict == "bracketed"

    @property
    def width(self) -> Fraction:
        return self.alpha_hi - self.alpha_lo

    @property
    def midpoint(self) -> Fraction:
        return (self.alpha_lo + self.alpha_hi) / 2


def _upper_at(spec: MultisetSpec, a: TruncatedSeries, q: Fraction, N: int) -> Fraction:
    if q == 0:
        return Fraction(0)
    return eval_lower(a, q) + tail_bound(spec, q, N)


def solve_alpha(
    spec: MultisetSpec,
    eps: Fraction | str | float,
    max_order: int | None = None,
    initial_order: int = INITIAL_ORDER,
) -> RootBracket:
    """Certified bracket of width <= eps around the root of a(t) = 1.

    Bisection on exact rationals over [0, rho]. Each probe q is classified
    as above (partial sum >= 1) or below (partial sum + tail < 1); when
    neither certificate fires the truncation order is doubled. Raises
    CertificationError once the order would exceed ``max_order``.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if max_order is None:
        max_order = max_order_from_env()
    rho = spec.radius
    N = max(initial_order, spec.max_exponent or 0)
    if N > max_order:
        raise CertificationError(f"initial order {N} already exceeds max order {max_order}")
    a = coefficients(spec, N)

    def raise_order():
        nonlocal N, a
        if N >= max_order:
            raise CertificationError(
                f"{spec}: cannot certify within max order {max_order} (eps={eps})"
            )
        N = min(2 * N, max_order)
        a = coefficients(spec, N)

    # decide the right endpoint: a(rho) >= 1, or no root at all
    while True:
        s = eval_lower(a, rho)
        if s >= 1:
            hi, hi_order, hi_value = rho, N, s
            break
        t = tail_bound_at_radius(spec, N)
        if t is not None and s + t < 1:
            return RootBracket("no-root-below-radius", rho, certified_sup=s + t, sup_order=N)
        raise_order()

    lo, lo_order, lo_value = Fraction(0), 0, Fraction(0)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        while True:
            s = eval_lower(a, mid)
            if s >= 1:
                hi, hi_order, hi_value = mid, N, s
                break
            u = s + tail_bound(spec, mid, N)
            if u < 1:
                lo, lo_order, lo_value = mid, N, u
                break
            raise_order()
    return RootBracket(
        "bracketed", rho, lo, hi, lo_order, lo_value, hi_order, hi_value
    )


def verify_bracket(spec: MultisetSpec, rb: RootBracket) -> bool:
    """Re-check the stored certificates from scratch."""
    if rb.verdict == "no-root-below-radius":
        a = coefficients(spec, max(rb.sup_order, 1))
        t = tail_bound_at_radius(spec, rb.sup_order)
        if t is None:
            return False
        sup = eval_lower(a, rb.rho) + t
        return sup == rb.certified_sup and sup < 1
    if not 0 <= rb.alpha_lo <= rb.alpha_hi <= rb.rho:
        return False
    hi_val = eval_lower(coefficients(spec, max(rb.hi_order, 1)), rb.alpha_hi)
    if hi_val < 1 or hi_val != rb.hi_value:
        return False
    if rb.alpha_lo == 0:
        return True
    lo_val = _upper_at(spec, coefficients(spec, max(rb.lo_order, 1)), rb.alpha_lo, rb.lo_order)
    return lo_val < 1 and lo_val == rb.lo_value


def beta_bracket(rb: RootBracket) -> tuple[Fraction, Fraction]:
    """(1/alpha_hi, 1/alpha_lo) for a bracketed root."""
    if not rb.bracketed:
        raise ValueError(
            f"no root below the radius; beta falls back to 1/rho = {1 / rb.rho} (not certified here)"
        )
    if rb.alpha_lo == 0:
        raise ValueError("bracket reaches 0; beta has no finite upper bound")
    return 1 / rb.alpha_hi, 1 / rb.alpha_lo


def fallback_beta(rb: RootBracket) -> Fraction:
    """beta = 1/rho when a(t) stays below 1 on the whole disc of convergence."""
    return 1 / rb.rho
