"""Truncated power series with exact integer coefficients.

Only the handful of operations needed for b(t) = 1/(1 - a(t)) live here:
addition, Cauchy product, the composition-counting reciprocal and exact
evaluation of partial sums at nonnegative rationals.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 t + ... + c_N t^N + O(t^(N+1))."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        cs = [int(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError(f"order must be nonnegative, got {order}")
            cs = (cs + [0] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1] + [0] * order)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]], order: int) -> "TruncatedSeries":
        """Build from (exponent, coefficient) pairs, dropping exponents above ``order``."""
        cs = [0] * (order + 1)
        for k, c in terms:
            if 0 <= k <= order:
                cs[k] += c
        return cls(cs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def nonzero(self) -> list[tuple[int, int]]:
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-c for c in self.coeffs)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, -other)


def add(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    n = min(x.order, y.order)
    return TruncatedSeries(x.coeffs[k] + y.coeffs[k] for k in range(n + 1))


def mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    n = min(x.order, y.order)
    out = [0] * (n + 1)
    ys = [(j, c) for j, c in enumerate(y.coeffs[: n + 1]) if c]
    for i, a in enumerate(x.coeffs[: n + 1]):
        if not a:
            continue
        for j, b in ys:
            if i + j > n:
                break
            out[i + j] += a * b
    return TruncatedSeries(out)


def one_minus(a: TruncatedSeries) -> TruncatedSeries:
    return add(TruncatedSeries.one(a.order), -a)


def recip_one_minus(a: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """Coefficients of 1/(1 - a(t)) up to ``order``.

    b_n counts the colored compositions of n whose parts of weight k come in
    a_k colors:  b_0 = 1,  b_n = sum_{k=1..n} a_k b_{n-k}.

    ``a`` must have zero constant term. Negative coefficients are accepted
    but trigger a ``RuntimeWarning`` since the result no longer counts
    anything.
    """
    if order is None:
        order = a.order
    if order > a.order:
        raise ValueError(f"order {order} exceeds the order {a.order} of a(t)")
    if a.coeffs[0] != 0:
        raise ValueError(f"a(t) must have zero constant term, got {a.coeffs[0]}")
    terms = [(k, c) for k, c in enumerate(a.coeffs[1 : order + 1], start=1) if c]
    if any(c < 0 for _, c in terms):
        warnings.warn("a(t) has negative coefficients; b_n are not counts", RuntimeWarning)

    b = [0] * (order + 1)
    b[0] = 1
    for n in range(1, order + 1):
        s = 0
        for k, c in terms:
            if k > n:
                break
            s += c * b[n - k]
        b[n] = s
    return TruncatedSeries(b)


def eval_lower(x: TruncatedSeries | Sequence[int], q: Fraction | int) -> Fraction:
    """Exact value of the partial sum sum_k c_k q^k.

    With nonnegative coefficients this is a lower bound for the full series.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"evaluation point must be nonnegative, got {q}")
    cs = x.coeffs if isinstance(x, TruncatedSeries) else tuple(x)
    top = len(cs) - 1
    while top > 0 and cs[top] == 0:
        top -= 1
    p, d = q.numerator, q.denominator
    # Horner in p on the homogenised polynomial sum c_k p^k d^(top-k)
    h = cs[top]
    dpow = 1
    for k in range(top - 1, -1, -1):
        dpow *= d
        h = h * p + cs[k] * dpow
    return Fraction(h, dpow)
