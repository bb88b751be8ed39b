"""Gap structure of coefficient supports and numerical semigroups.

Only finite prefixes are inspected, so lacunarity is reported as a trend
("prefix-consistent"), never as a proven limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from minvar.multisets import MultisetSpec, coefficients

TREND_WINDOW = 5


@dataclass(frozen=True)
class GapProfile:
    """Maximal runs [p_i, q_i] of nonzero coefficients up to ``bound``."""

    bound: int
    blocks: tuple[tuple[int, int], ...]
    gaps: tuple[int, ...]  # p_{i+1} - q_i
    ratios: tuple[Fraction, ...]  # p_{i+1} / q_i
    trailing_min_gap: tuple[int, ...]  # min of the last `window` gaps at each i
    trailing_max_gap: tuple[int, ...]
    window: int = TREND_WINDOW

    @property
    def support(self) -> list[int]:
        return [k for p, q in self.blocks for k in range(p, q + 1)]

    @property
    def support_gaps(self) -> list[int]:
        """k_{i+1} - k_i over consecutive support elements."""
        s = self.support
        return [y - x for x, y in zip(s, s[1:])]

    @property
    def support_ratios(self) -> list[Fraction]:
        """k_{i+1} / k_i over consecutive support elements."""
        s = self.support
        return [Fraction(y, x) for x, y in zip(s, s[1:])]

    # Adjacent maximal blocks may be merged when choosing p_i, q_i, so only a
    # growing subsequence of gaps (ratios) is needed: judge by windowed maxima.
    def lacunary_verdict(self) -> str:
        return _trend_verdict(self.gaps, "lacunary", self.window)

    def strongly_lacunary_verdict(self) -> str:
        return _trend_verdict(self.ratios, "strongly lacunary", self.window)


def _trend_verdict(seq, what: str, w: int) -> str:
    if len(seq) < 3 * w:
        return f"too short to judge {what} trend"
    maxima = [max(seq[i : i + w]) for i in range(0, len(seq) - w + 1, w)]
    half = len(maxima) // 2
    if min(maxima[half:]) > max(maxima[:half]):
        return f"prefix-consistent with {what}"
    return f"prefix not consistent with {what}"


def blocks_of(support: list[int]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for k in support:
        if out and out[-1][1] == k - 1:
            out[-1] = (out[-1][0], k)
        else:
            out.append((k, k))
    return out


def gap_profile(spec: MultisetSpec, bound: int, window: int = TREND_WINDOW) -> GapProfile:
    a = coefficients(spec, bound)
    blocks = blocks_of([k for k, c in enumerate(a) if c])
    gaps = tuple(blocks[i + 1][0] - blocks[i][1] for i in range(len(blocks) - 1))
    ratios = tuple(Fraction(blocks[i + 1][0], blocks[i][1]) for i in range(len(blocks) - 1))
    windows = [gaps[max(0, i - window + 1) : i + 1] for i in range(len(gaps))]
    return GapProfile(
        bound,
        tuple(blocks),
        gaps,
        ratios,
        tuple(min(w) for w in windows),
        tuple(max(w) for w in windows),
        window,
    )


def max_gap_between(support: list[int], lo: int, hi: int) -> int:
    """Largest distance between consecutive support points in [lo, hi] (endpoints included)."""
    pts = [k for k in support if lo <= k <= hi]
    return max((y - x for x, y in zip(pts, pts[1:])), default=0)


def cohn_ratios(spec: MultisetSpec, bound: int) -> list[float | None]:
    """k_{i+1} / log(max(a_{k_1}, ..., a_{k_i})) along the support.

    Entries are ``None`` while the running maximum is 1 (log = 0); for
    0/1-coefficient families every entry is ``None`` and the condition is
    vacuous.
    """
    a = coefficients(spec, bound)
    supp = [k for k, c in enumerate(a) if c]
    out: list[float | None] = []
    running = 0
    for k, nxt in zip(supp, supp[1:]):
        running = max(running, a[k])
        out.append(nxt / math.log(running) if running > 1 else None)
    return out


class SemigroupGcdError(ValueError):
    def __init__(self, gcd: int):
        super().__init__(f"gcd={gcd}")
        self.gcd = gcd


@dataclass(frozen=True)
class SemigroupReport:
    generators: tuple[int, ...]
    frobenius: int | None
    conductor: int


def representable(generators: list[int], upto: int) -> list[bool]:
    """DP table: entry n is True iff n is a nonnegative combination of generators."""
    gens = sorted(set(generators))
    rep = [False] * (upto + 1)
    rep[0] = True
    for n in range(1, upto + 1):
        rep[n] = any(g <= n and rep[n - g] for g in gens)
    return rep


def conductor(generators: list[int]) -> SemigroupReport:
    """Frobenius number and conductor of the semigroup generated by ``generators``."""
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise ValueError("need at least one generator")
    if gens[0] < 1:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    g = 0
    for x in gens:
        g = math.gcd(g, x)
    if g != 1:
        raise SemigroupGcdError(g)
    smallest = gens[0]
    rep = [True]
    run = 0
    n = 0
    # a run of `smallest` consecutive representables closes everything above it
    while run < smallest:
        n += 1
        ok = any(x <= n and rep[n - x] for x in gens)
        rep.append(ok)
        run = run + 1 if ok else 0
    cond = n - smallest + 1
    return SemigroupReport(tuple(gens), cond - 1 if cond > 1 else None, cond)


def semigroup_of(spec: MultisetSpec, bound: int) -> SemigroupReport:
    """Semigroup generated by the support of a(t) up to ``bound``."""
    a = coefficients(spec, bound)
    return conductor([k for k, c in enumerate(a) if c])
