"""Explicit colored A-compositions and their minimal-variety readings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from minvar.multisets import VARIETY_FAMILIES, MultisetSpec, SpecError, atoms, coefficients

ORACLE_BOUND = 25


@dataclass(frozen=True)
class ColoredComposition:
    parts: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return sum(w for w, _ in self.parts)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for w, _ in self.parts)

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.parts)

    def __str__(self) -> str:
        return " ".join(f"({w},{c})" for w, c in self.parts) or "()"


@dataclass(frozen=True)
class VarietyDescriptor:
    atoms: tuple[str, ...]
    weights: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.weights)

    def __str__(self) -> str:
        return " * ".join(self.atoms) if self.atoms else "1"


def _multiplicities(spec: MultisetSpec, n: int) -> list[int]:
    if n < 1:
        return [0]
    return list(coefficients(spec, n))


def weight_compositions(mult: list[int], n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into parts k with mult[k] > 0, lexicographically."""
    parts = [k for k in range(1, n + 1) if mult[k] > 0]

    def rec(rest: int, prefix: tuple[int, ...]):
        if rest == 0:
            yield prefix
            return
        for k in parts:
            if k > rest:
                break
            yield from rec(rest - k, prefix + (k,))

    yield from rec(n, ())


def compositions(spec: MultisetSpec, n: int) -> Iterator[ColoredComposition]:
    """Every colored composition of n once, ordered by (weights, colors)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    mult = _multiplicities(spec, n)
    for ws in weight_compositions(mult, n):
        for cs in itertools.product(*(range(mult[w]) for w in ws)):
            yield ColoredComposition(tuple(zip(ws, cs)))


def count_by_enumeration(spec: MultisetSpec, n: int, bound: int = ORACLE_BOUND) -> int:
    """Brute-force count: walk every weight composition, multiply color choices.

    No memoisation, so the work is proportional to the number of uncolored
    compositions; hence the ``bound`` guard.
    """
    if n > bound:
        raise ValueError(f"n={n} exceeds the enumeration oracle bound {bound}")
    if n < 0:
        return 0
    mult = _multiplicities(spec, n)
    parts = [(k, mult[k]) for k in range(1, n + 1) if mult[k] > 0]

    def walk(rest: int) -> int:
        if rest == 0:
            return 1
        total = 0
        for k, m in parts:
            if k > rest:
                break
            total += m * walk(rest - k)
        return total

    return walk(n)


def to_variety(spec: MultisetSpec, comp: ColoredComposition) -> VarietyDescriptor:
    """Read a colored composition as a product of T-prime ideals."""
    if spec.family not in VARIETY_FAMILIES:
        raise SpecError(f"family {spec.family!r} has no variety semantics")
    labels = []
    cache: dict[int, list[str]] = {}
    for w, c in comp.parts:
        if w not in cache:
            cache[w] = atoms(spec, w)
        avail = cache[w]
        if not 0 <= c < len(avail):
            raise ValueError(f"color {c} invalid for weight {w} (a_{w} = {len(avail)})")
        labels.append(avail[c])
    return VarietyDescriptor(tuple(labels), comp.weights)
