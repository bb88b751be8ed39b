"""Weight multisets A and their generating functions a(t) = sum a_k t^k.

The builtin families grade the T-prime varieties of associative algebras by
codimension exponent (``fg-codim``, ``codim``) or by the Gelfand-Kirillov
dimension of the d-generated relatively free algebra (``gk-fg``, ``gk``).
``factorial`` and ``zeta`` are the lacunary and small-radius test families;
``custom`` multisets are finite lists of (exponent, multiplicity) pairs.

Every family ships a certified majorant a_k <= C * k**p (or its own
geometric form for ``zeta``) so that tails of a(q) can be bounded exactly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from minvar.series import TruncatedSeries

FAMILIES = ("fg-codim", "codim", "gk-fg", "gk", "factorial", "zeta", "custom")
VARIETY_FAMILIES = ("fg-codim", "codim", "gk-fg", "gk")


class SpecError(ValueError):
    """Invalid multiset specification or spec string."""


@dataclass(frozen=True)
class TailMajorant:
    """a_k <= C * k**p for every k, or a finite / family-specific form."""

    form: str  # "finite", "power" or "zeta"
    C: int = 0
    p: int = 0
    radius: Fraction = Fraction(1)


@dataclass(frozen=True)
class MultisetSpec:
    family: str
    d: int | None = None
    n: int | None = None
    terms: tuple[tuple[int, int], ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpecError(f"unknown family {self.family!r}")
        if self.family in ("gk-fg", "gk"):
            if self.d is None or self.d < 2:
                raise SpecError(f"{self.family} needs d >= 2, got d={self.d}")
        if self.family == "zeta":
            if self.n is None or self.n < 1:
                raise SpecError(f"zeta needs n >= 1, got n={self.n}")
        if self.family == "custom":
            terms = tuple(sorted((int(e), int(m)) for e, m in self.terms))
            if not terms:
                raise SpecError("custom multiset needs at least one term")
            exps = [e for e, _ in terms]
            if len(set(exps)) != len(exps):
                raise SpecError("custom multiset exponents must be distinct")
            for e, m in terms:
                if e < 1 or m < 1:
                    raise SpecError(f"custom term ({e}, {m}): exponent and multiplicity must be >= 1")
            object.__setattr__(self, "terms", terms)

    @classmethod
    def custom(cls, terms, name: str = "") -> "MultisetSpec":
        return cls("custom", terms=tuple(tuple(t) for t in terms), name=name)

    def __str__(self) -> str:
        if self.family in ("gk-fg", "gk"):
            return f"{self.family}:d={self.d}"
        if self.family == "zeta":
            return f"zeta:n={self.n}"
        if self.family == "custom":
            body = ",".join(f"{e}x{m}" for e, m in self.terms)
            return f"custom({self.name})[{body}]" if self.name else f"custom[{body}]"
        return self.family

    @property
    def majorant(self) -> TailMajorant:
        f = self.family
        if f == "custom":
            return TailMajorant("finite")
        if f == "zeta":
            return TailMajorant("zeta", C=1, p=0, radius=Fraction(1, 2))
        if f == "codim":
            # 1 + floor(sqrt(k)/2) <= k; k = m^2 and k = 2m^2 never coincide
            return TailMajorant("power", C=1, p=1)
        if f == "gk":
            # 2 + #{a <= b} <= 2 + sqrt(k/2) <= 2k
            return TailMajorant("power", C=2, p=1)
        return TailMajorant("power", C=1, p=0)

    @property
    def radius(self) -> Fraction:
        return self.majorant.radius

    @property
    def max_exponent(self) -> int | None:
        return self.terms[-1][0] if self.family == "custom" else None


def parse_spec(text: str) -> MultisetSpec:
    """Parse ``fg-codim``, ``codim``, ``gk-fg:d=3``, ``gk:d=2``, ``factorial``,
    ``zeta:n=1`` or ``file:<path>``."""
    text = text.strip()
    if text.startswith("file:"):
        return load_custom(text[len("file:") :])
    head, _, rest = text.partition(":")
    if head in ("fg-codim", "codim", "factorial") and not rest:
        return MultisetSpec(head)
    if head in ("gk-fg", "gk", "zeta"):
        key = "n" if head == "zeta" else "d"
        k, eq, v = rest.partition("=")
        if k != key or not eq:
            raise SpecError(f"expected {head}:{key}=<int>, got {text!r}")
        try:
            val = int(v)
        except ValueError:
            raise SpecError(f"{key} must be an integer, got {v!r}") from None
        return MultisetSpec(head, **{key: val})
    raise SpecError(f"cannot parse multiset spec {text!r}")


def load_custom(path: str | Path) -> MultisetSpec:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON ({exc.msg})") from None
    if not isinstance(doc, dict) or "terms" not in doc:
        raise SpecError(f"{path}: expected an object with 'name' and 'terms'")
    terms = doc["terms"]
    if not isinstance(terms, list) or not all(
        isinstance(t, list) and len(t) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in t)
        for t in terms
    ):
        raise SpecError(f"{path}: 'terms' must be a list of [exponent, multiplicity] integer pairs")
    return MultisetSpec.custom(terms, name=str(doc.get("name", "")))


def dump_custom(spec: MultisetSpec) -> str:
    return json.dumps({"name": spec.name, "terms": [list(t) for t in spec.terms]})


def _codim_pairs(s: int) -> list[tuple[int, int]]:
    return [(a, s - a) for a in range(1, s // 2 + 1)]


def _gk_pairs(d: int, k: int) -> list[tuple[int, int]]:
    """(a, b) with 1 <= a <= b and (d-1)(a^2+b^2) + 2 == k."""
    r, rem = divmod(k - 2, d - 1)
    if k < 2 or rem:
        return []
    out = []
    a = 1
    while 2 * a * a <= r:
        b = math.isqrt(r - a * a)
        if b * b == r - a * a:
            out.append((a, b))
        a += 1
    return out


def coefficients(spec: MultisetSpec, order: int) -> TruncatedSeries:
    """a(t) truncated at t^order."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    N = order
    a = [0] * (N + 1)
    f = spec.family
    if f in ("fg-codim", "codim"):
        m = 1
        while m * m <= N:
            a[m * m] += 1
            m += 1
        if f == "codim":
            m = 1
            while 2 * m * m <= N:
                a[2 * m * m] += 1
                m += 1
            s = 2
            while s * s <= N:
                a[s * s] += s // 2
                s += 1
    elif f in ("gk-fg", "gk"):
        d = spec.d
        w = 2 if f == "gk" else 1
        m = 1
        while (d - 1) * m * m + 1 <= N:
            a[(d - 1) * m * m + 1] += w
            m += 1
        if f == "gk":
            x = 1
            while (d - 1) * 2 * x * x + 2 <= N:
                y = x
                while (k := (d - 1) * (x * x + y * y) + 2) <= N:
                    a[k] += 1
                    y += 1
                x += 1
    elif f == "factorial":
        j, fact = 1, 1
        while fact <= N:
            a[fact] += 1
            j += 1
            fact *= j
    elif f == "zeta":
        e = 2 * spec.n
        for k in range(2, N + 1):
            a[k] = (1 << k) // k**e
    else:
        for e, mult in spec.terms:
            if e <= N:
                a[e] += mult
    return TruncatedSeries(a)


def atoms(spec: MultisetSpec, k: int) -> list[str]:
    """Labels of the a_k generators of weight k, in the fixed color order.

    codim: M_m(K), then M_m(E), then M_{a,b} by ascending a.
    gk: the K-type then E-type atom of weight (d-1)m^2+1, then M_{a,b}.
    """
    f = spec.family
    if f not in VARIETY_FAMILIES:
        raise SpecError(f"family {f!r} has no variety semantics")
    out = []
    if f in ("fg-codim", "codim"):
        m = math.isqrt(k)
        if k >= 1 and m * m == k:
            out.append(f"M_{m}(K)")
        if f == "codim":
            if k % 2 == 0:
                h = math.isqrt(k // 2)
                if h >= 1 and 2 * h * h == k:
                    out.append(f"M_{h}(E)")
            if k >= 4 and m * m == k:
                out.extend(f"M_{{{a},{b}}}" for a, b in _codim_pairs(m))
        return out
    d = spec.d
    r, rem = divmod(k - 1, d - 1)
    m = math.isqrt(r) if k >= 2 and not rem else 0
    if m >= 1 and m * m == r:
        out.append(f"M_{m}(K)")
        if f == "gk":
            out.append(f"M_{m}(E)")
    if f == "gk":
        out.extend(f"M_{{{a},{b}}}" for a, b in _gk_pairs(d, k))
    return out


def support(spec: MultisetSpec, bound: int) -> list[int]:
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    return [k for k, c in enumerate(coefficients(spec, bound)) if c > 0]


def support_gcd(spec: MultisetSpec, bound: int) -> int:
    supp = support(spec, bound)
    if not supp:
        raise ValueError(f"support of {spec} is empty up to {bound}; raise the bound")
    g = 0
    for k in supp:
        g = math.gcd(g, k)
        if g == 1:
            break
    return g


def true_gcd(spec: MultisetSpec) -> int:
    """gcd of the whole (possibly infinite) support.

    Every builtin family has gcd 1: 1 is in the support of fg-codim, codim
    and factorial; gk-fg(d) has d, 4d-3 and 9d-8 with gcd(d, 3, 8) = 1, and
    gk(d) contains those too; zeta(n) contains two consecutive integers once
    2^k >= k^(2n).
    """
    if spec.family == "custom":
        g = 0
        for e, _ in spec.terms:
            g = math.gcd(g, e)
        return g
    return 1


def tail_bound(spec: MultisetSpec, q: Fraction, order: int) -> Fraction:
    """Certified upper bound for sum_{k > order} a_k q^k, 0 < q < radius."""
    q = Fraction(q)
    maj = spec.majorant
    if spec.family == "custom":
        # finite support: the remainder is an exact finite sum
        if q < 0:
            raise ValueError(f"q must be positive, got {q}")
        return sum((Fraction(m) * q**e for e, m in spec.terms if e > order), Fraction(0))
    if not 0 < q < maj.radius:
        raise ValueError(f"q={q} outside (0, {maj.radius}) for {spec}")
    N = order
    if maj.form == "zeta":
        x = 2 * q
        return x ** (N + 1) / ((1 - x) * Fraction(N + 1) ** (2 * spec.n))
    head = q ** (N + 1)
    if maj.p == 0:
        return maj.C * head / (1 - q)
    return maj.C * head * ((N + 1) - N * q) / (1 - q) ** 2


def tail_bound_at_radius(spec: MultisetSpec, order: int) -> Fraction | None:
    """Upper bound for sum_{k > order} a_k rho^k at the radius rho itself.

    ``None`` when the series diverges there (all radius-1 builtin families).
    """
    if spec.family == "custom":
        return tail_bound(spec, Fraction(1), order)
    if spec.family == "zeta":
        # a_k 2^-k <= k^(-2n); integral comparison for the p-series tail
        e = 2 * spec.n
        N = max(order, 1)
        return Fraction(1, (e - 1) * N ** (e - 1))
    return None
