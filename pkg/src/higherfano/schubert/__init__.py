"""Schubert calculus on Gr(k, n) and on the isotropic Grassmannians
OG+(k, 2k) and SG(k, 2k) seen through restriction from Gr(k, 2k).

Classes are exact: coefficients are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from ._kernel import BACKEND, lr_coefficient

Partition = tuple  # weakly decreasing positive ints, no trailing zeros

__all__ = [
    "BACKEND",
    "Flavor",
    "GrClass",
    "RestrictedClass",
    "complement",
    "conjugate",
    "fits",
    "lr_coefficient",
    "lr_multiply",
    "pair_to_point",
    "partition",
    "partitions_in_box",
    "passes_filter",
    "pieri",
    "restrict",
    "restricted_multiply",
    "restricted_multiply_pieri",
    "restricted_pair",
    "staircase",
    "filtered_partitions",
]


class AmbientMismatch(ValueError):
    pass


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a partition tuple, dropping zeros."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{p} is not weakly decreasing")
    return tuple(x for x in p if x)


def parse_partition(text: str) -> Partition:
    """Parse the literal ``[3,2,1,1]`` (brackets optional, ``[]`` is empty)."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return ()
    try:
        return partition(int(x) for x in body.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition literal {text!r}: {exc}") from None


def fits(lam: Partition, k: int, n: int) -> bool:
    return len(lam) <= k and (not lam or lam[0] <= n - k)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def complement(lam: Partition, k: int, n: int) -> Partition:
    """The Poincare dual partition inside the k x (n-k) rectangle."""
    if not fits(lam, k, n):
        raise ValueError(f"{lam} does not fit Gr({k},{n})")
    padded = tuple(lam) + (0,) * (k - len(lam))
    return partition((n - k) - padded[k - 1 - i] for i in range(k))


def partitions_in_box(rows: int, cols: int, size: int | None = None) -> list[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``cols``."""
    out: list[Partition] = []

    def rec(prefix: list[int], cap: int) -> None:
        out.append(tuple(prefix))
        if len(prefix) == rows:
            return
        for x in range(1, cap + 1):
            prefix.append(x)
            rec(prefix, x)
            prefix.pop()

    rec([], cols)
    if size is not None:
        out = [p for p in out if sum(p) == size]
    return sorted(out, key=lambda p: (sum(p), p))


def _between(lower: Partition, k: int, cols: int, size: int) -> Iterator[Partition]:
    """Partitions nu in the box with |nu| = size and nu containing ``lower``."""
    low = tuple(lower) + (0,) * (k - len(lower))

    def rec(i: int, cap: int, left: int, prefix: list[int]) -> Iterator[Partition]:
        if i == k:
            if left == 0:
                yield partition(prefix)
            return
        # remaining rows can hold at most cap * (k - i) boxes
        for x in range(min(cap, left), low[i] - 1, -1):
            rest_min = sum(low[i + 1:])
            if left - x < rest_min or left - x > x * (k - i - 1):
                continue
            prefix.append(x)
            yield from rec(i + 1, x, left - x, prefix)
            prefix.pop()

    yield from rec(0, cols, size, [])


@lru_cache(maxsize=None)
def _product_terms(lam: Partition, mu: Partition, k: int, cols: int) -> tuple:
    size = sum(lam) + sum(mu)
    lower = tuple(max(a, b) for a, b in zip(lam + (0,) * k, mu + (0,) * k))[:k]
    terms = []
    for nu in _between(partition(lower), k, cols, size):
        c = lr_coefficient(nu, lam, mu)
        if c:
            terms.append((nu, c))
    return tuple(terms)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


@dataclass(frozen=True, eq=False)
class GrClass:
    """A homogeneous rational combination of Schubert classes in Gr(k, n)."""

    k: int
    n: int
    terms: Mapping[Partition, Fraction] = field(default_factory=dict)
    codim: int | None = None

    def __post_init__(self) -> None:
        if not 0 <= self.k <= self.n:
            raise ValueError(f"bad Grassmannian Gr({self.k},{self.n})")
        clean = {}
        for lam, c in self.terms.items():
            lam = partition(lam)
            c = _frac(c)
            if not fits(lam, self.k, self.n):
                raise ValueError(f"{lam} does not fit Gr({self.k},{self.n})")
            if c:
                clean[lam] = clean.get(lam, Fraction(0)) + c
        clean = {lam: c for lam, c in clean.items() if c}
        weights = {sum(lam) for lam in clean}
        if len(weights) > 1:
            raise ValueError(f"inhomogeneous class, degrees {sorted(weights)}")
        codim = weights.pop() if weights else self.codim
        if self.codim is not None and codim != self.codim:
            raise ValueError(f"declared codim {self.codim} but terms have degree {codim}")
        object.__setattr__(self, "terms", dict(sorted(clean.items())))
        object.__setattr__(self, "codim", codim)

    @classmethod
    def schubert(cls, k: int, n: int, lam: Iterable[int] = ()) -> "GrClass":
        lam = partition(lam)
        return cls(k, n, {lam: Fraction(1)})

    @classmethod
    def zero(cls, k: int, n: int, codim: int | None = None) -> "GrClass":
        return cls(k, n, {}, codim)

    @property
    def ambient(self) -> tuple[int, int]:
        return (self.k, self.n)

    def coefficient(self, lam: Iterable[int]) -> Fraction:
        return self.terms.get(partition(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "GrClass") -> None:
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"Gr{self.ambient} vs Gr{other.ambient}")

    def __add__(self, other: "GrClass") -> "GrClass":
        self._check(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        t = dict(self.terms)
        for lam, c in other.terms.items():
            t[lam] = t.get(lam, Fraction(0)) + c
        return GrClass(self.k, self.n, t, self.codim if self.codim == other.codim else None)

    def __neg__(self) -> "GrClass":
        return GrClass(self.k, self.n, {l: -c for l, c in self.terms.items()}, self.codim)

    def __sub__(self, other: "GrClass") -> "GrClass":
        return self + (-other)

    def scale(self, s) -> "GrClass":
        s = _frac(s)
        return GrClass(self.k, self.n, {l: s * c for l, c in self.terms.items()}, self.codim)

    def __rmul__(self, s) -> "GrClass":
        return self.scale(s)

    def __mul__(self, other):
        if isinstance(other, GrClass):
            return lr_multiply(self, other)
        return self.scale(other)

    def __pow__(self, e: int) -> "GrClass":
        out = GrClass.schubert(self.k, self.n)
        for _ in range(e):
            out = lr_multiply(out, self)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrClass):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ambient, tuple(self.terms.items())))

    def __repr__(self) -> str:
        return f"GrClass({self.k},{self.n}: {format_terms(self.terms)})"


def format_partition(lam: Partition) -> str:
    return "s[" + ",".join(map(str, lam)) + "]"


def format_terms(terms: Mapping[Partition, Fraction]) -> str:
    if not terms:
        return "0"
    parts = []
    for lam, c in terms.items():
        parts.append(f"{c}*{format_partition(lam)}")
    return " + ".join(parts)


def pieri(p: int, column: bool, lam: Iterable[int], ambient: tuple[int, int]) -> GrClass:
    """sigma_p * sigma_lam (or sigma_{1^p} * sigma_lam when ``column``)."""
    k, n = ambient
    lam = partition(lam)
    if not fits(lam, k, n):
        raise ValueError(f"{lam} does not fit Gr({k},{n})")
    if p < 0:
        raise ValueError("p must be non-negative")
    cols = n - k
    if column:
        # add p boxes, no two in one row
        lam_c = conjugate(lam)
        out = pieri(p, False, lam_c, (cols, n))
        return GrClass(k, n, {conjugate(nu): c for nu, c in out.terms.items()}, sum(lam) + p)
    padded = list(lam) + [0] * (k - len(lam))
    results: dict[Partition, Fraction] = {}

    def rec(i: int, left: int, row: list[int]) -> None:
        if i == k:
            if left == 0:
                results[partition(row)] = Fraction(1)
            return
        # horizontal strip: row i may grow up to the old row above
        cap = cols if i == 0 else padded[i - 1]
        for add in range(0, min(left, cap - padded[i]) + 1):
            row.append(padded[i] + add)
            rec(i + 1, left - add, row)
            row.pop()

    rec(0, p, [])
    return GrClass(k, n, results, sum(lam) + p)


def lr_multiply(a: GrClass, b: GrClass) -> GrClass:
    """Bilinear product via Littlewood-Richardson coefficients."""
    a._check(b)
    k, n = a.ambient
    codim = None if a.codim is None or b.codim is None else a.codim + b.codim
    out: dict[Partition, Fraction] = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            for nu, c in _product_terms(lam, mu, k, n - k):
                out[nu] = out.get(nu, Fraction(0)) + ca * cb * c
    return GrClass(k, n, out, codim)


def pair_to_point(a: GrClass, b: GrClass) -> Fraction:
    """Degree of a * b; the codimensions must add up to k(n-k)."""
    a._check(b)
    k, n = a.ambient
    top = k * (n - k)
    if a.codim is None or b.codim is None or a.codim + b.codim != top:
        raise ValueError(
            f"codimensions {a.codim} + {b.codim} do not add up to dim Gr({k},{n}) = {top}"
        )
    return lr_multiply(a, b).coefficient((n - k,) * k)


# -- isotropic restrictions ---------------------------------------------------


class Flavor(Enum):
    OG_PLUS = "OG+"
    SG = "SG"

    @classmethod
    def parse(cls, text: str) -> "Flavor":
        t = text.strip().upper().replace("_", "").replace("PLUS", "+")
        for f in cls:
            if f.value == t:
                return f
        raise ValueError(f"unknown flavor {text!r}; use OG+ or SG")


def staircase(flavor: Flavor, k: int) -> Partition:
    """Largest surviving partition: the class of top codimension."""
    if flavor is Flavor.OG_PLUS:
        return partition(range(k - 1, 0, -1))
    return partition(range(k, 0, -1))


def passes_filter(flavor: Flavor, k: int, lam: Partition) -> bool:
    """Vanishing rule: OG+ keeps lam_i <= k - i, SG keeps lam_i <= k + 1 - i."""
    shift = 0 if flavor is Flavor.OG_PLUS else 1
    return len(lam) <= k and all(x <= k + shift - i for i, x in enumerate(lam, 1))


def filtered_partitions(flavor: Flavor, k: int, size: int) -> list[Partition]:
    """Partitions of ``size`` that survive the vanishing rule."""
    shift = 0 if flavor is Flavor.OG_PLUS else 1
    out: list[Partition] = []

    def rec(i: int, cap: int, left: int, prefix: list[int]) -> None:
        if left == 0:
            out.append(tuple(prefix))
            return
        if i > k:
            return
        for x in range(min(cap, k + shift - i, left), 0, -1):
            rec(i + 1, x, left - x, prefix + [x])

    rec(1, k + shift, size, [])
    return out


def _filtered(flavor: Flavor, c: GrClass) -> dict:
    return {lam: v for lam, v in c.terms.items() if passes_filter(flavor, c.k, lam)}


@lru_cache(maxsize=None)
def _relations(flavor: Flavor, k: int, degree: int) -> tuple:
    """Echelon basis of the relation space spanned by sigma_nu (s2 - s11).

    Returned as ``((pivot, vector), ...)`` with each pivot the
    lexicographically largest partition of its vector, normalized to 1.
    Survivors of reduction are therefore the smallest partitions.
    """
    if degree < 2 or k < 2:
        return ()
    n = 2 * k
    gen = GrClass.schubert(k, n, (2,)) - GrClass.schubert(k, n, (1, 1))
    rows = []
    for nu in filtered_partitions(flavor, k, degree - 2):
        v = _filtered(flavor, lr_multiply(GrClass.schubert(k, n, nu), gen))
        if v:
            rows.append(v)
    basis: list[tuple[Partition, dict]] = []
    for v in rows:
        v = dict(v)
        for piv, b in basis:
            if piv in v:
                f = v[piv]
                for lam, c in b.items():
                    v[lam] = v.get(lam, Fraction(0)) - f * c
                v = {lam: c for lam, c in v.items() if c}
        if not v:
            continue
        piv = max(v)
        f = v[piv]
        v = {lam: c / f for lam, c in v.items()}
        # keep the basis fully reduced
        new_basis = []
        for p2, b in basis:
            if piv in b:
                g = b[piv]
                b = dict(b)
                for lam, c in v.items():
                    b[lam] = b.get(lam, Fraction(0)) - g * c
                b = {lam: c for lam, c in b.items() if c}
            new_basis.append((p2, b))
        basis = new_basis + [(piv, v)]
    return tuple(basis)


def canonical_terms(flavor: Flavor, k: int, terms: Mapping[Partition, Fraction]) -> dict:
    """Reduce filtered terms modulo the sigma_2 = sigma_{1,1} relations."""
    by_degree: dict[int, dict] = {}
    for lam, c in terms.items():
        if passes_filter(flavor, k, lam) and c:
            by_degree.setdefault(sum(lam), {})[lam] = c
    out = {}
    for d, v in by_degree.items():
        v = dict(v)
        for piv, b in _relations(flavor, k, d):
            if piv in v:
                f = v[piv]
                for lam, c in b.items():
                    v[lam] = v.get(lam, Fraction(0)) - f * c
        out.update({lam: c for lam, c in v.items() if c})
    return dict(sorted(out.items()))


@dataclass(frozen=True, eq=False)
class RestrictedClass:
    """A class pulled back from Gr(k, 2k) to OG+(k, 2k) or SG(k, 2k).

    ``effective`` is a trusted flag: pullbacks of non-negative combinations
    of Schubert classes are effective on the isotropic Grassmannian.
    """

    flavor: Flavor
    underlying: GrClass
    canonical: bool = True
    effective: bool = False

    @property
    def k(self) -> int:
        return self.underlying.k

    @property
    def codim(self) -> int | None:
        return self.underlying.codim

    @property
    def terms(self) -> Mapping[Partition, Fraction]:
        return self.underlying.terms

    def coefficient(self, lam) -> Fraction:
        return self.underlying.coefficient(lam)

    def is_zero(self) -> bool:
        return self.underlying.is_zero()

    def _check(self, other: "RestrictedClass") -> None:
        if (self.flavor, self.k) != (other.flavor, other.k):
            raise AmbientMismatch("restricted classes live on different spaces")

    def __add__(self, other: "RestrictedClass") -> "RestrictedClass":
        self._check(other)
        return _make(self.flavor, self.underlying + other.underlying,
                     self.effective and other.effective)

    def __neg__(self) -> "RestrictedClass":
        return _make(self.flavor, -self.underlying, False)

    def __sub__(self, other: "RestrictedClass") -> "RestrictedClass":
        return self + (-other)

    def scale(self, s) -> "RestrictedClass":
        s = _frac(s)
        return _make(self.flavor, self.underlying.scale(s), self.effective and s >= 0)

    __rmul__ = scale

    def __mul__(self, other):
        if isinstance(other, RestrictedClass):
            return restricted_multiply(self, other)
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RestrictedClass):
            return NotImplemented
        return (self.flavor, self.k) == (other.flavor, other.k) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.flavor, self.k, tuple(self.terms.items())))

    def __repr__(self) -> str:
        sym = "j*" if self.flavor is Flavor.OG_PLUS else "i*"
        return f"{self.flavor.value}({self.k},{2 * self.k}): {sym}({format_terms(self.terms)})"


def _make(flavor: Flavor, c: GrClass, effective: bool) -> RestrictedClass:
    t = canonical_terms(flavor, c.k, c.terms)
    return RestrictedClass(flavor, GrClass(c.k, c.n, t, c.codim), True, effective)


def restrict(flavor: Flavor, c: GrClass) -> RestrictedClass:
    """Pull a class back from Gr(k, 2k): filter, then canonicalize."""
    if isinstance(flavor, str):
        flavor = Flavor.parse(flavor)
    if c.n != 2 * c.k:
        raise ValueError(f"restriction needs Gr(k,2k); got Gr({c.k},{c.n})")
    effective = all(v > 0 for v in c.terms.values())
    return _make(flavor, c, effective)


def restricted_multiply(a: RestrictedClass, b: RestrictedClass) -> RestrictedClass:
    a._check(b)
    return _make(a.flavor, lr_multiply(a.underlying, b.underlying),
                 a.effective and b.effective)


def restricted_multiply_pieri(flavor, p: int, lam, k: int | None = None,
                              column: bool = False) -> RestrictedClass:
    """Pieri product computed in Gr(k, 2k), then restricted.

    ``lam`` is a partition (``k`` required) or a canonical RestrictedClass,
    in which case every term is multiplied.
    """
    if isinstance(flavor, str):
        flavor = Flavor.parse(flavor)
    if isinstance(lam, RestrictedClass):
        if lam.flavor is not flavor:
            raise AmbientMismatch("flavor mismatch")
        k = lam.k
        total = GrClass.zero(k, 2 * k, (lam.codim or 0) + p)
        for mu, c in lam.terms.items():
            total = total + pieri(p, column, mu, (k, 2 * k)).scale(c)
        return _make(flavor, total, lam.effective)
    if k is None:
        raise ValueError("k is required when lam is a partition")
    return restrict(flavor, pieri(p, column, lam, (k, 2 * k)))


def top_normalization(flavor: Flavor, k: int):
    """Degree of the restricted staircase class.

    ``2**(k-1)`` for OG+; for SG only non-vanishing is known, returned as
    the symbol ``"N_SG"``.
    """
    return Fraction(2) ** (k - 1) if flavor is Flavor.OG_PLUS else "N_SG"


def top_degree(flavor: Flavor, k: int) -> int:
    return sum(staircase(flavor, k))


def restricted_pair(a: RestrictedClass, b: RestrictedClass) -> tuple[Fraction, object]:
    """Intersection number of complementary restricted classes.

    Returns ``(coefficient of the staircase class, normalization)``; the
    number is their product when the normalization is known.
    """
    a._check(b)
    top = top_degree(a.flavor, a.k)
    if a.codim is None or b.codim is None or a.codim + b.codim != top:
        raise ValueError(f"codimensions {a.codim} + {b.codim} != {top}")
    prod = restricted_multiply(a, b)
    return prod.coefficient(staircase(a.flavor, a.k)), top_normalization(a.flavor, a.k)


def nonvanishing_witness(rc: RestrictedClass) -> Fraction:
    """Staircase coefficient of rc * sigma_1^(top - codim).

    A nonzero value proves rc != 0 since the restricted staircase class is
    nonzero.
    """
    top = top_degree(rc.flavor, rc.k)
    s1 = restrict(rc.flavor, GrClass.schubert(rc.k, 2 * rc.k, (1,)))
    cur = rc
    for _ in range(top - (rc.codim or 0)):
        cur = restricted_multiply(cur, s1)
    return cur.coefficient(staircase(rc.flavor, rc.k))
