"""Chern classes, Chern characters and the bundle operations needed for
tangent bundles of Grassmannians, isotropic Grassmannians and complete
intersections.

Everything is exact. A :class:`GradedClass` lives in one of three graded
rings: a truncated polynomial ring Q[H]/(H^{top+1}), the cohomology ring of
Gr(k, n), or the ring of classes restricted to OG+(k, 2k) or SG(k, 2k).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd
from typing import Iterable, Mapping, Sequence

from .schubert import (
    Flavor,
    GrClass,
    RestrictedClass,
    fits,
    lr_multiply,
    partitions_in_box,
    restrict,
    restricted_multiply,
    top_degree,
)

DEFAULT_UP_TO = 4


class MissingClassData(ValueError):
    pass


# -- rings ---------------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedPoly:
    """Q[H]/(H^(top+1)); the degree-d element is the coefficient of H^d."""

    top: int
    generator: str = "H"

    def zero(self, d: int) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def scale(self, a, s):
        return a * s

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return a == 0

    def gen(self) -> "GradedClass":
        return GradedClass(self, {1: Fraction(1)})

    def json_terms(self, d: int, a) -> list:
        return [{"H_power": d, "coeff": _fstr(a)}] if a else []

    def __str__(self) -> str:
        return f"Q[{self.generator}]/({self.generator}^{self.top + 1})"


@dataclass(frozen=True)
class GrassmannRing:
    k: int
    n: int

    @property
    def top(self) -> int:
        return self.k * (self.n - self.k)

    def zero(self, d: int) -> GrClass:
        return GrClass.zero(self.k, self.n, d)

    def one(self) -> GrClass:
        return GrClass.schubert(self.k, self.n)

    def add(self, a: GrClass, b: GrClass) -> GrClass:
        return a + b

    def scale(self, a: GrClass, s) -> GrClass:
        return a.scale(s)

    def mul(self, a: GrClass, b: GrClass) -> GrClass:
        return lr_multiply(a, b)

    def is_zero(self, a: GrClass) -> bool:
        return a.is_zero()

    def sigma(self, *lam: int) -> "GradedClass":
        c = GrClass.schubert(self.k, self.n, lam)
        return GradedClass(self, {c.codim: c})

    def json_terms(self, d: int, a: GrClass) -> list:
        return [{"partition": list(lam), "coeff": _fstr(c)} for lam, c in a.terms.items()]

    def __str__(self) -> str:
        return f"H*(Gr({self.k},{self.n}))"


@dataclass(frozen=True)
class RestrictedRing:
    """Classes pulled back from Gr(k, 2k), in canonical form."""

    flavor: Flavor
    k: int

    @property
    def top(self) -> int:
        return top_degree(self.flavor, self.k)

    @property
    def upstairs(self) -> GrassmannRing:
        return GrassmannRing(self.k, 2 * self.k)

    def zero(self, d: int) -> RestrictedClass:
        return restrict(self.flavor, GrClass.zero(self.k, 2 * self.k, d))

    def one(self) -> RestrictedClass:
        return restrict(self.flavor, GrClass.schubert(self.k, 2 * self.k))

    def add(self, a, b):
        return a + b

    def scale(self, a, s):
        return a.scale(s)

    def mul(self, a, b):
        return restricted_multiply(a, b)

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def sigma(self, *lam: int) -> "GradedClass":
        c = restrict(self.flavor, GrClass.schubert(self.k, 2 * self.k, lam))
        return GradedClass(self, {sum(lam): c})

    def json_terms(self, d: int, a) -> list:
        return [{"partition": list(lam), "coeff": _fstr(c)} for lam, c in a.terms.items()]

    def __str__(self) -> str:
        return f"H*({self.flavor.value}({self.k},{2 * self.k})) restricted"


GradedRing = TruncatedPoly | GrassmannRing | RestrictedRing


def _fstr(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, eq=False)
class GradedClass:
    """A possibly inhomogeneous element of a graded ring."""

    ring: GradedRing
    components: Mapping[int, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for d, a in self.components.items():
            if d < 0:
                raise ValueError("negative degree")
            if d > self.ring.top:
                continue
            if isinstance(self.ring, TruncatedPoly):
                a = _frac(a)
            if not self.ring.is_zero(a):
                clean[d] = a
        object.__setattr__(self, "components", dict(sorted(clean.items())))

    @classmethod
    def constant(cls, ring: GradedRing, value) -> "GradedClass":
        return cls(ring, {0: ring.scale(ring.one(), _frac(value))})

    def component(self, d: int):
        return self.components.get(d, self.ring.zero(d))

    def homogeneous(self, d: int) -> "GradedClass":
        return GradedClass(self.ring, {d: self.component(d)})

    def truncate(self, up_to: int) -> "GradedClass":
        return GradedClass(self.ring, {d: a for d, a in self.components.items() if d <= up_to})

    def is_zero(self) -> bool:
        return not self.components

    def _check(self, other: "GradedClass") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "GradedClass") -> "GradedClass":
        self._check(other)
        out = dict(self.components)
        for d, a in other.components.items():
            out[d] = self.ring.add(out[d], a) if d in out else a
        return GradedClass(self.ring, out)

    def __neg__(self) -> "GradedClass":
        return self.scale(-1)

    def __sub__(self, other: "GradedClass") -> "GradedClass":
        return self + (-other)

    def scale(self, s) -> "GradedClass":
        s = _frac(s)
        return GradedClass(self.ring, {d: self.ring.scale(a, s) for d, a in self.components.items()})

    def __rmul__(self, s) -> "GradedClass":
        return self.scale(s)

    def __mul__(self, other):
        if not isinstance(other, GradedClass):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for d1, a in self.components.items():
            for d2, b in other.components.items():
                d = d1 + d2
                if d > self.ring.top:
                    continue
                p = self.ring.mul(a, b)
                out[d] = self.ring.add(out[d], p) if d in out else p
        return GradedClass(self.ring, out)

    def __pow__(self, e: int) -> "GradedClass":
        out = GradedClass.constant(self.ring, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.ring == other.ring and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.ring, tuple(self.components)))

    def __repr__(self) -> str:
        if not self.components:
            return "0"
        parts = []
        for d, a in self.components.items():
            if isinstance(self.ring, TruncatedPoly):
                parts.append(f"{a}*{self.ring.generator}^{d}")
            else:
                parts.append(repr(a))
        return " + ".join(parts)


def restrict_graded(c: GradedClass, flavor: Flavor) -> GradedClass:
    """Pull a class on Gr(k, 2k) back to the isotropic Grassmannian."""
    if not isinstance(c.ring, GrassmannRing) or c.ring.n != 2 * c.ring.k:
        raise ValueError("restriction needs a class on Gr(k, 2k)")
    ring = RestrictedRing(flavor, c.ring.k)
    return GradedClass(ring, {d: restrict(flavor, a) for d, a in c.components.items()})


# -- bundles and characters ----------------------------------------------------


@dataclass(frozen=True)
class BundleData:
    """Rank and Chern classes c_1..c_r (each a homogeneous GradedClass)."""

    rank: int
    chern_classes: Sequence[GradedClass]

    def __post_init__(self) -> None:
        if len(self.chern_classes) > self.rank:
            raise ValueError("more Chern classes than the rank")
        for i, c in enumerate(self.chern_classes, 1):
            if set(c.components) - {i}:
                raise ValueError(f"c_{i} must be homogeneous of degree {i}")
        object.__setattr__(self, "chern_classes", tuple(self.chern_classes))

    @property
    def ring(self) -> GradedRing:
        return self.chern_classes[0].ring

    def c(self, i: int, ring: GradedRing | None = None) -> GradedClass:
        ring = ring or self.ring
        if i == 0:
            return GradedClass.constant(ring, 1)
        if i > self.rank or i > ring.top:
            return GradedClass(ring, {})
        if i > len(self.chern_classes):
            raise MissingClassData(f"c_{i} not supplied")
        return self.chern_classes[i - 1]


@dataclass(frozen=True, eq=False)
class ChernCharacter:
    """ch_0 .. ch_m; part ``k`` is homogeneous of degree k."""

    ring: GradedRing
    parts: Sequence[GradedClass]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for k, p in enumerate(parts):
            if p.ring != self.ring or set(p.components) - {k}:
                raise ValueError(f"ch_{k} must be homogeneous of degree {k}")
        object.__setattr__(self, "parts", parts)

    @property
    def up_to(self) -> int:
        return len(self.parts) - 1

    @property
    def rank(self) -> Fraction:
        c0 = self.parts[0].component(0)
        if isinstance(self.ring, TruncatedPoly):
            return c0
        return c0.coefficient(())

    def ch(self, k: int) -> GradedClass:
        if k > self.up_to:
            raise MissingClassData(f"ch_{k} beyond computed degree {self.up_to}")
        return self.parts[k]

    def __getitem__(self, k: int) -> GradedClass:
        return self.ch(k)

    def total(self) -> GradedClass:
        out = GradedClass(self.ring, {})
        for p in self.parts:
            out = out + p
        return out

    @classmethod
    def from_total(cls, total: GradedClass, up_to: int) -> "ChernCharacter":
        return cls(total.ring, [total.homogeneous(k) for k in range(up_to + 1)])

    def _pair(self, other: "ChernCharacter") -> int:
        if self.ring != other.ring:
            raise ValueError("ring mismatch")
        return min(self.up_to, other.up_to)

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        m = self._pair(other)
        return ChernCharacter(self.ring, [self.parts[k] + other.parts[k] for k in range(m + 1)])

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        m = self._pair(other)
        return ChernCharacter(self.ring, [self.parts[k] - other.parts[k] for k in range(m + 1)])

    def scale(self, s) -> "ChernCharacter":
        return ChernCharacter(self.ring, [p.scale(s) for p in self.parts])

    def __mul__(self, other: "ChernCharacter") -> "ChernCharacter":
        """Character of the tensor product."""
        m = self._pair(other)
        return ChernCharacter.from_total((self.total() * other.total()).truncate(m), m)

    tensor = __mul__

    def dual(self) -> "ChernCharacter":
        return ChernCharacter(self.ring, [p.scale((-1) ** k) for k, p in enumerate(self.parts)])

    def adams(self, order: int = 2) -> "ChernCharacter":
        return ChernCharacter(self.ring, [p.scale(order ** k) for k, p in enumerate(self.parts)])

    def sym2(self) -> "ChernCharacter":
        return (self * self + self.adams(2)).scale(Fraction(1, 2))

    def lambda2(self) -> "ChernCharacter":
        return (self * self - self.adams(2)).scale(Fraction(1, 2))

    def restrict(self, flavor: Flavor) -> "ChernCharacter":
        parts = [restrict_graded(p, flavor) for p in self.parts]
        return ChernCharacter(parts[0].ring, parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChernCharacter):
            return NotImplemented
        return self.ring == other.ring and self.parts == other.parts

    def __repr__(self) -> str:
        return "ChernCharacter(" + ", ".join(f"ch{k}={p!r}" for k, p in enumerate(self.parts)) + ")"

    def to_json(self) -> list[dict]:
        out = []
        for k, p in enumerate(self.parts):
            out.append({"degree": k, "basis": self.ring.json_terms(k, p.component(k))})
        return out


def character_from_classes(b: BundleData, up_to: int) -> ChernCharacter:
    """Newton's identities: p_k = sum_{i<k} (-1)^(i-1) c_i p_(k-i) + (-1)^(k-1) k c_k."""
    ring = b.ring
    power_sums: list[GradedClass] = [GradedClass.constant(ring, b.rank)]
    for k in range(1, up_to + 1):
        pk = b.c(k, ring).scale((-1) ** (k - 1) * k)
        for i in range(1, k):
            pk = pk + (b.c(i, ring) * power_sums[k - i]).scale((-1) ** (i - 1))
        power_sums.append(pk)
    parts = [p.scale(Fraction(1, factorial(k))) for k, p in enumerate(power_sums)]
    return ChernCharacter(ring, parts)


def classes_from_character(ch: ChernCharacter, rank: int | None = None) -> BundleData:
    """Inverse of :func:`character_from_classes`: k c_k = sum (-1)^(i-1) c_(k-i) p_i."""
    ring = ch.ring
    rank = int(ch.rank) if rank is None else rank
    p = [ch.ch(k).scale(factorial(k)) for k in range(ch.up_to + 1)]
    cs: list[GradedClass] = [GradedClass.constant(ring, 1)]
    for k in range(1, min(ch.up_to, rank) + 1):
        acc = GradedClass(ring, {})
        for i in range(1, k + 1):
            acc = acc + (cs[k - i] * p[i]).scale((-1) ** (i - 1))
        cs.append(acc.scale(Fraction(1, k)))
    return BundleData(rank, cs[1:])


def line_bundle_character(c1: GradedClass, up_to: int) -> ChernCharacter:
    return character_from_classes(BundleData(1, [c1]), up_to)


def newton_ch_polynomial(k: int) -> dict[tuple[int, ...], Fraction]:
    """ch_k as a polynomial in c_1..c_k: {exponent vector: coefficient}.

    Used where only Chern numbers are known, e.g. 6 ch_3 = c1^3 - 3c1c2 + 3c3.
    """

    def mul(p, q):
        out: dict = {}
        for a, x in p.items():
            for b, y in q.items():
                e = tuple(i + j for i, j in zip(a, b))
                out[e] = out.get(e, Fraction(0)) + x * y
        return {e: c for e, c in out.items() if c}

    def var(i):
        e = [0] * k
        e[i - 1] = 1
        return {tuple(e): Fraction(1)}

    sums: list[dict] = [{}]
    for j in range(1, k + 1):
        pj = {e: c * (-1) ** (j - 1) * j for e, c in var(j).items()}
        for i in range(1, j):
            term = mul(var(i), sums[j - i])
            for e, c in term.items():
                pj[e] = pj.get(e, Fraction(0)) + (-1) ** (i - 1) * c
        sums.append({e: c for e, c in pj.items() if c})
    return {e: c / factorial(k) for e, c in sums[k].items()}


# -- projective spaces and complete intersections ------------------------------


def ambient_projective_character(N: int, up_to: int = DEFAULT_UP_TO) -> ChernCharacter:
    """ch_k(P^N) = (N+1) H^k / k! in Q[H]/(H^(N+1)), and ch_0 = N.

    From the Euler sequence, ch(T) = (N+1) e^H - 1.
    """
    return weighted_character((1,) * (N + 1), up_to)


@dataclass(frozen=True)
class Projective:
    N: int


@dataclass(frozen=True)
class Weighted:
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        w = tuple(int(a) for a in self.weights)
        if not w or any(a <= 0 for a in w):
            raise ValueError("weights must be positive integers")
        g = 0
        for a in w:
            g = gcd(g, a)
        if g != 1:
            raise ValueError(f"weights {w} are not well formed: gcd is {g}")
        object.__setattr__(self, "weights", w)


@dataclass(frozen=True)
class Named:
    """A space with known character whose class group is generated by H."""

    name: str
    character: ChernCharacter
    dimension: int


@dataclass(frozen=True)
class CompleteIntersectionSpec:
    ambient: Projective | Weighted | Named
    degrees: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        d = tuple(int(x) for x in self.degrees)
        if any(x <= 0 for x in d):
            raise ValueError("degrees must be positive")
        object.__setattr__(self, "degrees", d)

    @property
    def ambient_dimension(self) -> int:
        a = self.ambient
        if isinstance(a, Projective):
            return a.N
        if isinstance(a, Weighted):
            return len(a.weights) - 1
        return a.dimension

    @property
    def dimension(self) -> int:
        return self.ambient_dimension - len(self.degrees)


def weighted_character(weights: Sequence[int], up_to: int = DEFAULT_UP_TO) -> ChernCharacter:
    """ch_k of P(a_0..a_n) as (sum a_j^k)/k! times H^k, H the class-group
    generator; ch_0 is the dimension n."""
    ring = TruncatedPoly(len(weights) - 1)
    H = ring.gen()
    parts = [GradedClass.constant(ring, len(weights) - 1)]
    for k in range(1, up_to + 1):
        parts.append((H ** k).scale(Fraction(sum(a ** k for a in weights), factorial(k))))
    return ChernCharacter(ring, parts)


def ci_character(spec: CompleteIntersectionSpec, up_to: int = DEFAULT_UP_TO) -> ChernCharacter:
    """ch_k(X) = ch_k(Y)|_X - (1/k!) sum (d_i H)^k, restriction being formal."""
    a = spec.ambient
    if isinstance(a, Projective):
        base = ambient_projective_character(a.N, up_to)
    elif isinstance(a, Weighted):
        base = weighted_character(a.weights, up_to)
    else:
        base = a.character
        up_to = min(up_to, base.up_to)
    ring = base.ring
    H = ring.gen()
    parts = []
    for k in range(up_to + 1):
        cut = Fraction(sum(d ** k for d in spec.degrees), factorial(k))
        parts.append(base.ch(k) - (H ** k).scale(cut))
    return ChernCharacter(ring, parts)


def wps_ci_character(weights: Sequence[int], degrees: Sequence[int], k: int) -> Fraction:
    """Coefficient of c_1(H|_X)^k in ch_k(X): (sum a_j^k - sum d_i^k)/k!."""
    Weighted(tuple(weights))
    return Fraction(sum(a ** k for a in weights) - sum(d ** k for d in degrees), factorial(k))


# -- Grassmannians ---------------------------------------------------------------


def tautological_bundles(k: int, n: int) -> tuple[BundleData, BundleData]:
    """(S*, Q) on Gr(k, n): c_i(S*) = sigma_{1^i}, c_i(Q) = sigma_i."""
    ring = GrassmannRing(k, n)
    s_dual = BundleData(k, [ring.sigma(*([1] * i)) for i in range(1, min(k, ring.top) + 1)])
    q = BundleData(n - k, [ring.sigma(i) for i in range(1, min(n - k, ring.top) + 1)])
    return s_dual, q


def tangent_character_grassmannian(k: int, n: int, up_to: int = 3) -> ChernCharacter:
    """ch(T) = ch(S*) ch(Q) on Gr(k, n)."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"degenerate Grassmannian Gr({k},{n})")
    s_dual, q = tautological_bundles(k, n)
    return character_from_classes(s_dual, up_to) * character_from_classes(q, up_to)


def isotropic_tangent_character(flavor: Flavor, k: int, up_to: int = 3) -> ChernCharacter:
    """T_OG = (T_Gr - Sym^2 S*)| and T_SG = (T_Gr - Lambda^2 S*)|, where the
    excess bundle is the normal bundle of OG resp. SG in Gr(k, 2k)."""
    if isinstance(flavor, str):
        flavor = Flavor.parse(flavor)
    t_gr = tangent_character_grassmannian(k, 2 * k, up_to)
    s_dual, _ = tautological_bundles(k, 2 * k)
    ch_s = character_from_classes(s_dual, up_to)
    excess = ch_s.sym2() if flavor is Flavor.OG_PLUS else ch_s.lambda2()
    return (t_gr - excess).restrict(flavor)


def restricted_combination(flavor: Flavor, k: int, terms: Mapping[tuple, Fraction]):
    """Restrict a degree-homogeneous combination of Schubert classes."""
    return restrict(flavor, GrClass(k, 2 * k, dict(terms)))


def og_sg_ch3_reduced_coefficients(flavor, k: int) -> tuple[Fraction, Fraction]:
    """(a, b) with ch_3 = a sigma_1^3 + b sigma_3 in the published reduced form.

    OG+: (k+4)/2 (sigma_1^3/6 - sigma_3); SG: (4-k)/2 (sigma_3 - sigma_1^3/6).
    """
    if isinstance(flavor, str):
        flavor = Flavor.parse(flavor)
    if flavor is Flavor.OG_PLUS:
        return Fraction(k + 4, 12), -Fraction(k + 4, 2)
    return -Fraction(4 - k, 12), Fraction(4 - k, 2)


def og_sg_ch3_closed_form(flavor, k: int, form: str = "canonical") -> RestrictedClass:
    """ch_3 of OG+(k, 2k) or SG(k, 2k) from the closed-form expressions.

    ``form`` selects the raw expression in sigma_3, sigma_21, sigma_111, the
    reduced expression in sigma_1^3 and sigma_3, or (default) the canonical
    form, which both must reduce to.

    Both forms are multiples of sigma_21 - 2 sigma_111 after restriction, but
    not the multiple that :func:`isotropic_tangent_character` produces; the
    certificate cycles annihilate that line, so pairings agree either way.
    """
    if isinstance(flavor, str):
        flavor = Flavor.parse(flavor)
    if k < 3:
        raise ValueError("closed forms need k >= 3")
    n = 2 * k
    s = lambda *lam: GrClass.schubert(k, n, lam)  # noqa: E731
    F = Fraction
    if flavor is Flavor.OG_PLUS:
        raw = s(3).scale(F(-(k + 7), 6)) + s(2, 1).scale(F(k + 4, 6)) + s(1, 1, 1).scale(F(-(k + 1), 6))
    else:
        raw = s(3).scale(F(1 - k, 6)) - s(2, 1).scale(F(4 - k, 6)) + s(1, 1, 1).scale(F(7 - k, 6))
    a, b = og_sg_ch3_reduced_coefficients(flavor, k)
    reduced = (s(1) ** 3).scale(a) + s(3).scale(b)
    if form == "raw":
        return RestrictedClass(flavor, raw, canonical=False)
    if form == "reduced":
        return RestrictedClass(flavor, reduced, canonical=False)
    if form != "canonical":
        raise ValueError(f"unknown form {form!r}")
    a, b = restrict(flavor, raw), restrict(flavor, reduced)
    if a != b:
        raise ArithmeticError(f"raw and reduced ch_3 disagree for {flavor.value}({k},{n})")
    return a


def positive_in_schubert_basis(c: GradedClass, degree: int) -> bool:
    """Every Schubert class of the given degree has coefficient > 0.

    On Gr(k, n) this decides positivity against all effective cycles, the
    Schubert classes being dual generators of the effective cones.
    """
    if not isinstance(c.ring, GrassmannRing):
        raise TypeError("basis positivity is only decisive on Grassmannians")
    k, n = c.ring.k, c.ring.n
    comp = c.component(degree)
    basis = partitions_in_box(k, n - k, degree)
    return bool(basis) and all(comp.coefficient(lam) > 0 for lam in basis)


def schubert_coefficients(c: GradedClass, degree: int) -> dict:
    k, n = c.ring.k, c.ring.n
    comp = c.component(degree)
    return {lam: comp.coefficient(lam) for lam in partitions_in_box(k, n - k, degree)
            if fits(lam, k, n)}


# -- named spaces via normal bundles ---------------------------------------------


def character_from_normal_bundle(N: int, dim: int, normal_classes: Iterable[int],
                                 up_to: int = 3) -> ChernCharacter:
    """ch(X) = ch(P^N)|_X - ch(normal bundle), classes given as multiples of H^i.

    The ring is Q[H] truncated at ``dim``; valid as long as the degrees in
    play have one-dimensional cohomology spanned by H^i.
    """
    ring = TruncatedPoly(dim)
    H = ring.gen()
    cs = [(H ** i).scale(c) for i, c in enumerate(normal_classes, 1)]
    normal = character_from_classes(BundleData(N - dim, cs), up_to)
    amb = ambient_projective_character(N, up_to)
    amb = ChernCharacter(ring, [(H ** k).scale(amb.ch(k).component(k)) for k in range(up_to + 1)])
    return amb - normal
