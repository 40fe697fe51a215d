"""Minimal rational curves on G/P^k and the transform formulas relating the
Chern characters of X to those of its family of minimal curves.

The family (H_x, L_x) through a general point is read off the Dynkin
diagram: delete the marked node, mark its neighbours. Short-root nodes and
non-minimal polarizations come from curated data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable

from . import lie
from .chern import (
    GradedClass,
    GrassmannRing,
    TruncatedPoly,
    character_from_normal_bundle,
    isotropic_tangent_character,
    tangent_character_grassmannian,
)
from .data import curated
from .lie import DynkinDiagram, ParabolicMark
from .schubert import Flavor
from .verdict import Certificate, Status, Verdict, recipe, undetermined


class Unsupported(ValueError):
    """No minimal-family model is available for this space."""


# -- identification of marked diagrams ------------------------------------------


@dataclass(frozen=True)
class Factor:
    """One factor G'/P' of H_x, with L_x restricting to O(mult)."""

    kind: str  # P, Q, Gr, OG, OG+, SG, or an exceptional name such as E6/P6
    dim: int
    params: tuple = ()
    mult: int = 1
    diagram: DynkinDiagram | None = None
    node: int | None = None

    @property
    def name(self) -> str:
        if self.kind in ("P", "Q"):
            return f"{self.kind}^{self.dim}"
        if self.kind in ("Gr", "OG", "OG+", "SG"):
            return f"{self.kind}({self.params[0]},{self.params[1]})"
        return self.kind

    @property
    def index(self) -> int:
        """Fano index in the generator of Pic."""
        if self.kind == "P":
            return self.dim + 1
        if self.kind == "Q":
            return self.dim
        return lie.fano_index(ParabolicMark(self.diagram, self.node))

    def __str__(self) -> str:
        return self.name if self.mult == 1 else f"({self.name}, O({self.mult}))"


def identify(diagram: DynkinDiagram, node: int) -> Factor:
    """Name G/P^node as a projective space, quadric, Grassmannian, ..."""
    label, r = diagram.label, diagram.rank
    dim = lie.dimension(ParabolicMark(diagram, node))
    base = dict(diagram=diagram, node=node)
    if label == "A":
        j = min(node, r + 1 - node)
        if j == 1:
            return Factor("P", dim, (), **base)
        if r == 3:
            return Factor("Q", 4, (), **base)
        return Factor("Gr", dim, (j, r + 1), **base)
    if label == "B":
        if node == 1:
            return Factor("Q", dim, (), **base)
        if node == r:
            # OG(r, 2r+1) = OG+(r+1, 2r+2)
            return identify(DynkinDiagram("D", r + 1), r + 1) if r >= 3 else Factor("P", 3, (), **base)
        return Factor("OG", dim, (node, 2 * r + 1), **base)
    if label == "C":
        if node == 1:
            return Factor("P", dim, (), **base)
        if r == 2:
            return Factor("Q", 3, (), **base)
        return Factor("SG", dim, (node, 2 * r), **base)
    if label == "D":
        if node == 1:
            return Factor("Q", dim, (), **base)
        if node >= r - 1:
            if r == 4:
                return Factor("Q", 6, (), **base)
            return Factor("OG+", dim, (r, 2 * r), **base)
        return Factor("OG", dim, (node, 2 * r), **base)
    return Factor(f"{diagram.name}/P{lie.canonical_node(diagram, node)}", dim, (), **base)


# -- families -------------------------------------------------------------------


@dataclass(frozen=True)
class MarkedProduct:
    factors: tuple[Factor, ...]

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class NamedPair:
    """A family given by name, e.g. the projective bundle of list entry (c)."""

    entry: str
    text: str
    params: tuple = ()

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class SpecialCase:
    tag: str
    rho: int

    def __str__(self) -> str:
        return self.tag


@dataclass(frozen=True)
class PolarizedFamily:
    """The pair (H_x, L_x) with the numerical data the formulas need."""

    space: str
    description: MarkedProduct | NamedPair | SpecialCase
    d: int
    rho: int
    L_in_pic: tuple = ()
    c1_in_L: Fraction | None = None
    ch2: GradedClass | None = None
    minimal_embedding: bool = True
    eta_in_L: Fraction | None = None
    provenance: str | None = None

    @property
    def factors(self) -> tuple[Factor, ...]:
        if isinstance(self.description, MarkedProduct):
            return self.description.factors
        return ()

    @property
    def L_is_generator(self) -> bool:
        return self.rho == 1 and self.L_in_pic == (1,)

    def __str__(self) -> str:
        return f"H_x = {self.description} (d = {self.d})"


@dataclass(frozen=True)
class BernoulliCoefficients:
    A: tuple[Fraction, ...]

    def __getitem__(self, j: int) -> Fraction:
        return self.A[j]

    def __len__(self) -> int:
        return len(self.A)


def bernoulli_numbers(m: int) -> list[Fraction]:
    """B_0..B_m from sum_{j=0}^{m} C(m+1, j) B_j = 0, so B_1 = -1/2."""
    B = [Fraction(1)]
    for k in range(1, m + 1):
        B.append(-sum(comb(k + 1, j) * B[j] for j in range(k)) / (k + 1))
    return B


def bernoulli_A(m: int) -> BernoulliCoefficients:
    """A_j = (-1)^j B_j / j! for j = 0..m."""
    if m < 0:
        raise ValueError("m must be non-negative")
    B = bernoulli_numbers(m)
    return BernoulliCoefficients(tuple((-1) ** j * B[j] / factorial(j) for j in range(m + 1)))


def _pieces(mark: ParabolicMark):
    """(component, local marked node, parent node) per piece of the surgery."""
    k = mark.node
    diagram = mark.diagram
    rest = [i for i in range(1, diagram.rank + 1) if i != k]
    nbrs = set(diagram.neighbors(k))
    for comp in lie.connected_components(diagram, rest):
        hit = comp & nbrs
        if not hit:
            continue
        c = lie.recognize(diagram, comp)
        (parent_node,) = hit
        yield c, lie.canonical_node(c.diagram, c.relabel[parent_node]), parent_node


def _space_name(mark: ParabolicMark) -> str:
    return f"{mark.diagram.name}/P{mark.node}"


def _short_family(mark: ParabolicMark) -> PolarizedFamily:
    name = _space_name(mark)
    data = curated()["special_families"]
    label, n, k = mark.diagram.label, mark.diagram.rank, mark.node
    if name in data:
        rec = data[name]
        return PolarizedFamily(name, SpecialCase(rec["tag"], rec["rho"]), rec["d"], rec["rho"],
                               minimal_embedding=False, provenance=rec["provenance"])
    if label == "C" and 2 <= k < n:
        rec = data["C/short"]
        text = f"P_(P^{k - 1})(O(2) + O(1)^{2 * n - 2 * k}), O_P(1)"
        return PolarizedFamily(name, NamedPair("c-bundle", text, (k - 1, 2 * n - 2 * k)),
                               2 * n - k - 1, rec["rho"], (1,), provenance=rec["provenance"])
    raise Unsupported(f"{name}: node {k} is a short root and no curated family is available")


def minimal_family(mark: ParabolicMark | str) -> PolarizedFamily:
    """Polarized minimal family of G/P^k by diagram surgery."""
    if isinstance(mark, str):
        mark = lie.parse_space(mark)
    if not mark.maximal:
        raise ValueError("minimal families are modelled for maximal parabolics only")
    diagram, k = mark.diagram, mark.node
    if lie.is_short_root(diagram, k):
        return _short_family(mark)
    name = _space_name(mark)
    top = max(lie.root_length(diagram, i) for i in range(1, diagram.rank + 1))
    factors = []
    for comp, local, parent in _pieces(mark):
        f = identify(comp.diagram, local)
        mult = top // lie.root_length(diagram, parent)
        factors.append(Factor(f.kind, f.dim, f.params, mult, f.diagram, f.node))
    override = curated()["polarization_overrides"].get(name)
    provenance = "diagram surgery (LM03)"
    minimal = all(f.mult == 1 for f in factors)
    if override:
        factors = [Factor(f.kind, f.dim, f.params, m, f.diagram, f.node)
                   for f, m in zip(factors, override["multipliers"])]
        minimal = override["minimal_embedding"]
        provenance = override["provenance"]
    d = sum(f.dim for f in factors)
    rho = len(factors)
    c1 = None
    eta = None
    ch2 = None
    if rho == 1:
        (f,) = factors
        c1 = Fraction(f.index, f.mult)
        # T(ch_2 X) = c_1(H_x) - (d/2) L_x, so eta = (c1 - d/2 - 1/2) L_x
        eta = c1 - Fraction(d, 2) - Fraction(1, 2)
        ch2 = factor_ch2(f)
    return PolarizedFamily(name, MarkedProduct(tuple(factors)), d, rho,
                           tuple(f.mult for f in factors), c1, ch2, minimal, eta, provenance)


# -- ch_2 of the factors ----------------------------------------------------------


def spinor_ch2_in_L2(k: int) -> Fraction:
    """ch_2(OG+(k,2k)) as a multiple of L^2, L the half-spinor generator.

    The restricted degree-2 part is c * j*s11; with j*s1 = 2L and
    j*s1^2 = 2 j*s11 this is 2c L^2.
    """
    ch2 = isotropic_tangent_character(Flavor.OG_PLUS, k, 2)[2].component(2)
    assert set(ch2.terms) <= {(1, 1)}
    return 2 * ch2.coefficient((1, 1))


@lru_cache(maxsize=None)
def e6_character():
    rec = curated()["normal_bundles"]["E6/P6"]
    return character_from_normal_bundle(rec["ambient"], rec["dim"], rec["classes"], 3)


def factor_ch2(f: Factor) -> GradedClass | None:
    """ch_2 of a single-factor H_x in a ring whose generator is L_x."""
    if f.kind == "Gr":
        k, n = f.params
        if f.mult != 1:
            return None
        return tangent_character_grassmannian(k, n, 2)[2]
    ring = TruncatedPoly(f.dim, "L")
    L2 = ring.gen() ** 2
    m = Fraction(1, f.mult * f.mult)
    if f.kind == "P":
        return L2.scale(Fraction(f.dim + 1, 2) * m)
    if f.kind == "Q":
        return L2.scale(Fraction(f.dim + 2 - 4, 2) * m)
    if f.kind == "OG+":
        return L2.scale(spinor_ch2_in_L2(f.params[0]) * m)
    if f.kind == "E6/P6":
        return L2.scale(e6_character()[2].component(2) * m)
    return None


def generator_of(c: GradedClass) -> GradedClass:
    """L_x in the ring of ``c``: sigma_1 on a Grassmannian, else the generator."""
    if isinstance(c.ring, GrassmannRing):
        return c.ring.sigma(1)
    return c.ring.gen()


# -- transform formulas ------------------------------------------------------------


def ch_family(k: int, T: dict, L, d, one=1):
    """ch_k(H_x) = sum_{j=0}^{k} A_j L^j T(ch_{k+1-j} X) - L^k / k!.

    ``T`` maps j to T(ch_j X) for 2 <= j <= k+1; T(ch_1 X) = d + 2 is
    supplied here. Works for GradedClass values and sympy symbols alike.
    """
    A = bernoulli_A(k)
    images = dict(T)
    images.setdefault(1, one * (d + 2))
    missing = [j for j in range(1, k + 2) if j not in images]
    if missing:
        raise ValueError(f"T(ch_j X) needed for j = {missing}")
    total = -(L ** k) * Fraction(1, factorial(k))
    for j in range(k + 1):
        if A[j] == 0:
            continue
        total = total + (L ** j) * images[k + 1 - j] * A[j]
    return total


def t_ch2(fam: PolarizedFamily):
    """T(ch_2 X) = c_1(H_x) - (d/2) L_x, as a multiple of L_x."""
    if fam.c1_in_L is None:
        raise ValueError(f"{fam.space}: c_1(H_x) is not a multiple of L_x")
    return fam.c1_in_L - Fraction(fam.d, 2)


def t_ch3_from_family(fam: PolarizedFamily) -> GradedClass:
    """T(ch_3 X) = ch_2(H_x) - (1/2)(c_1(H_x) - (d/2) L) L - (d-4)/12 L^2."""
    if fam.ch2 is None or fam.c1_in_L is None:
        raise ValueError(f"{fam.space}: no ch_2(H_x) data")
    L = generator_of(fam.ch2)
    coeff = Fraction(1, 2) * t_ch2(fam) + Fraction(fam.d - 4, 12)
    return fam.ch2 - (L * L).scale(coeff)


# -- the exceptional list ------------------------------------------------------------


EXCEPTIONAL_LIST = {
    "a": "(P^m x P^m, O(1,1)), d = 2m",
    "b": "(P^(m+1) x P^m, O(1,1)), d = 2m+1",
    "c": "(P_(P^(m+1))(O(2) + O(1)^m), O_P(1)), d = 2m+1",
    "d": "(P^m x Q^(m+1), O(1,1)), d = 2m+1",
    "e": "(P_(P^(m+1))(T_P^(m+1)), O_P(1)), d = 2m+1",
    "f": "(P^d, O(2))",
    "g": "(P^1, O(3))",
}


@dataclass(frozen=True)
class ExceptionalPair:
    entry: str
    m: int | None

    def __str__(self) -> str:
        return f"({self.entry}) {EXCEPTIONAL_LIST[self.entry]}" + (
            "" if self.m is None else f" with m = {self.m}")


def _normalized_pieces(factors: Iterable[Factor]) -> list[tuple[str, int, int]]:
    out = []
    for f in factors:
        if f.kind == "Q" and f.dim == 1:
            out.append(("P", 1, 2 * f.mult))
        elif f.kind == "Q" and f.dim == 2:
            out += [("P", 1, f.mult), ("P", 1, f.mult)]
        else:
            out.append((f.kind, f.dim, f.mult))
    return out


def exceptional_pair_match(fam: PolarizedFamily) -> ExceptionalPair | None:
    """The entry (a)-(g) isomorphic to (H_x, L_x), if any."""
    desc = fam.description
    if isinstance(desc, SpecialCase):
        return None
    if isinstance(desc, NamedPair):
        if desc.entry == "c-bundle":
            base, ones = desc.params
            if base >= 1 and base - 1 == ones:
                return ExceptionalPair("c", ones)
        return None
    pieces = _normalized_pieces(desc.factors)
    if len(pieces) == 1:
        kind, dim, mult = pieces[0]
        if kind == "P" and mult == 2:
            return ExceptionalPair("f", None)
        if kind == "P" and dim == 1 and mult == 3:
            return ExceptionalPair("g", None)
        return None
    if any(mult != 1 for _, _, mult in pieces) or any(k not in ("P", "Q") for k, _, _ in pieces):
        return None
    ps = sorted(dim for kind, dim, _ in pieces if kind == "P")
    qs = [dim for kind, dim, _ in pieces if kind == "Q"]
    if not qs and len(ps) == 2:
        a, b = ps
        if a == b:
            return ExceptionalPair("a", a)
        if b == a + 1:
            return ExceptionalPair("b", a)
    if len(qs) == 1 and len(ps) == 1 and qs[0] == ps[0] + 1:
        return ExceptionalPair("d", ps[0])
    if not qs and ps == [1, 1, 1]:
        # P^1 x Q^2 with Q^2 = P^1 x P^1
        return ExceptionalPair("d", 1)
    return None


def _index_value(space: str) -> Fraction:
    fam = minimal_family(space)
    return 2 * fam.c1_in_L - fam.d


recipe("index_criterion")(_index_value)


def f2_test_b4_one(fam: PolarizedFamily, b4: int) -> Verdict:
    """X is 2-Fano iff -2K_{H_x} - d L_x = (2 c1_in_L - d) L_x is ample."""
    if b4 != 1:
        return undetermined(fam.space, 2, f"criterion inapplicable: b4 = {b4}")
    if fam.rho != 1 or fam.c1_in_L is None:
        return undetermined(fam.space, 2, "criterion needs rho(H_x) = 1 and c_1(H_x) in Q L_x")
    value = 2 * fam.c1_in_L - fam.d
    cert = Certificate(
        "IndexCriterion",
        f"-2K_H - dL = (2*{fam.c1_in_L} - {fam.d}) L = {value} L for {fam.description}",
        {"value": value, "c1_in_L": fam.c1_in_L, "d": fam.d},
        "index_criterion",
        {"space": fam.space},
        "b4 = 1 criterion ('Polarized minimal families' (2012) Thm 1.4)",
    )
    return Verdict(fam.space, 2, Status.HOLDS if value > 0 else Status.FAILS, cert)


# -- descent -------------------------------------------------------------------------


@dataclass(frozen=True)
class DescentReport:
    forced: tuple = ()  # (condition on H_x, reason)
    rho_one: bool = False

    def __str__(self) -> str:
        return "; ".join(f"H_x {c}: {r}" for c, r in self.forced) or "no implication"


def descent_report(x_conditions: Iterable[int], fam: PolarizedFamily) -> DescentReport:
    """Conditions forced on H_x when X satisfies the given F_r."""
    top = max(x_conditions, default=0)
    forced = []
    rho_one = False
    if top >= 2 and fam.d >= 1:
        forced.append(("F1", "X F2 and d >= 1"))
    if top >= 3 and fam.d >= 2:
        forced.append(("F2", "X F3 and d >= 2"))
        rho_one = True
    if top >= 4 and fam.d >= 3 and fam.eta_in_L is not None and fam.eta_in_L >= Fraction(3, 2):
        forced.append(("F3", "X F4, d >= 3 and eta >= 3/2 L"))
    return DescentReport(tuple(forced), rho_one)


def descent_contradiction(fam: PolarizedFamily, condition: int,
                          hx_f2: Callable[[PolarizedFamily], tuple[bool, str] | None] | None = None
                          ) -> str | None:
    """Reason why X cannot satisfy F_condition, using the forced conditions."""
    rep = descent_report([condition], fam)
    if rep.rho_one and fam.rho != 1:
        return f"X F{condition} forces rho(H_x) = 1, but H_x = {fam.description} has rho = {fam.rho}"
    if any(c == "F2" for c, _ in rep.forced) and hx_f2 is not None:
        known = hx_f2(fam)
        if known is not None and not known[0]:
            return f"X F{condition} forces H_x F2, but {fam.description} is not F2 ({known[1]})"
    return None


# -- the two-step bound used for E8/P8 ------------------------------------------------


@dataclass(frozen=True)
class Axiom:
    name: str
    statement: str
    provenance: str


POSITIVITY_AXIOM = Axiom(
    "T-square",
    "T(L_1^2) >= L_2 for the families H_2 of H_1 and H_1 of X",
    "'Polarized minimal families' (2012) Lemma 2.7 (1)",
)


def double_transform_bound(outer: PolarizedFamily, inner: PolarizedFamily) -> Fraction:
    """Upper bound b with T(T(ch_3 X)) <= b L_2.

    ``outer`` is the family H_1 of X and ``inner`` the family H_2 of H_1.
    T(ch_3 X) = ch_2(H_1) - a L_1^2 by the k = 2 transform formula; applying
    T once more gives T(ch_2 H_1) - a T(L_1^2) <= T(ch_2 H_1) - a L_2 when
    a >= 0.
    """
    a = Fraction(1, 2) * t_ch2(outer) + Fraction(outer.d - 4, 12)
    if a < 0:
        raise ValueError("the axiom only bounds T(T(ch_3)) from above when a >= 0")
    return t_ch2(inner) - a


# -- symbolic form of the transform formulas ------------------------------------------


def symbolic_transform_identities() -> dict[int, object]:
    """Difference between :func:`ch_family` at k = 1, 2, 3 and the hand-expanded
    forms, with T(ch_j X) symbolic and c_1(H_x) eliminated via k = 1.

    Every value is zero when the Bernoulli coefficients are right.
    """
    import sympy

    L, d = sympy.symbols("L d")
    T = {j: sympy.Symbol(f"T{j}") for j in range(2, 5)}
    frac = sympy.Rational
    c1 = T[2] + d / 2 * L
    eta = T[2] - L / 2
    by_hand = {
        1: c1,
        2: T[3] + frac(1, 2) * (c1 - d / 2 * L) * L + (d - 4) / 12 * L ** 2,
        3: T[4] + frac(1, 2) * T[3] * L + frac(1, 12) * T[2] * L ** 2 - frac(1, 6) * L ** 3,
    }
    # second form of the k = 3 identity, through eta
    eta_form = T[4] + frac(1, 2) * T[3] * L + L ** 2 / 12 * (eta - frac(3, 2) * L)

    out = {}
    for k, expected in by_hand.items():
        images = {j: T[j] for j in range(2, k + 2)}
        total = ch_family(k, images, L, d, one=sympy.Integer(1))
        out[k] = sympy.simplify(sympy.expand(total - expected))
    out["3eta"] = sympy.simplify(sympy.expand(by_hand[3] - eta_form))
    return out
