"""Decision drivers for the conditions F_1, F_2, F_3 with certificates.

Every Holds/Fails verdict carries a certificate naming a recipe; calling
the recipe with the stored arguments recomputes the certificate's value
from scratch (see :func:`higherfano.verdict.reverify`).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import curves, lie
from .chern import (
    CompleteIntersectionSpec,
    Named,
    Projective,
    Weighted,
    ci_character,
    isotropic_tangent_character,
    og_sg_ch3_reduced_coefficients,
    tangent_character_grassmannian,
)
from .data import curated
from .lie import DynkinDiagram, ParabolicMark
from .schubert import (
    Flavor,
    GrClass,
    complement,
    pair_to_point,
    partitions_in_box,
    restrict,
    restricted_multiply,
    restricted_multiply_pieri,
    staircase,
    top_normalization,
)
from .verdict import Certificate, Status, Verdict, fstr, recipe, undetermined

F = Fraction


# -- space descriptors -----------------------------------------------------------


@dataclass(frozen=True)
class Space:
    """A normalized space: ``kind`` is one of P, Q, Gr, OG+, SG, section,
    family (classical non-end node) or exceptional."""

    kind: str
    params: tuple
    mark: ParabolicMark | None = None

    @property
    def name(self) -> str:
        p = self.params
        if self.kind in ("P", "Q"):
            return f"{self.kind}^{p[0]}"
        if self.kind == "Gr":
            return f"Gr({p[0]},{p[1]})"
        if self.kind in ("OG+", "SG"):
            return f"{self.kind}({p[0]},{2 * p[0]})"
        if self.kind == "section":
            return f"OG+(5,10)^{p[0]}"
        return str(self.mark)

    @property
    def dimension(self) -> int:
        if self.kind in ("P", "Q"):
            return self.params[0]
        if self.kind == "section":
            return 10 - self.params[0]
        return lie.dimension(self.mark)


def _mark(label: str, rank: int, node: int) -> ParabolicMark:
    return ParabolicMark(DynkinDiagram(label, rank), node)


def normalize(mark: ParabolicMark) -> Space:
    """Rewrite G/P^k to its standard model, applying the isomorphisms
    Gr(k,n) = Gr(n-k,n), OG(k,2k+1) = OG+(k+1,2k+2), D_n/P^(n-1) = D_n/P^n,
    the D4 triality, the E6 symmetry and the low-rank coincidences."""
    if not mark.maximal:
        raise ValueError("only maximal parabolics (Picard rank 1) are classified")
    label, r, k = mark.diagram.label, mark.diagram.rank, mark.node
    if label == "A":
        j = min(k, r + 1 - k)
        if j == 1:
            return Space("P", (r,), mark)
        return Space("Gr", (j, r + 1), _mark("A", r, j))
    if label == "B":
        if k == 1:
            return Space("Q", (2 * r - 1,), mark)
        if k == r:
            return normalize(_mark("D", r + 1, r + 1)) if r >= 3 else Space("P", (3,), mark)
        return Space("family", (), mark)
    if label == "C":
        if k == 1:
            return Space("P", (2 * r - 1,), mark)
        if k == r:
            return Space("Q", (3,), mark) if r == 2 else Space("SG", (r,), mark)
        return Space("family", (), mark)
    if label == "D":
        if r == 3:
            return normalize(_mark("A", 3, {1: 2, 2: 1, 3: 3}[k]))
        if k == 1:
            return Space("Q", (2 * r - 2,), mark)
        if k >= r - 1:
            if r == 4:
                return Space("Q", (6,), mark)
            return Space("OG+", (r,), _mark("D", r, r))
        return Space("family", (), mark)
    node = lie.canonical_node(mark.diagram, k)
    return Space("exceptional", (), ParabolicMark(mark.diagram, node))


_GR = re.compile(r"Gr\((\d+),(\d+)\)")
_OGP = re.compile(r"OG\+\((\d+),(\d+)\)")
_OG = re.compile(r"OG\((\d+),(\d+)\)")
_SG = re.compile(r"SG\((\d+),(\d+)\)")
_PQ = re.compile(r"([PQ])\^?(\d+)")
_SECTION = re.compile(r"OG\+\(5,10\)\^(\d+)")


def parse_descriptor(text: str) -> Space:
    """Parse ``E8/P6``, ``Gr(2,5)``, ``OG+(5,10)``, ``OG(k,n)``,
    ``SG(k,n)``, ``P^n``, ``Q^n`` or ``OG+(5,10)^c``."""
    t = text.replace(" ", "")
    try:
        return normalize(lie.parse_space(t))
    except ValueError:
        pass
    m = _SECTION.fullmatch(t)
    if m:
        return Space("section", (int(m.group(1)),))
    m = _GR.fullmatch(t)
    if m:
        k, n = int(m.group(1)), int(m.group(2))
        if not 1 <= k <= n - 1:
            raise ValueError(f"{text}: need 1 <= k <= n-1")
        return normalize(_mark("A", n - 1, k))
    m = _OGP.fullmatch(t)
    if m:
        k, n = int(m.group(1)), int(m.group(2))
        if n != 2 * k or k < 3:
            raise ValueError(f"{text}: need OG+(k,2k) with k >= 3")
        return Space("P", (3,), _mark("A", 3, 1)) if k == 3 else normalize(_mark("D", k, k))
    m = _OG.fullmatch(t)
    if m:
        k, n = int(m.group(1)), int(m.group(2))
        if n % 2:
            r = (n - 1) // 2
            if not 1 <= k <= r:
                raise ValueError(f"{text}: need 1 <= k <= (n-1)/2")
            return normalize(_mark("B", r, k))
        r = n // 2
        if not (1 <= k <= r - 2 or k == r) or r < 3:
            raise ValueError(f"{text}: OG(k,2r) is rational homogeneous of Picard rank 1 for k <= r-2 or k = r")
        return normalize(_mark("D", r, k))
    m = _SG.fullmatch(t)
    if m:
        k, n = int(m.group(1)), int(m.group(2))
        if n % 2 or not 1 <= k <= n // 2:
            raise ValueError(f"{text}: need SG(k,2r) with 1 <= k <= r")
        if n == 2:
            return Space("P", (1,), _mark("A", 1, 1))
        return normalize(_mark("C", n // 2, k))
    m = _PQ.fullmatch(t)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "P":
            if n < 1:
                raise ValueError("P^n needs n >= 1")
            return Space("P", (n,), _mark("A", n, 1))
        if n < 3:
            raise ValueError("Q^n has Picard rank 1 only for n >= 3")
        if n == 4:
            return Space("Q", (4,), _mark("A", 3, 2))
        if n % 2:
            return Space("Q", (n,), _mark("B", (n + 1) // 2, 1))
        return Space("Q", (n,), _mark("D", n // 2 + 1, 1))
    raise ValueError(f"cannot parse space descriptor {text!r}")


# -- complete intersections ---------------------------------------------------------


NAMED_AMBIENTS = {"E6/P6": lambda: Named("E6/P6", curves.e6_character(), 16)}


def ambient_to_args(a) -> dict:
    if isinstance(a, Projective):
        return {"kind": "P", "N": a.N}
    if isinstance(a, Weighted):
        return {"kind": "W", "weights": list(a.weights)}
    return {"kind": "named", "name": a.name}


def ambient_from_args(d: dict):
    if d["kind"] == "P":
        return Projective(int(d["N"]))
    if d["kind"] == "W":
        return Weighted(tuple(d["weights"]))
    return NAMED_AMBIENTS[d["name"]]()


def ci_coefficients(spec: CompleteIntersectionSpec, m: int) -> list[Fraction]:
    """Coefficient of H^i in ch_i(X) for i = 1..m."""
    a = spec.ambient
    if isinstance(a, (Projective, Weighted)):
        weights = (1,) * (a.N + 1) if isinstance(a, Projective) else a.weights
        return [(F(sum(w ** i for w in weights)) - sum(d ** i for d in spec.degrees))
                / factorial(i) for i in range(1, m + 1)]
    ch = ci_character(spec, m)
    if ch.up_to < m:
        raise ValueError(f"character of {a.name} known only up to degree {ch.up_to}")
    return [F(ch[i].component(i)) for i in range(1, m + 1)]


@recipe("ci_min_coefficient")
def _ci_min_coefficient(ambient: dict, degrees: list, m: int) -> Fraction:
    spec = CompleteIntersectionSpec(ambient_from_args(ambient), tuple(degrees))
    return min(ci_coefficients(spec, m))


def _power_sums(spec: CompleteIntersectionSpec, i: int) -> tuple[int, int] | None:
    a = spec.ambient
    if isinstance(a, Projective):
        return sum(d ** i for d in spec.degrees), a.N + 1
    if isinstance(a, Weighted):
        return sum(d ** i for d in spec.degrees), sum(w ** i for w in a.weights)
    return None


def ci_label(spec: CompleteIntersectionSpec) -> str:
    a = spec.ambient
    if isinstance(a, Projective):
        amb = f"P^{a.N}"
    elif isinstance(a, Weighted):
        amb = "P(" + ",".join(map(str, a.weights)) + ")"
    else:
        amb = a.name
    if not spec.degrees:
        return amb
    return f"X_({'.'.join(map(str, spec.degrees))}) in {amb}"


def check_complete_intersection(spec: CompleteIntersectionSpec, condition: int,
                                label: str | None = None) -> Verdict:
    """F_m holds iff m <= dim X and the coefficient of H^i in ch_i(X) is
    positive for every i <= m, i.e. sum d^i < sum a^i."""
    label = label or ci_label(spec)
    m = condition
    if spec.dimension < 1:
        raise ValueError(f"{label}: empty or zero-dimensional")
    if m > spec.dimension:
        return undetermined(label, m, f"vacuous: F{m} needs dim >= {m}, dim = {spec.dimension}")
    coeffs = ci_coefficients(spec, m)
    bad = next((i for i, c in enumerate(coeffs, 1) if c <= 0), None)
    i = bad or m
    sums = _power_sums(spec, i)
    if sums is not None:
        sd, sa = sums
        rel = "<" if sd < sa else ">="
        summary = f"sum d^{i} = {sd} {rel} sum a^{i} = {sa}; ch_{i} = {fstr(coeffs[i - 1])} H^{i}"
    else:
        summary = f"ch_{i} = {fstr(coeffs[i - 1])} H^{i} on {label}"
    cert = Certificate(
        "NumericThreshold", summary,
        {"value": min(coeffs), "coefficients": coeffs},
        "ci_min_coefficient",
        {"ambient": ambient_to_args(spec.ambient), "degrees": list(spec.degrees), "m": m},
        "ch_k(X) = (sum a_j^k - sum d_i^k) H^k / k!",
    )
    return Verdict(label, m, Status.FAILS if bad else Status.HOLDS, cert)


def threshold_spec(record: dict, n: int) -> CompleteIntersectionSpec:
    """The member of dimension n of a curated family."""
    c = len(record["degrees"])
    if record["ambient"] == "P":
        return CompleteIntersectionSpec(Projective(n + c), tuple(record["degrees"]))
    big = tuple(record["big_weights"])
    ones = n + c + 1 - len(big)
    return CompleteIntersectionSpec(Weighted(big + (1,) * ones), tuple(record["degrees"]))


def minimal_n(record: dict, condition: int = 3, start: int = 1, cap: int = 5000,
              window: int = 50) -> int | None:
    """Least n with F_condition, checked monotone on a window above it."""
    first = None
    for n in range(start, cap):
        try:
            v = check_complete_intersection(threshold_spec(record, n), condition)
        except ValueError:
            continue
        if v.holds and first is None:
            first = n
        if first is not None:
            if not v.holds:
                raise ArithmeticError(f"{record['key']}: F{condition} not monotone at n = {n}")
            if n >= first + window:
                break
    return first


# -- certificates helpers --------------------------------------------------------------


def _space_label(space) -> str:
    return space if isinstance(space, str) else str(space)


@recipe("fano_index")
def _fano_index_recipe(space: str) -> Fraction:
    return F(lie.fano_index(lie.parse_space(space)))


def _f1(label: str, mark: ParabolicMark) -> Verdict:
    i = lie.fano_index(mark)
    cert = Certificate("BasisPositivity", f"c_1 = {i} H with H the ample generator",
                       {"value": i}, "fano_index", {"space": str(mark)})
    return Verdict(label, 1, Status.HOLDS if i > 0 else Status.FAILS, cert)


def _vacuous(label: str, m: int, dim: int) -> Verdict | None:
    if m > dim:
        return undetermined(label, m, f"vacuous: F{m} needs dim >= {m}, dim = {dim}")
    return None


# -- Grassmannians ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def _gr_character(k: int, n: int, up_to: int):
    return tangent_character_grassmannian(k, n, up_to)


@recipe("gr_coefficient")
def gr_coefficient(k: int, n: int, degree: int, lam) -> Fraction:
    """ch_degree(Gr(k,n)) paired with the class dual to sigma_lam."""
    ch = _gr_character(k, n, degree)[degree].component(degree)
    dual = GrClass.schubert(k, n, complement(tuple(lam), k, n))
    return pair_to_point(ch, dual)


@recipe("gr_min_coefficient")
def gr_min_coefficient(k: int, n: int, m: int) -> Fraction:
    ch = _gr_character(k, n, m)
    return min(ch[i].component(i).coefficient(lam)
               for i in range(1, m + 1) for lam in partitions_in_box(k, n - k, i))


def check_grassmannian(k: int, n: int, condition: int, label: str | None = None) -> Verdict:
    """Schubert-basis positivity for F_1, F_2; descent for F_m with m >= 3."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"Gr({k},{n}) needs 1 <= k <= n-1")
    label = label or f"Gr({k},{n})"
    m = condition
    v = _vacuous(label, m, k * (n - k))
    if v:
        return v
    proper = 2 <= k <= n - 2
    if m >= 3 and proper:
        return _descent_verdict(label, _mark("A", n - 1, k), m)
    ch = _gr_character(k, n, m)
    for i in range(1, m + 1):
        for lam in partitions_in_box(k, n - k, i):
            c = ch[i].component(i).coefficient(lam)
            if c <= 0:
                cycle = complement(lam, k, n)
                cert = Certificate(
                    "EffectivePairing",
                    f"ch_{i} . sigma_{list(cycle)} = {fstr(c)} <= 0",
                    {"value": c, "cycle": list(cycle), "degree": i},
                    "gr_coefficient", {"k": k, "n": n, "degree": i, "lam": list(lam)},
                    "Schubert classes are effective",
                )
                return Verdict(label, m, Status.FAILS, cert)
    value = gr_min_coefficient(k, n, m)
    cert = Certificate(
        "BasisPositivity",
        f"every Schubert coefficient of ch_1..ch_{m} is positive (min {fstr(value)})",
        {"value": value}, "gr_min_coefficient", {"k": k, "n": n, "m": m},
        "Schubert classes span the effective cones of Gr(k,n)",
    )
    return Verdict(label, m, Status.HOLDS, cert)


# -- generic family route (diagram surgery) ----------------------------------------------


def _rejected(fam: curves.PolarizedFamily) -> bool:
    """F_2 forces Pic(H_x) = Z L_x unless (H_x, L_x) is on the list."""
    return curves.exceptional_pair_match(fam) is None and not fam.L_is_generator


@recipe("family_rejection")
def _family_rejection(space: str) -> bool:
    return _rejected(curves.minimal_family(space))


def _curated_f2_table(mark: ParabolicMark) -> tuple[bool, str] | None:
    """Table datum for classical non-end nodes."""
    label, r, k = mark.diagram.label, mark.diagram.rank, mark.node
    tables = curated()["f2_tables"]
    if label in ("B", "D"):
        n = 2 * r + 1 if label == "B" else 2 * r
        return n == 3 * k + 2, tables["OG(k,n)"]["provenance"]
    if label == "C":
        return 2 * r == 3 * k - 2, tables["SG(k,n)"]["provenance"]
    return None


@recipe("curated_f2")
def _curated_f2_recipe(space: str) -> bool:
    got = _curated_f2_table(lie.parse_space(space))
    return bool(got and got[0])


def _family_f2(label: str, mark: ParabolicMark, fam: curves.PolarizedFamily) -> Verdict:
    space = str(mark)
    if _rejected(fam):
        gen = "rho(H_x) = {}".format(fam.rho) if fam.rho != 1 else "L_x is not the generator of Pic(H_x)"
        cert = Certificate(
            "DescentContradiction",
            f"F2 needs Pic(H_x) = Z L_x or an exceptional pair; {fam}: {gen}, no list entry",
            {"value": True, "hx": str(fam.description)},
            "family_rejection", {"space": space},
            "'Polarized minimal families' (2012) Thm 1.4 (2), exceptional list",
        )
        return Verdict(label, 2, Status.FAILS, cert)
    b4 = lie.betti(mark, 2)
    if b4 == 1 and fam.rho == 1:
        v = curves.f2_test_b4_one(fam, b4)
        return Verdict(label, 2, v.status, v.certificate, v.reason)
    match = curves.exceptional_pair_match(fam)
    table = _curated_f2_table(mark)
    if match is not None and table is not None:
        holds, prov = table
        if not holds:
            return undetermined(label, 2, f"{fam} matches list entry {match.entry} but the table says no")
        cert = Certificate("CuratedProvenance",
                           f"table datum; (H_x, L_x) = {fam.description} is list entry {match}",
                           {"value": True, "entry": match.entry}, "curated_f2", {"space": space}, prov)
        return Verdict(label, 2, Status.HOLDS, cert)
    return undetermined(label, 2, f"no decisive route for {fam}")


def _hx_f2(fam: curves.PolarizedFamily) -> tuple[bool, str] | None:
    """F_2 verdict on the single factor of H_x, if decided."""
    if len(fam.factors) != 1:
        return None
    f = fam.factors[0]
    v = check_space(ParabolicMark(f.diagram, f.node), 2)
    if v.status is Status.UNDETERMINED:
        return None
    return v.holds, f"{f.name}: {v.certificate.summary}"


@recipe("descent")
def _descent_recipe(space: str, condition: int) -> bool:
    return curves.descent_contradiction(curves.minimal_family(space), condition, _hx_f2) is not None


@recipe("f2_fails")
def _f2_fails_recipe(space: str) -> bool:
    return check_space(space, 2).fails


def _descent_verdict(label: str, mark: ParabolicMark, m: int) -> Verdict:
    fam = curves.minimal_family(mark)
    reason = curves.descent_contradiction(fam, m, _hx_f2)
    if reason is None:
        return undetermined(label, m, f"no descent contradiction for {fam}")
    cert = Certificate("DescentContradiction", reason, {"value": True, "hx": str(fam.description)},
                       "descent", {"space": str(mark), "condition": m},
                       "'Polarized minimal families' (2012) Thm 1.4 (3): F3 and d >= 2 force H_x F2 with rho(H_x) = 1")
    return Verdict(label, m, Status.FAILS, cert)


def _via_f2(label: str, space: str, m: int, f2: Verdict) -> Verdict:
    cert = Certificate("DescentContradiction",
                       f"F{m} implies F2, which fails: {f2.certificate.summary}",
                       {"value": True}, "f2_fails", {"space": space}, "definition of F_r")
    return Verdict(label, m, Status.FAILS, cert)


def check_family(mark: ParabolicMark, condition: int, label: str | None = None) -> Verdict:
    """Classical non-end nodes: list matching for F2, descent beyond."""
    label = label or str(mark)
    m = condition
    v = _vacuous(label, m, lie.dimension(mark))
    if v:
        return v
    if m == 1:
        return _f1(label, mark)
    fam = curves.minimal_family(mark)
    f2 = _family_f2(label, mark, fam)
    if m == 2 or f2.status is Status.UNDETERMINED:
        return f2 if m == 2 else undetermined(label, m, f"F2 undecided: {f2.reason}")
    if f2.fails:
        return _via_f2(label, str(mark), m, f2)
    return _descent_verdict(label, mark, m)


# -- OG+(k,2k) and SG(k,2k) ---------------------------------------------------------------


def sg_cycle(k: int) -> tuple[int, ...]:
    """rho = (k-1, k-2, k-3, k-3, k-4, ..., 2, 1)."""
    return tuple(x for x in [k - 1, k - 2, k - 3] + list(range(k - 3, 0, -1)) if x > 0)


OG_CYCLES = {4: (2, 1), 5: (3, 2, 1, 1)}


def certificate_cycle(flavor: Flavor, k: int) -> tuple[int, ...]:
    if flavor is Flavor.OG_PLUS:
        return OG_CYCLES[k]
    return sg_cycle(k)


def _pieri_power(flavor: Flavor, rc, p: int, times: int):
    for _ in range(times):
        rc = restricted_multiply_pieri(flavor, p, rc)
    return rc


@recipe("og_sg_pairing_published")
def og_sg_pairing_published(flavor: str, k: int, cycle) -> Fraction:
    """Staircase coefficient of ch_3 . cycle, ch_3 = a s1^3 + b s3 via Pieri."""
    fl = Flavor.parse(flavor)
    a, b = og_sg_ch3_reduced_coefficients(fl, k)
    cyc = restrict(fl, GrClass.schubert(k, 2 * k, tuple(cycle)))
    top = staircase(fl, k)
    s1 = _pieri_power(fl, cyc, 1, 3).coefficient(top)
    s3 = restricted_multiply_pieri(fl, 3, cyc).coefficient(top)
    return a * s1 + b * s3


@recipe("og_sg_pairing_derived")
def og_sg_pairing_derived(flavor: str, k: int, cycle) -> Fraction:
    """Staircase coefficient of ch_3(T) . cycle, ch_3 from the tangent bundle."""
    fl = Flavor.parse(flavor)
    ch3 = isotropic_tangent_character(fl, k, 3)[3].component(3)
    cyc = restrict(fl, GrClass.schubert(k, 2 * k, tuple(cycle)))
    return restricted_multiply(ch3, cyc).coefficient(staircase(fl, k))


@recipe("og_top_ch3")
def _og_top_ch3(k: int) -> Fraction:
    ch3 = isotropic_tangent_character(Flavor.OG_PLUS, k, 3)[3].component(3)
    return ch3.coefficient(staircase(Flavor.OG_PLUS, k)) * top_normalization(Flavor.OG_PLUS, k)


def check_og_sg_maximal(flavor, k: int, condition: int, label: str | None = None) -> Verdict:
    """OG+(k,2k) and SG(k,2k): table datum for F2, certificates for F3."""
    fl = Flavor.parse(flavor) if isinstance(flavor, str) else flavor
    if k < 3:
        raise ValueError("check_og_sg_maximal needs k >= 3")
    label = label or f"{fl.value}({k},{2 * k})"
    m = condition
    dim = k * (k - 1) // 2 if fl is Flavor.OG_PLUS else k * (k + 1) // 2
    v = _vacuous(label, m, dim)
    if v:
        return v
    mark = _mark("D", k, k) if fl is Flavor.OG_PLUS and k >= 4 else (
        _mark("A", 3, 1) if fl is Flavor.OG_PLUS else _mark("C", k, k))
    if m == 1:
        return _f1(label, mark)
    key = "OG+(k,2k)" if fl is Flavor.OG_PLUS else "SG(k,2k)"
    if m == 2:
        cert = Certificate("CuratedProvenance", f"table datum: {key} satisfies F2 for every k",
                           {"value": True}, None, {}, curated()["f2_tables"][key]["provenance"])
        return Verdict(label, 2, Status.HOLDS, cert)
    if m > 3:
        return undetermined(label, m, "only F_1..F_3 are decided here")
    if fl is Flavor.OG_PLUS and k == 3:
        value = _og_top_ch3(3)
        cert = Certificate("BasisPositivity", f"OG+(3,6) = P^3: ch_3 = {fstr(value)} [pt]",
                           {"value": value}, "og_top_ch3", {"k": 3})
        return Verdict(label, 3, Status.HOLDS if value > 0 else Status.FAILS, cert)
    if fl is Flavor.OG_PLUS and k not in OG_CYCLES:
        return _descent_verdict(label, mark, 3)
    cycle = certificate_cycle(fl, k)
    published = og_sg_pairing_published(fl.value, k, cycle)
    derived = og_sg_pairing_derived(fl.value, k, cycle)
    norm = top_normalization(fl, k)
    sym = "j*" if fl is Flavor.OG_PLUS else "i*"
    if (published <= 0) != (derived <= 0):
        return undetermined(label, 3, f"routes disagree: published {published}, derived {derived}")
    value = published * norm if isinstance(norm, Fraction) else published
    cert = Certificate(
        "EffectivePairing",
        f"ch_3 . {sym}sigma_{list(cycle)} = {fstr(published)} x deg(staircase) = {fstr(value)}",
        {"value": value, "staircase_coefficient": published, "derived_coefficient": derived,
         "normalization": norm if isinstance(norm, str) else norm, "cycle": list(cycle)},
        "og_sg_pairing_published", {"flavor": fl.value, "k": k, "cycle": list(cycle)},
        "restrictions of Schubert cycles are effective",
    )
    return Verdict(label, 3, Status.FAILS if published <= 0 else Status.HOLDS, cert)


# -- linear sections of the spinor tenfold ----------------------------------------------------


@recipe("section_index")
def _section_index(c: int) -> Fraction:
    # H_x = Gr(2,5) cut by c hyperplanes: d = 6 - c, c_1 = (5 - c) L
    return 2 * F(5 - c) - (6 - c)


@recipe("hx_section_f2")
def _hx_section_f2(c: int) -> bool:
    """True when the curated record says Gr(2,5) cut by c hyperplanes is not F2."""
    rule = curated()["hx_f2"]["Gr(2,5)^c"]["holds_iff"]
    return not _eval_rule(rule, c=c)


def _eval_rule(rule: str, **vars) -> bool:
    m = re.fullmatch(r"\s*(\w+)\s*(==|<|<=|>|>=)\s*(-?\d+)\s*", rule)
    if not m:
        raise ValueError(f"bad curated rule {rule!r}")
    x, op, y = vars[m.group(1)], m.group(2), int(m.group(3))
    return {"==": x == y, "<": x < y, "<=": x <= y, ">": x > y, ">=": x >= y}[op]


def check_linear_section_spinor(c: int, condition: int = 2) -> Verdict:
    """X = OG+(5,10) cut by c general hyperplanes."""
    if not 0 <= c < 10:
        raise ValueError("need 0 <= c < 10")
    label = f"OG+(5,10)^{c}"
    m = condition
    v = _vacuous(label, m, 10 - c)
    if v:
        return v
    if m == 1:
        i = 8 - c
        cert = Certificate("BasisPositivity", f"c_1 = {i} H", {"value": i}, None, {},
                           "adjunction: index 8 - c")
        return Verdict(label, 1, Status.HOLDS if i > 0 else Status.FAILS, cert)
    if c == 0:
        v = check_og_sg_maximal(Flavor.OG_PLUS, 5, m)
        return Verdict(label, m, v.status, v.certificate, v.reason)
    value = _section_index(c)
    table = curated()["f2_tables"]["OG+(5,10)^c"]
    f2 = Verdict(label, 2, Status.HOLDS if value > 0 else Status.FAILS, Certificate(
        "IndexCriterion", f"-2K_H - dL = (2*{5 - c} - {6 - c}) L = {value} L for H_x = Gr(2,5)^{c}",
        {"value": value}, "section_index", {"c": c},
        f"b4 = 1 criterion; agrees with {table['provenance']}"))
    if m == 2:
        return f2
    if m > 3:
        return undetermined(label, m, "only F_1..F_3 are decided here")
    if f2.fails:
        return _via_f2(label, label, m, f2)
    prov = curated()["hx_f2"]["Gr(2,5)^c"]["provenance"]
    cert = Certificate("DescentContradiction",
                       f"F3 forces H_x = Gr(2,5)^{c} to be F2 (d = {6 - c} >= 2), and it is not",
                       {"value": True}, "hx_section_f2", {"c": c}, prov)
    return Verdict(label, 3, Status.FAILS, cert)


# -- exceptional spaces -------------------------------------------------------------------------


@recipe("t_ch3_pairing")
def t_ch3_pairing(space: str, cycle=None) -> Fraction:
    """T(ch_3 X) on H_x paired with an effective cycle.

    For H_x = Gr the cycle is a Schubert class; otherwise T(ch_3 X) = c L^2
    and c is returned (the pairing with any surface S is c L^2.S).
    """
    fam = curves.minimal_family(space)
    t = curves.t_ch3_from_family(fam)
    comp = t.component(2)
    if cycle is None:
        return F(comp)
    k, n = t.ring.k, t.ring.n
    return pair_to_point(comp, GrClass.schubert(k, n, tuple(cycle)))


@recipe("e8_axiom_bound")
def _e8_bound() -> Fraction:
    return curves.double_transform_bound(curves.minimal_family("E8/P8"),
                                         curves.minimal_family("E7/P7"))


@recipe("f4p4_coefficient")
def _f4p4(i: int) -> Fraction:
    spec = CompleteIntersectionSpec(NAMED_AMBIENTS["E6/P6"](), (1,))
    return ci_coefficients(spec, i)[i - 1]


@recipe("g2_chern_pairing")
def _g2_pairing() -> Fraction:
    rec = curated()["chern_numbers"]["G2/P2"]
    num = rec["numbers"]
    # 6 ch_3 = c_1^3 - 3 c_1 c_2 + 3 c_3, paired with c_1^2
    six = num["c1^5"] - 3 * num["c1^3c2"] + 3 * num["c1^2c3"]
    # normalized by 27 = i_X^3
    return F(six, 6) / rec["index"] ** 3


def _exceptional_f3(label: str, mark: ParabolicMark, f2: Verdict) -> Verdict:
    name = str(mark)
    label_, r, k = mark.diagram.label, mark.diagram.rank, mark.node
    if f2.fails:
        return _via_f2(label, name, 3, f2)
    if label_ == "E" and (k in (1, 2) or (k == r and r in (6, 7))):
        fam = curves.minimal_family(mark)
        t = curves.t_ch3_from_family(fam)
        comp = t.component(2)
        if k == 2:
            kk, nn = t.ring.k, t.ring.n
            worst = min(partitions_in_box(kk, nn - kk, 2), key=comp.coefficient)
            cycle = complement(worst, kk, nn)
            value = t_ch3_pairing(name, list(cycle))
            summary = f"T(ch_3) = {comp}; paired with sigma_{list(cycle)}: {fstr(value)}"
            args = {"space": name, "cycle": list(cycle)}
        else:
            value = F(comp)
            summary = f"T(ch_3) = {fstr(value)} L^2 on H_x = {fam.description}"
            args = {"space": name}
        cert = Certificate("EffectivePairing", summary, {"value": value}, "t_ch3_pairing", args,
                           "T preserves positivity ('Polarized minimal families' (2012) Lemma 2.7)")
        return Verdict(label, 3, Status.FAILS if value <= 0 else Status.HOLDS, cert)
    if name == "E8/P8":
        value = _e8_bound()
        ax = curves.POSITIVITY_AXIOM
        cert = Certificate("AxiomAssisted",
                           f"T(T(ch_3)) <= {fstr(value)} L_2 using {ax.statement}",
                           {"value": value}, "e8_axiom_bound", {}, ax.provenance,
                           (f"{ax.name}: {ax.statement} ({ax.provenance})",))
        return Verdict(label, 3, Status.FAILS if value <= 0 else Status.HOLDS, cert)
    if name == "F4/P4":
        value = _f4p4(3)
        cert = Certificate("EffectivePairing",
                           f"hyperplane section of E6/P6: ch_3 = {fstr(value)} H^3",
                           {"value": value}, "f4p4_coefficient", {"i": 3},
                           curated()["normal_bundles"]["E6/P6"]["provenance"])
        return Verdict(label, 3, Status.FAILS if value <= 0 else Status.HOLDS, cert)
    if name == "G2/P2":
        value = _g2_pairing()
        cert = Certificate("EffectivePairing", f"ch_3 . c_1^2 / 27 = {fstr(value)}",
                           {"value": value}, "g2_chern_pairing", {},
                           curated()["chern_numbers"]["G2/P2"]["provenance"])
        return Verdict(label, 3, Status.FAILS if value <= 0 else Status.HOLDS, cert)
    return _descent_verdict(label, mark, 3)


def check_exceptional(space, condition: int) -> Verdict:
    """E6, E7, E8, F4 and G2 modulo a maximal parabolic."""
    mark = lie.parse_space(space) if isinstance(space, str) else space
    label = _space_label(space)
    if mark.diagram.label not in "EFG":
        raise ValueError(f"{label} is not of exceptional type")
    mark = ParabolicMark(mark.diagram, lie.canonical_node(mark.diagram, mark.node))
    name = str(mark)
    m = condition
    v = _vacuous(label, m, lie.dimension(mark))
    if v:
        return v
    if m == 1:
        return _f1(label, mark)
    if name == "G2/P1":
        v = check_complete_intersection(CompleteIntersectionSpec(Projective(6), (2,)), m, label)
        return v
    if m > 3:
        return undetermined(label, m, "only F_1..F_3 are decided here")
    if name == "F4/P4":
        value = _f4p4(2)
        f2 = Verdict(label, 2, Status.HOLDS if value > 0 else Status.FAILS, Certificate(
            "BasisPositivity", f"hyperplane section of E6/P6: ch_2 = {fstr(value)} H^2 and b4 = 1",
            {"value": value}, "f4p4_coefficient", {"i": 2},
            curated()["normal_bundles"]["E6/P6"]["provenance"]))
    else:
        fam = curves.minimal_family(mark)
        f2 = _family_f2(label, mark, fam)
    if m == 2:
        return f2
    return _exceptional_f3(label, mark, f2)


# -- dispatcher -------------------------------------------------------------------------------


def check_space(space, condition: int) -> Verdict:
    """Decide F_condition for a descriptor or a ParabolicMark."""
    if isinstance(space, Space):
        sp, label = space, space.name
    elif isinstance(space, ParabolicMark):
        sp, label = normalize(space), str(space)
    else:
        sp, label = parse_descriptor(space), space.strip()
    m = condition
    if m < 1:
        raise ValueError("conditions start at F1")
    if sp.kind == "P":
        return check_complete_intersection(CompleteIntersectionSpec(Projective(sp.params[0])), m, label)
    if sp.kind == "Q":
        n = sp.params[0]
        return check_complete_intersection(CompleteIntersectionSpec(Projective(n + 1), (2,)), m, label)
    if sp.kind == "Gr":
        return check_grassmannian(*sp.params, m, label=label)
    if sp.kind in ("OG+", "SG"):
        return check_og_sg_maximal(Flavor.parse(sp.kind), sp.params[0], m, label=label)
    if sp.kind == "section":
        v = check_linear_section_spinor(sp.params[0], m)
        return Verdict(label, m, v.status, v.certificate, v.reason)
    if sp.kind == "family":
        return check_family(sp.mark, m, label)
    v = check_exceptional(sp.mark, m)
    return Verdict(label, m, v.status, v.certificate, v.reason)


# -- theorem sweeps -----------------------------------------------------------------------------


def f2_expected(label: str, n: int, k: int) -> bool:
    """The F2 list for G/P^k of Picard rank 1."""
    if label == "A":
        j = min(k, n + 1 - k)
        return j == 1 or (2 <= j and n in (2 * j - 1, 2 * j))
    if label == "B":
        return k in (1, n) or (2 <= k <= n - 1 and 2 * n == 3 * k + 1)
    if label == "C":
        return k in (1, n) or (2 <= k <= n - 1 and 2 * n == 3 * k - 2)
    if label == "D":
        return k in (1, n - 1, n) or (2 <= k < n - 1 and 2 * n == 3 * k + 2)
    if label == "E":
        return k in (1, 2, n) or (n == 6 and k == 6)
    if label == "F":
        return k == 4
    return label == "G"


def f3_expected(mark: ParabolicMark) -> bool:
    """P^n (n >= 3) or Q^n (n >= 7), told apart by index = dim + 1 and
    index = dim respectively."""
    dim, idx = lie.dimension(mark), lie.fano_index(mark)
    return (idx == dim + 1 and dim >= 3) or (idx == dim and dim >= 7)


def sweep_marks(max_rank: int, family: str = "all") -> list[ParabolicMark]:
    """Every G/P^k with rank <= max_rank; exceptional types in full."""
    marks = []
    classical = family in ("all", "classical")
    exceptional = family in ("all", "exceptional")
    if classical:
        for label, lo in (("A", 1), ("B", 2), ("C", 3), ("D", 4)):
            for r in range(lo, max_rank + 1):
                marks += lie.all_maximal_marks(label, r)
    if exceptional:
        for label, r in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
            marks += lie.all_maximal_marks(label, r)
    return marks


@dataclass(frozen=True)
class SweepRow:
    space: str
    dim: int
    expected: bool
    verdict: Verdict
    hx: str = ""

    @property
    def agrees(self) -> bool:
        return self.verdict.status is not Status.UNDETERMINED and self.verdict.holds == self.expected


@dataclass(frozen=True)
class SweepReport:
    which: str
    condition: int
    rows: tuple

    @property
    def disagreements(self) -> list:
        return [r for r in self.rows if not r.agrees]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_table(self) -> str:
        head = ("space", "dim", f"F{self.condition}", "expected", "certificate", "H_x", "")
        lines = [head]
        for r in self.rows:
            kind = r.verdict.certificate.kind if r.verdict.certificate else "-"
            lines.append((r.space, str(r.dim), r.verdict.status.value,
                          "Holds" if r.expected else "Fails", kind, r.hx,
                          "" if r.agrees else "MISMATCH"))
        widths = [max(len(row[i]) for row in lines) for i in range(len(head))]
        out = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in lines]
        out.append(f"{len(self.rows)} spaces, {len(self.disagreements)} disagreements")
        return "\n".join(out)

    def to_json(self) -> str:
        return json.dumps([{"space": r.space, "dim": r.dim, "expected": r.expected,
                            "agrees": r.agrees, "verdict": r.verdict.to_dict()} for r in self.rows],
                          indent=2, sort_keys=True)


def _hx_text(mark: ParabolicMark) -> str:
    try:
        return str(curves.minimal_family(mark).description)
    except curves.Unsupported:
        return "-"


def theorem_sweep(which: str, max_rank: int = 12, family: str = "all") -> SweepReport:
    """Run the checkers over a range and diff against the classification lists.

    ``which`` is "1.1" (F2), "1.2" (F3) or "1.3" (complete intersections).
    Spaces of dimension below the condition are skipped: F_m is vacuous there.
    """
    which = which.replace("Thm", "").replace("_", ".").strip()
    if which == "1.3":
        return bounds_report()
    if which not in ("1.1", "1.2"):
        raise ValueError(f"unknown theorem {which!r}")
    m = 2 if which == "1.1" else 3
    rows = []
    for mark in sweep_marks(max_rank, family):
        dim = lie.dimension(mark)
        if dim < m:
            continue
        if which == "1.1":
            expected = f2_expected(mark.diagram.label, mark.diagram.rank, mark.node)
        else:
            expected = f3_expected(mark)
        rows.append(SweepRow(str(mark), dim, expected, check_space(mark, m), _hx_text(mark)))
    rows.sort(key=lambda r: _sort_key(r.space))
    return SweepReport(which, m, tuple(rows))


def _sort_key(space: str):
    m = re.fullmatch(r"([A-G])(\d+)/P(\d+)", space)
    return (m.group(1), int(m.group(2)), int(m.group(3))) if m else (space, 0, 0)


@dataclass(frozen=True)
class BoundRow:
    key: str
    label: str
    bound: int
    minimal: int | None

    @property
    def agrees(self) -> bool:
        return self.minimal == self.bound + 1


@dataclass(frozen=True)
class BoundsReport:
    rows: tuple
    which: str = "1.3"
    condition: int = 3

    @property
    def disagreements(self) -> list:
        return [r for r in self.rows if not r.agrees]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_table(self) -> str:
        lines = [("family", "n > bound", "minimal n (computed)", "")]
        for r in self.rows:
            lines.append((r.label, str(r.bound), str(r.minimal), "" if r.agrees else "MISMATCH"))
        widths = [max(len(row[i]) for row in lines) for i in range(4)]
        out = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in lines]
        out.append(f"{len(self.rows)} families, {len(self.disagreements)} disagreements")
        return "\n".join(out)

    def to_json(self) -> str:
        return json.dumps([{"key": r.key, "label": r.label, "bound": r.bound, "minimal_n": r.minimal,
                            "agrees": r.agrees} for r in self.rows], indent=2, sort_keys=True)


def bounds_report() -> BoundsReport:
    fams = curated()["ci_thresholds"]["families"]
    return BoundsReport(tuple(BoundRow(f["key"], f["label"], f["bound"], minimal_n(f)) for f in fams))
