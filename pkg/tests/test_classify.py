"""Decision drivers, certificates and the classification sweeps."""

from fractions import Fraction

import pytest

from higherfano import classify, lie
from higherfano.chern import CompleteIntersectionSpec, Projective, Weighted
from higherfano.classify import (
    check_complete_intersection,
    check_grassmannian,
    check_linear_section_spinor,
    check_og_sg_maximal,
    check_space,
    normalize,
    og_sg_pairing_derived,
    og_sg_pairing_published,
    parse_descriptor,
    theorem_sweep,
)
from higherfano.schubert import Flavor
from higherfano.verdict import RECIPES, reverify

F = Fraction


def kind(v):
    return v.certificate.kind if v.certificate else None


# -- Grassmannians --------------------------------------------------------------


def test_grassmannian_examples():
    assert check_grassmannian(2, 5, 2).holds
    assert check_grassmannian(2, 4, 2).holds
    v = check_grassmannian(3, 7, 3)
    assert v.fails and kind(v) == "DescentContradiction"


def test_gr_2_6_fails_f2():
    # the table's condition n in {2k, 2k+1} excludes n = 6 for k = 2, and
    # ch_2 pairs to zero with the top-degree-4 class s33
    v = check_grassmannian(2, 6, 2)
    assert v.fails and kind(v) == "EffectivePairing" and v.certificate.value == 0
    assert check_grassmannian(2, 7, 2).fails


def test_grassmannian_range():
    with pytest.raises(ValueError):
        check_grassmannian(0, 5, 2)


@pytest.mark.parametrize("n", range(4, 13))
def test_gr_table_condition(n):
    for k in range(2, n // 2 + 1):
        assert check_grassmannian(k, n, 2).holds == (n in (2 * k, 2 * k + 1)), (k, n)


@pytest.mark.parametrize("n", range(2, 13))
def test_gr_symmetry(n):
    for k in range(1, n):
        for m in (1, 2, 3):
            a, b = check_grassmannian(k, n, m), check_grassmannian(n - k, n, m)
            assert a.status == b.status, (k, n, m)


def test_gr_direct_and_descent_agree():
    # F3 on Gr(k, n) fails by descent; ch_3 basis positivity must already fail
    # or F2 must fail, so the direct computation reaches the same verdict
    for n in range(4, 10):
        for k in range(2, n - 1):
            direct = classify.gr_min_coefficient(k, n, 3) > 0 and classify.gr_min_coefficient(k, n, 2) > 0
            assert not direct
            assert check_grassmannian(k, n, 3).fails


# -- OG+ and SG ------------------------------------------------------------------


def test_og_sg_f2_is_curated():
    for flavor in Flavor:
        for k in range(3, 8):
            v = check_og_sg_maximal(flavor, k, 2)
            assert v.holds and kind(v) == "CuratedProvenance" and v.certificate.provenance


@pytest.mark.parametrize("flavor,k,cycle", [("OG+", 4, (2, 1)), ("OG+", 5, (3, 2, 1, 1))]
                         + [("SG", k, classify.sg_cycle(k)) for k in range(3, 9)])
def test_certificate_pairings_vanish(flavor, k, cycle):
    assert og_sg_pairing_published(flavor, k, cycle) == 0
    assert og_sg_pairing_derived(flavor, k, cycle) == 0


def test_sg_cycle_shape():
    assert classify.sg_cycle(5) == (4, 3, 2, 2, 1)
    assert classify.sg_cycle(3) == (2, 1)


def test_og_pairing_certificates():
    v = check_og_sg_maximal("OG+", 5, 3)
    assert v.fails and kind(v) == "EffectivePairing" and v.certificate.value == 0
    assert v.certificate.data["derived_coefficient"] == 0
    assert v.certificate.data["normalization"] == 16
    for k in range(6, 10):
        v = check_og_sg_maximal("OG+", k, 3)
        assert v.fails and kind(v) == "DescentContradiction"
    assert check_og_sg_maximal("OG+", 3, 3).holds
    for k in range(3, 9):
        v = check_og_sg_maximal("SG", k, 3)
        assert v.fails and kind(v) == "EffectivePairing"
    with pytest.raises(ValueError):
        check_og_sg_maximal("SG", 2, 3)


def test_og48_routes_agree():
    via_quadric = check_space("OG+(4,8)", 3)
    direct = check_og_sg_maximal("OG+", 4, 3)
    assert via_quadric.fails and direct.fails


# -- linear sections -------------------------------------------------------------


def test_linear_sections():
    for c in range(0, 4):
        assert check_linear_section_spinor(c, 2).holds
        assert check_linear_section_spinor(c, 3).fails
    assert check_linear_section_spinor(4, 2).fails
    assert check_linear_section_spinor(0, 3).certificate.kind == check_og_sg_maximal("OG+", 5, 3).certificate.kind
    assert kind(check_linear_section_spinor(3, 3)) == "DescentContradiction"


# -- exceptional ------------------------------------------------------------------


def test_exceptional_examples():
    v = check_space("G2/P2", 3)
    assert v.fails and v.certificate.value == -1
    assert RECIPES["g2_chern_pairing"]() == -1
    six_ch3 = 4374 - 3 * 2106 + 3 * 594
    assert six_ch3 == -162
    v = check_space("E7/P7", 3)
    assert v.fails and v.certificate.value == 0
    assert check_space("E7/P7", 2).holds
    for m in (1, 2, 3):
        a, b = check_space("E6/P1", m), check_space("E6/P6", m)
        assert (a.status, kind(a), a.certificate.value) == (b.status, kind(b), b.certificate.value)


def test_e8_axiom_assisted():
    v = check_space("E8/P8", 3)
    assert v.fails and kind(v) == "AxiomAssisted"
    assert v.certificate.value == F(-1, 6) and v.certificate.axioms


def test_e_n_p2_pairing():
    v = check_space("E7/P2", 3)
    assert v.fails and v.certificate.value == F(-2, 3)


@pytest.mark.parametrize("space", ["E6/P3", "E6/P4", "E7/P3", "E7/P4", "E7/P5", "E7/P6",
                                   "E8/P3", "E8/P4", "E8/P5", "E8/P6", "E8/P7", "F4/P2",
                                   "F4/P1", "F4/P3"])
def test_exceptional_f2_failures(space):
    assert check_space(space, 2).fails


def test_f4_p4_values():
    assert RECIPES["f4p4_coefficient"](2) == F(5, 2)
    assert RECIPES["f4p4_coefficient"](3) == F(-1, 6)
    assert check_space("F4/P4", 2).holds and check_space("F4/P4", 3).fails


# -- complete intersections ----------------------------------------------------------


def test_ci_examples():
    cubic = lambda n: CompleteIntersectionSpec(Projective(n + 1), (3,))  # noqa: E731
    assert not check_complete_intersection(cubic(25), 3).holds
    assert check_complete_intersection(cubic(26), 3).holds
    triple = lambda n: CompleteIntersectionSpec(Projective(n + 3), (2, 2, 2))  # noqa: E731
    assert not check_complete_intersection(triple(20), 3).holds
    assert check_complete_intersection(triple(21), 3).holds
    for m in range(1, 8):
        assert check_complete_intersection(CompleteIntersectionSpec(Projective(7), ()), m).holds


def test_ci_vacuous_condition():
    v = check_complete_intersection(CompleteIntersectionSpec(Projective(2), ()), 3)
    assert v.status.value == "Undetermined"


@pytest.mark.parametrize("degrees", [(2,), (3,), (2, 2), (2, 3), (4,)])
def test_ci_monotone(degrees):
    seen = False
    for N in range(len(degrees) + 3, 80):
        holds = check_complete_intersection(CompleteIntersectionSpec(Projective(N), degrees), 3).holds
        assert holds or not seen
        seen = seen or holds


def test_weighted_monotone():
    seen = False
    for n in range(1, 80):
        spec = CompleteIntersectionSpec(Weighted((2,) + (1,) * (n + 1)), (4,))
        holds = check_complete_intersection(spec, 3).holds
        assert holds or not seen
        seen = seen or holds
    assert seen


def test_bounds_report():
    rep = classify.bounds_report()
    assert rep.ok and len(rep.rows) == 11
    assert {r.key: r.minimal for r in rep.rows}["quartic"] == 63


# -- normalization -----------------------------------------------------------------


@pytest.mark.parametrize("text,name", [
    ("A3/P2", "Gr(2,4)"), ("A5/P4", "Gr(2,6)"), ("B2/P2", "P^3"), ("C4/P1", "P^7"), ("C2/P2", "Q^3"),
    ("D4/P4", "Q^6"), ("D5/P4", "OG+(5,10)"), ("B4/P4", "OG+(5,10)"), ("B3/P1", "Q^5"),
    ("C4/P4", "SG(4,8)"), ("E6/P1", "E6/P6"), ("Gr(2,5)", "Gr(2,5)"), ("Q^7", "Q^7"),
])
def test_normalization(text, name):
    assert parse_descriptor(text).name == name


def test_bad_descriptor():
    with pytest.raises(ValueError):
        parse_descriptor("X9/P1")


def test_vacuous_conditions_are_undetermined():
    v = check_space("A1/P1", 2)
    assert v.status.value == "Undetermined" and "vacuous" in v.reason
    assert check_space("A1/P1", 1).holds


# -- sweeps --------------------------------------------------------------------------


def test_f2_sweep_agrees(sweep_f2):
    assert sweep_f2.ok, [r.space for r in sweep_f2.disagreements]


def test_f3_sweep_agrees(sweep_f3):
    assert sweep_f3.ok, [r.space for r in sweep_f3.disagreements]
    holders = [r for r in sweep_f3.rows if r.verdict.holds]
    for r in holders:
        name = normalize(lie.parse_space(r.space)).name
        kind_, dim = name.split("^")
        assert (kind_ == "P" and int(dim) >= 3) or (kind_ == "Q" and int(dim) >= 7)


def test_b_rows_of_f2_sweep(sweep_f2):
    for r in sweep_f2.rows:
        mark = lie.parse_space(r.space)
        n, k = mark.diagram.rank, mark.node
        if mark.diagram.label == "B" and 2 <= k <= n - 1:
            assert r.verdict.holds == (2 * n == 3 * k + 1), r.space


def test_every_certificate_reverifies(sweep_f2, sweep_f3):
    for rep in (sweep_f2, sweep_f3):
        for r in rep.rows:
            cert = r.verdict.certificate
            assert cert is not None and reverify(cert), r.space
            if r.verdict.fails and cert.kind == "EffectivePairing":
                assert cert.value <= 0
            if r.verdict.holds and cert.kind in ("BasisPositivity", "IndexCriterion", "NumericThreshold"):
                assert cert.value > 0


def test_empty_sweep():
    assert theorem_sweep("1.1", 0, "classical").rows == ()
    with pytest.raises(ValueError):
        theorem_sweep("9.9")
