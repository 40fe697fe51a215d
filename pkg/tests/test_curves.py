"""Families of minimal rational curves and the transform formulas."""

from fractions import Fraction

import pytest

from higherfano import lie
from higherfano.curves import (
    NamedPair,
    PolarizedFamily,
    SpecialCase,
    Unsupported,
    bernoulli_A,
    ch_family,
    descent_contradiction,
    descent_report,
    exceptional_pair_match,
    f2_test_b4_one,
    minimal_family,
    symbolic_transform_identities,
    t_ch3_from_family,
)
from higherfano.schubert import GrClass

F = Fraction


def names(space):
    return [f.name for f in minimal_family(space).factors]


def test_surgery_examples():
    assert names("E8/P6") == ["OG+(5,10)", "P^2"]
    for n in range(3, 9):
        for k in range(2, n):
            fam = minimal_family(f"A{n}/P{k}")
            dims = sorted(f.dim for f in fam.factors)
            assert dims == sorted([k - 1, n - k]) and all(f.kind == "P" for f in fam.factors)
    f42 = minimal_family("F4/P2")
    assert sorted(f.name for f in f42.factors) == ["P^1", "P^2"]
    assert not f42.minimal_embedding


@pytest.mark.parametrize("label,rank", [("A", 5), ("D", 6), ("E", 6), ("E", 7), ("E", 8)])
def test_simply_laced_embeddings_are_minimal(label, rank):
    for k in range(1, rank + 1):
        fam = minimal_family(lie.ParabolicMark(lie.DynkinDiagram(label, rank), k))
        assert fam.minimal_embedding


@pytest.mark.parametrize("label,rank", [("A", 6), ("B", 5), ("C", 5), ("D", 6), ("E", 6),
                                        ("E", 7), ("E", 8), ("F", 4), ("G", 2)])
def test_family_dimension_is_index_minus_two(label, rank):
    for k in range(1, rank + 1):
        mark = lie.ParabolicMark(lie.DynkinDiagram(label, rank), k)
        if lie.is_short_root(mark.diagram, k):
            continue
        assert minimal_family(mark).d == lie.fano_index(mark) - 2


def test_short_root_cases():
    special = minimal_family("F4/P3")
    assert isinstance(special.description, SpecialCase) and special.rho == 2
    assert exceptional_pair_match(special) is None
    sg = minimal_family("C5/P3")
    assert isinstance(sg.description, NamedPair)
    with pytest.raises(Unsupported):
        minimal_family("B4/P4")


def test_exceptional_pair_examples():
    for k in range(2, 8):
        m = exceptional_pair_match(minimal_family(f"C{k}/P{k}"))
        assert m is not None and m.entry == "f"
    assert exceptional_pair_match(minimal_family("F4/P1")) is None
    assert exceptional_pair_match(minimal_family("G2/P2")).entry == "g"
    assert exceptional_pair_match(minimal_family("A4/P2")).entry == "b"
    assert exceptional_pair_match(minimal_family("A5/P3")).entry == "a"
    assert exceptional_pair_match(minimal_family("A6/P2")) is None


def test_bernoulli_values():
    A = bernoulli_A(4)
    assert list(A.A) == [1, F(1, 2), F(1, 12), 0, F(-1, 720)]
    assert len(bernoulli_A(8)) == 9
    with pytest.raises(ValueError):
        bernoulli_A(-1)


def test_symbolic_transform_identities():
    assert all(v == 0 for v in symbolic_transform_identities().values())


def test_ch_family_degenerate_case():
    import sympy

    L, d = sympy.symbols("L d")
    got = ch_family(2, {2: 0, 3: 0}, L, d, one=sympy.Integer(1))
    assert sympy.simplify(got - (-L ** 2 / 2 + (d + 2) / 12 * L ** 2)) == 0
    with pytest.raises(ValueError):
        ch_family(3, {2: 0}, L, d)


@pytest.mark.parametrize("n", [6, 7, 8])
def test_t_ch3_for_spinor_families(n):
    k = n - 1
    fam = minimal_family(f"E{n}/P1")
    assert fam.c1_in_L == 2 * (k - 1) and fam.d == k * (k - 1) // 2
    assert fam.ch2.component(2) == 2
    assert t_ch3_from_family(fam).component(2) == F((k - 5) * (k - 8), 12)


@pytest.mark.parametrize("n", [6, 7, 8])
def test_t_ch3_for_grassmannian_families(n):
    fam = minimal_family(f"E{n}/P2")
    got = t_ch3_from_family(fam).component(2)
    s = lambda *lam: GrClass.schubert(3, n, lam)  # noqa: E731
    want = (s(1) ** 2).scale(F(3 * n - 19, 6)) - s(1, 1).scale(n - 6)
    assert got == want


def test_t_ch3_e7_p7_vanishes():
    fam = minimal_family("E7/P7")
    assert fam.c1_in_L == 12 and fam.d == 16
    assert t_ch3_from_family(fam).is_zero()


def test_index_criterion_examples():
    v = f2_test_b4_one(minimal_family("E8/P8"), 1)
    assert v.holds and v.certificate.value == 9
    for n in (6, 7, 8):
        k = n - 1
        v = f2_test_b4_one(minimal_family(f"E{n}/P1"), 1)
        assert v.holds and v.certificate.value == F((k - 1) * (8 - k), 2)
    fam = minimal_family("B4/P1")
    assert f2_test_b4_one(fam, 2).status.value == "Undetermined"


def test_index_criterion_boundary_fails():
    fam = PolarizedFamily("test", SpecialCase("boundary", 1), 6, 1, (1,), F(3))
    v = f2_test_b4_one(fam, 1)
    assert v.fails and v.certificate.value == 0


def test_descent_examples():
    fam = minimal_family("E8/P6")
    assert descent_report([3], fam).rho_one
    assert "rho" in descent_contradiction(fam, 3)
    rep = descent_report([2], minimal_family("B4/P1"))
    assert [c for c, _ in rep.forced] == ["F1"]
    flat = PolarizedFamily("pt", SpecialCase("point", 1), 0, 1, (1,), F(1))
    assert descent_report([4], flat).forced == ()


def test_eta_formula():
    for space in ("E6/P1", "E7/P7", "B4/P1"):
        fam = minimal_family(space)
        assert fam.eta_in_L == fam.c1_in_L - F(fam.d, 2) - F(1, 2)
