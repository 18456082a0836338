import itertools as it

import pytest

from cohomology import (CohVector, CohomologyTable, bottPn, buildTable, cohCurve, cohFlag3, cohProduct,
    cohProjectiveSpace, cohQuadric, cohScrollP1, lineBundleCohomology, GENERIC_CURVE_NOTE)
from labErrors import InconsistentInputError, VarietyMismatchError, WindowTooSmallError
from varieties import LineBundleSpec, parseVariety


def test_projective_space():
    assert cohProjectiveSpace(3, 2)==(10, 0, 0, 0)
    assert cohProjectiveSpace(3, -5)==(0, 0, 0, 4)
    assert cohProjectiveSpace(3, -2).isZero()
    assert cohProjectiveSpace(1, -3)==(0, 2)


def test_bott_formula():
    assert bottPn(2, 1, 0)==(0, 1, 0)
    assert bottPn(2, 1, 2)==(3, 0, 0)
    assert bottPn(3, 3, 0)==(0, 0, 0, 1)
    #Omega^0 is the structure sheaf
    for t in range(-6, 5):
        assert bottPn(3, 0, t)==cohProjectiveSpace(3, t)
    #Omega^n = O(-n-1)
    for t in range(-3, 4):
        assert bottPn(2, 2, t)==cohProjectiveSpace(2, t-3)


def test_quadric():
    assert cohQuadric(3, 0)==(1, 0, 0, 0)
    assert cohQuadric(3, 1)==(5, 0, 0, 0)
    assert cohQuadric(4, 1)==(6, 0, 0, 0, 0)
    assert cohQuadric(3, -3)==(0, 0, 0, 1)
    for t in (-1, -2):
        assert cohQuadric(3, t).isZero()


def test_kunneth():
    assert cohProduct([(1, 0), (1, 1), (1, -2)])==(0, 2, 0, 0)
    assert cohProduct([(1, -2), (1, -2), (1, -2)])==(0, 0, 0, 1)
    assert cohProduct([(2, 1), (1, -3)])==(0, 6, 0, 0)


def test_borel_weil_bott():
    assert cohFlag3(0, 0)==(1, 0, 0, 0)
    assert cohFlag3(1, 0)==(3, 0, 0, 0)
    assert cohFlag3(1, 1)==(8, 0, 0, 0)
    assert cohFlag3(-1, 3).isZero()
    assert cohFlag3(-2, 2)==(0, 3, 0, 0)
    assert cohFlag3(-4, 0)==(0, 0, 3, 0)
    assert cohFlag3(-2, -2)==(0, 0, 0, 1)


#the two projections of flag3 play symmetric roles
def test_flag_swap_symmetry():
    for a1, a2 in it.product(range(-6, 7), repeat=2):
        assert cohFlag3(a1, a2)==cohFlag3(a2, a1)


def test_scroll_over_p1():
    assert cohScrollP1((1, 1, 1), 1, 0)==(6, 0, 0, 0)
    assert cohScrollP1((1, 1, 2), 0, -3)==(0, 2, 0, 0)
    assert cohScrollP1((1, 1, 1), -1, 5).isZero()
    #K=-3h+f
    assert cohScrollP1((1, 1, 1), -3, 1)==(0, 0, 0, 1)


def test_curves():
    assert cohCurve(0, -3, 'exact_p1')==(0, 2)
    assert cohCurve(2, 5, 'generic')==(4, 0)
    assert cohCurve(3, 1, 'generic')==(0, 1)
    assert cohCurve(2, 1, 'theta')==(0, 0)
    with pytest.raises(InconsistentInputError):
        cohCurve(2, 3, 'theta')


def test_vector_arithmetic():
    v=CohVector((1, 2, 0))
    assert v.euler()==-1
    assert v.nonzeroCount()==2
    assert v+CohVector((0, 1, 1))==(1, 3, 1)
    assert v.scaled(3)==(3, 6, 0)
    with pytest.raises(InconsistentInputError):
        CohVector((1, -1))
    with pytest.raises(VarietyMismatchError):
        v+CohVector((1, 1))


def serreDualityBoxes():
    boxes=[("p3", 1), ("p2", 1), ("q3", 1), ("q4", 1), ("curve:0", 1), ("curve:3:2", 1), ("flag3", 2),
        ("triple_p1", 3), ("scroll-p1:1,1,2", 2), ("scroll-p1:1,2,2,3", 2)]
    for text, picardRank in boxes:
        variety=parseVariety(text)
        for coords in it.product(range(-4, 5), repeat=picardRank):
            yield variety, LineBundleSpec(variety.varietyId, coords)


def test_serre_duality():
    count=0
    for variety, L in serreDualityBoxes():
        h=lineBundleCohomology(variety, L)
        dual=lineBundleCohomology(variety, L.serreDual(variety))
        assert h.dims==tuple(reversed(dual.dims)), str(L)+" on "+variety.varietyId
        count+=1
    assert count>=500


def test_engine_rejects_foreign_bundles():
    with pytest.raises(VarietyMismatchError):
        lineBundleCohomology(parseVariety("p3"), LineBundleSpec("q3", (1,)))


def test_build_table():
    flag=parseVariety("flag3")
    table=buildTable(flag, "-1,3")
    assert table.window==(-4, 2)
    assert table.rank==1
    assert table.h(1, -1)==3
    assert table.row(-3)==(0, 0, 3, 0)
    assert table.chi(1)==15
    assert table.assumptions==[]

    doubled=buildTable(flag, "2*O:-1,3", (-4, 0))
    assert doubled.h(1, -1)==6
    assert doubled.rank==2


def test_table_window():
    table=buildTable(parseVariety("p3"), "O", (-4, 0))
    with pytest.raises(WindowTooSmallError) as info:
        table.row(3)
    assert info.value.missing==[3]
    small=table.restricted(-2, 0)
    assert small.twists()==[-2, -1, 0]
    with pytest.raises(WindowTooSmallError):
        CohomologyTable("p3", 1, -1, 1, {-1: (0, 0, 0, 0), 0: (1, 0, 0, 0)})


def test_table_rejects_inconsistent_rows():
    with pytest.raises(InconsistentInputError):
        CohomologyTable("p2", 1, 0, 1, {0: (1, 0, 0), 1: (3, 0)})
    with pytest.raises(InconsistentInputError):
        CohomologyTable("p2", 1, 1, 0, {})


def test_riemann_roch_validation():
    p2=parseVariety("p2")
    table=buildTable(p2, "O:1+O:-2", (-3, 2))
    assert table.validate(p2)
    broken=CohomologyTable("p2", 2, -3, 2, dict(table.rows), table.chern)
    broken.rows[0]=CohVector((5, 0, 0))
    with pytest.raises(InconsistentInputError):
        broken.validate(p2)


def test_positive_genus_tables_carry_their_model():
    table=buildTable(parseVariety("curve:2:3"), "theta:1+theta")
    assert table.assumptions==[GENERIC_CURVE_NOTE]
    assert table.chi(0)==3
