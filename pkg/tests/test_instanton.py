from fractions import Fraction
import itertools as it

import pytest

from cohomology import CohomologyTable, buildTable
import instanton
from instanton import (BettiShape, InstantonVerdict, bettiShapeCheck, checkInstanton, chiFromRank, chiPolynomial, directSum,
    genBinom, pushforwardModel, rankFromChi, regularityReport, ulrichDualTable, veroneseQuantum)
from labErrors import InconsistentInputError, ParityError, VarietyMismatchError, WindowTooSmallError
from varieties import LineBundleSpec, parseVariety

#(variety, bundle, defect, quantum) for instantons in the catalog
KNOWN_INSTANTONS=[
    ("flag3", "0,2", 0, 0),
    ("flag3", "-1,3", 0, 3),
    ("flag3", "-2,4", 0, 8),
    ("flag3", "-3,5", 0, 15),
    ("flag3", "-1,2", 1, 1),
    ("flag3", "-2,3", 1, 3),
    ("flag3", "0,1", 1, 0),
    ("triple_p1", "0,1,2", 0, 0),
    ("triple_p1", "-1,1,3", 0, 3),
    ("triple_p1", "-2,1,4", 0, 8),
    ("p3", "O", 0, 0),
    ("p3", "2*O", 0, 0),
    ("p3", "O+O:-1", 1, 0),
    ("p3@2", "O:1", 1, 0),
    ("p3@2", "2*O:1", 1, 0),
    ("p2", "O+O:-1", 1, 0),
    ("p2@2", "O:1+O", 1, 0),
    ("q3", "O", 1, 0),
    ("q4", "O", 1, 0),
    ("q3", "2*O", 1, 0),
    ("curve:2:3", "theta:1+theta", 1, 3),
    ("curve:0:2", "theta:1+theta", 1, 2),
]


def knownTables(window=None):
    for text, descriptor, defect, quantum in KNOWN_INSTANTONS:
        variety=parseVariety(text)
        n=variety.n
        table=buildTable(variety, descriptor, window or (-n-1, 2))
        yield variety, table, defect, quantum


def test_known_instantons():
    for variety, table, defect, quantum in knownTables():
        verdict=checkInstanton(table)
        assert verdict.quantum(defect)==quantum, str(table)


def test_flag_line_verdict():
    table=buildTable(parseVariety("flag3"), "-1,3", (-4, 0))
    verdict=checkInstanton(table)
    assert verdict.admissible==((0, 3),)
    assert verdict.isInstanton()
    assert verdict.defects()==[0]
    assert not verdict.isUlrich
    assert verdict.natural
    assert verdict.quantum(1) is None


def test_ulrich_line_bundles():
    for text, descriptor in (("flag3", "0,2"), ("triple_p1", "0,1,2"), ("p3", "O"), ("scroll-p1:1,1,2", "f:3")):
        variety=parseVariety(text)
        verdict=checkInstanton(buildTable(variety, descriptor, (-variety.n-1, 0)))
        assert verdict.isUlrich, text
        assert verdict.quantum(0)==0


def test_non_instanton_keeps_the_failures():
    verdict=checkInstanton(buildTable(parseVariety("flag3"), "O", (-4, 0)))
    assert not verdict.isInstanton()
    assert any("h^3" in note for note in verdict.notes)


def test_window_must_cover_the_conditions():
    table=buildTable(parseVariety("p3"), "O", (-2, 0))
    with pytest.raises(WindowTooSmallError):
        checkInstanton(table)


def test_zero_table_is_not_an_instanton():
    table=CohomologyTable("p3", 0, -3, 0, {t: (0, 0, 0, 0) for t in range(-3, 1)})
    verdict=checkInstanton(table)
    assert verdict.admissible==()
    assert not verdict.isInstanton()
    assert verdict.isUlrich is False
    assert any("zero sheaf" in note for note in verdict.notes)


def test_ulrich_verdict_requires_quantum_zero():
    with pytest.raises(AssertionError):
        InstantonVerdict([(1, 0)], True, True, True)


def test_quantum_is_minus_chi():
    for variety, table, defect, quantum in knownTables():
        n=variety.n
        assert instanton.quantumFromChi(table)==quantum
        assert (-1)**(n-1)*table.chi(defect-n)==quantum


def test_chi_polynomial_matches_tables():
    for variety, table, defect, quantum in knownTables():
        chi0=table.chi(0)
        for t in table.twists():
            assert chiPolynomial(variety.n, defect, quantum, chi0, t)==table.chi(t), str(table)+" at t="+str(t)


def test_surface_branch_of_the_chi_polynomial():
    #(chi+q)(t+1)^2-q
    assert [chiPolynomial(2, 1, 1, 1, t) for t in range(-2, 2)]==[1, -1, 1, 7]
    assert chiPolynomial(1, 1, 0, 3, 2)==15


def test_rank_from_chi():
    for variety, table, defect, quantum in knownTables():
        if variety.n>=2:
            assert rankFromChi(variety.n, defect, quantum, table.chi(0))==table.rank*variety.degree()


@pytest.mark.parametrize("n,defect", list(it.product(range(2, 6), (0, 1))))
def test_chi_from_rank_inverts_rank_from_chi(n, defect):
    for quantum in range(4):
        for rank in (2, 4, 6):
            chi0=chiFromRank(n, defect, quantum, rank)
            assert rankFromChi(n, defect, quantum, chi0)==rank


def test_rank_formula_errors():
    with pytest.raises(InconsistentInputError):
        rankFromChi(1, 0, 0, 1)
    with pytest.raises(ParityError):
        chiFromRank(3, 1, 0, 3)


def test_restriction_and_extension():
    assert instanton.restrictionTransform(3, 1, 2)==(1, 4)
    assert instanton.restrictionTransform(4, 1, 2)==(1, 2)
    assert instanton.restrictionTransform(3, 0, 2)==(0, 2)
    assert instanton.extensionTransform(5, 0, 1)==((0, 1), True)
    assert instanton.extensionTransform(3, 1, 1)==((1, 1), False)
    with pytest.raises(InconsistentInputError):
        instanton.restrictionTransform(2, 0, 1)


def dualityBundles():
    boxes=[("flag3", 2, 4), ("triple_p1", 3, 3), ("p3", 1, 6), ("q3", 1, 6), ("p2", 1, 6), ("scroll-p1:1,1,2", 2, 4)]
    for text, picardRank, size in boxes:
        variety=parseVariety(text)
        for coords in it.product(range(-size, size+1), repeat=picardRank):
            yield variety, LineBundleSpec(variety.varietyId, coords)


def test_ulrich_dual_is_an_involution_preserving_verdicts():
    count=0
    for variety, L in dualityBundles():
        n=variety.n
        table=buildTable(variety, [L], (-n-1, 0))
        verdict=checkInstanton(table)
        for defect in (0, 1):
            dual=ulrichDualTable(table, variety, defect)
            assert checkInstanton(dual).quantum(defect)==verdict.quantum(defect), str(L)
            assert ulrichDualTable(dual, variety, defect)==table
        count+=1
    assert count>=500


def test_ulrich_dual_of_a_line_bundle_is_its_dual_line_bundle():
    flag=parseVariety("flag3")
    L=flag.lineBundle(-1, 3)
    dual=ulrichDualTable(buildTable(flag, [L], (-4, 0)), flag, 0)
    assert dual==buildTable(flag, [L.ulrichDual(flag)], (-4, 0))
    assert dual.chern==buildTable(flag, [L.ulrichDual(flag)], (-4, 0)).chern


def test_ulrich_dual_checks_the_variety():
    table=buildTable(parseVariety("flag3"), "-1,3", (-4, 0))
    with pytest.raises(VarietyMismatchError):
        ulrichDualTable(table, parseVariety("p3"), 0)


def test_pushforward_keeps_the_verdict():
    for variety, table, defect, quantum in knownTables():
        pushed=pushforwardModel(table, variety.degree())
        assert pushed.varietyId=="p"+str(variety.n)
        assert pushed.rank==table.rank*variety.degree()
        assert checkInstanton(pushed).admissible==checkInstanton(table).admissible


def test_direct_sums_add_quanta():
    flag=parseVariety("flag3")
    lines=[(-1, 3), (-2, 4), (-3, 5), (0, 2)]
    tables={coords: buildTable(flag, [flag.lineBundle(*coords)], (-4, 0)) for coords in lines}
    for a, b in it.combinations_with_replacement(lines, 2):
        total=directSum(tables[a], tables[b])
        assert total.rank==2
        assert checkInstanton(total).quantum(0)==checkInstanton(tables[a]).quantum(0)+checkInstanton(tables[b]).quantum(0)
    assert directSum(tables[(-1, 3)], tables[(-2, 4)]).chern==buildTable(flag, "-1,3+-2,4", (-4, 0)).chern


def test_direct_sum_errors():
    flag=buildTable(parseVariety("flag3"), "-1,3", (-4, 0))
    with pytest.raises(VarietyMismatchError):
        directSum(flag, buildTable(parseVariety("p3"), "O", (-4, 0)))
    with pytest.raises(InconsistentInputError):
        directSum(flag.restricted(-4, -3), flag.restricted(-1, 0))


def test_regularity():
    table=buildTable(parseVariety("flag3"), "-1,3", (-4, 2))
    report=regularityReport(table, 0)
    assert report.asTuple()==(1, 3, 3)
    assert report.vExact
    assert report.violations==[] and report.unchecked==[]


def test_regularity_reports_what_it_could_not_see():
    table=buildTable(parseVariety("flag3"), "-1,3", (-4, 0))
    report=regularityReport(table, 0)
    assert report.v==1 and not report.vExact
    assert (1, 2) in report.unchecked


def test_hat_regularity_bound():
    assert instanton.hatRegularityBound(3, 2, 1, 0, 0)==5
    assert instanton.hatRegularityBound(3, 0, 0, 0, 0)==2


def test_betti_shapes():
    table=buildTable(parseVariety("p3"), "O", (-4, 2))
    assert bettiShapeCheck(BettiShape(0, 0, 3, {(0, 0): 1}), table.chi)
    assert not bettiShapeCheck(BettiShape(0, 0, 3, {(0, 0): 2}), table.chi)
    assert not bettiShapeCheck(BettiShape(0, 0, 3, {(0, 1): 1}), table.chi)
    assert not bettiShapeCheck(BettiShape(0, 0, 3, {(0, 0): -1}), table.chi)
    assert BettiShape(0, 1, 3, {(0, 0): 1, (1, 1): 0}).columns()==[0]


def test_veronese_quantum():
    for rank in (1, 2, 3, 4):
        for d in (1, 3, 5, 7):
            assert veroneseQuantum(2, rank, d, 1)==Fraction(rank*(d*d-1), 8)
    assert veroneseQuantum(3, 2, 2, 2)==2
    with pytest.raises(ParityError):
        veroneseQuantum(2, 1, 2, 1)
    with pytest.raises(InconsistentInputError):
        veroneseQuantum(4, 1, 2, 1)


def test_horrocks_gate():
    assert instanton.horrocksGate(4, 1, 2, 1, 0)=={"forcedACM": True, "infeasible": True, "forcedUlrich": False}
    assert instanton.horrocksGate(4, 3, 1, 0, 0)["forcedUlrich"]
    with pytest.raises(InconsistentInputError):
        instanton.horrocksGate(3, 1, 1, 0, 0)


def test_generalized_binomial():
    assert genBinom(5, 2)==10
    assert genBinom(-1, 3)==-1
    assert genBinom(2, 3)==0
    assert genBinom(7, 0)==1
