import itertools as it

import pytest

from chowRing import presetRing, integrate
from labErrors import UnknownVarietyError, VarietyMismatchError


def test_flag_degrees():
    ring=presetRing("flag3")
    h1=ring.gen("h1")
    h2=ring.gen("h2")
    assert integrate(h1*h1*h2)==1
    assert integrate(h1*h2*h2)==1
    assert integrate(h1**3)==0
    assert integrate(h2**3)==0
    assert integrate((h1+h2)**3)==6


def test_flag_relation_rewrites_h1_squared():
    ring=presetRing("flag3")
    h1=ring.gen("h1")
    h2=ring.gen("h2")
    assert h1*h1==h1*h2-h2*h2


def test_triple_product():
    ring=presetRing("triple_p1")
    h1, h2, h3=(ring.gen(name) for name in ("h1", "h2", "h3"))
    assert (h2*h2).isZero()
    assert integrate(h1*h2*h3)==1
    assert integrate((h1+h2+h3)**3)==6


def test_scroll_ring():
    ring=presetRing("scroll3:3")
    h=ring.gen("h")
    f=ring.gen("f")
    assert integrate(h**3)==3
    assert integrate(f*h*h)==1
    assert (f*f).isZero()
    assert integrate((h+f)*h*h)==4


def test_projective_space_and_quadric():
    for n in range(1, 6):
        assert integrate(presetRing("p"+str(n)).gen("H")**n)==1
        assert integrate(presetRing("q"+str(n)).gen("H")**n)==2
    #classes beyond the dimension vanish
    assert (presetRing("p2").gen("H")**3).isZero()


def test_lower_degrees_do_not_integrate():
    ring=presetRing("flag3")
    assert integrate(ring.gen("h1")*ring.gen("h2")+5)==0


@pytest.mark.parametrize("ringId", ["flag3", "triple_p1", "scroll3:3", "scroll4:4", "q3"])
def test_rewrite_order_does_not_matter(ringId):
    ring=presetRing(ringId)
    orders=list(it.permutations(range(len(ring.relations))))
    for degree in range(ring.topDegree+2):
        for exps in ring.monomials(degree):
            results=[ring.rewrite({exps: 1}, order) for order in orders]
            for result in results[1:]:
                assert result==results[0]
            assert results[0]==ring.normalForm(exps)


@pytest.mark.parametrize("ringId", ["flag3", "triple_p1", "scroll3:5"])
def test_multiplication_is_commutative_and_associative(ringId):
    ring=presetRing(ringId)
    gens=[ring.gen(name) for name in ring.generators]
    classes=gens+[a*b for a, b in it.combinations_with_replacement(gens, 2)]+[ring.one()*2, gens[0]*3-gens[-1]]
    for a, b in it.product(classes, repeat=2):
        assert a*b==b*a
        assert integrate(a*b)==integrate(b*a)
    for a, b, c in it.product(gens+[ring.one()], repeat=3):
        assert (a*b)*c==a*(b*c)


def test_linear_classes():
    ring=presetRing("triple_p1")
    c=ring.linear((1, -2, 0))
    assert c.linearCoefficients()==(1, -2, 0)
    assert c.part(1)==c
    assert c.part(2).isZero()


def test_mismatched_rings():
    with pytest.raises(VarietyMismatchError):
        presetRing("p3").gen("H")*presetRing("q3").gen("H")


def test_unknown_ring():
    with pytest.raises(UnknownVarietyError):
        presetRing("grassmannian")
    with pytest.raises(UnknownVarietyError):
        presetRing("p2").gen("h1")


@pytest.mark.parametrize("ringId,ranks", [
    ("p3", [1, 1, 1, 1]),
    ("q3", [1, 1, 1, 1]),
    ("flag3", [1, 2, 2, 1]),
    ("triple_p1", [1, 3, 3, 1]),
    #h^3 and h^2 f are both normal, tied together only through the degree map
    ("scroll3:4", [1, 2, 2, 2]),
])
def test_normal_monomials(ringId, ranks):
    ring=presetRing(ringId)
    assert [len(ring.normalMonomials(k)) for k in range(4)]==ranks
    assert ring.normalMonomials(4)==[]
