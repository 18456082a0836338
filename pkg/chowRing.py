"""
This file contains the Chow rings of the varieties in the catalog and the classes living in them.

A ChowRingPresentation is a polynomial ring on degree one generators modulo homogeneous relations.
Relations are turned into a Groebner basis (grevlex) so that every monomial has a unique normal form; the normal
forms of monomials are cached and all further arithmetic is done on dictionaries {exponent tuple: integer}.
Monomials of degree larger than the dimension are zero, and the degree map assigns an integer to each normal
monomial of top degree, so integrate() returns intersection numbers.

Ring ids:
    pN          projective space of dimension N, H^N=1
    qN          quadric hypersurface of dimension N, modelled numerically, H^N=2
    flag3       point-line flag threefold in P2xP2, generators h1 h2
    triple_p1   P1xP1xP1, generators h1 h2 h3
    scrollN:d   N-dimensional scroll over a curve with h^N=d, f h^(N-1)=1, f^2=0
    curve       a smooth curve, generated by the class of a point
"""

import functools
import itertools as it
import re

import sympy as sp

from labErrors import UnknownVarietyError, VarietyMismatchError
from labLogging import getLogger

logger=getLogger('chow')


def monomialDegree(exps):
    return sum(exps)


def addInto(target, terms, scale=1):
    for exps, coeff in terms.items():
        value=target.get(exps, 0)+scale*coeff
        if value==0:
            target.pop(exps, None)
        else:
            target[exps]=value
    return target


def multiplyExponents(exps1, exps2):
    return tuple(a+b for a, b in zip(exps1, exps2))


class ChowRingPresentation:
    def __init__(self, varietyId, generators, relations, topDegree, degreeMap):
        self.varietyId=varietyId
        self.generators=tuple(generators)
        self.symbols=[sp.Symbol(name) for name in self.generators]
        self.topDegree=topDegree
        self.nGens=len(self.generators)

        relationExprs=[sp.sympify(rel, locals=dict(zip(self.generators, self.symbols))) for rel in relations]
        self.basis=sp.groebner(relationExprs, *self.symbols, order='grevlex') if relationExprs else None

        #rewrite rules: leading monomial -> integer combination of smaller monomials of the same degree
        self.relations=[]
        if self.basis is not None:
            for g in self.basis.exprs:
                terms=sp.Poly(g, *self.symbols).terms(order='grevlex')
                (leadExps, leadCoeff)=terms[0]
                rule={}
                for exps, coeff in terms[1:]:
                    value=-sp.Rational(coeff, leadCoeff)
                    assert value.q==1, "relations must rewrite with integer coefficients"
                    rule[tuple(exps)]=int(value)
                self.relations.append((tuple(leadExps), rule))

        self.normalForms={}

        self.degreeMap={tuple(exps): int(value) for exps, value in degreeMap.items()}
        for exps in self.degreeMap:
            assert monomialDegree(exps)==topDegree
            assert self.isNormal(exps), "degree map must be given on normal monomials"
        for exps in self.monomials(topDegree):
            if self.isNormal(exps):
                assert exps in self.degreeMap, "missing degree for normal monomial "+str(exps)
        assert any(v!=0 for v in self.degreeMap.values())

    def __repr__(self):
        return "ChowRingPresentation("+self.varietyId+")"

    #all exponent tuples of a given total degree
    def monomials(self, degree):
        out=[]
        for combo in it.combinations_with_replacement(range(self.nGens), degree):
            exps=[0]*self.nGens
            for i in combo:
                exps[i]+=1
            out.append(tuple(exps))
        return out

    def isNormal(self, exps):
        for leadExps, _ in self.relations:
            if all(e>=l for e, l in zip(exps, leadExps)):
                return False
        return True

    def normalMonomials(self, degree):
        if degree>self.topDegree:
            return []
        return [exps for exps in self.monomials(degree) if self.isNormal(exps)]

    def normalForm(self, exps):
        exps=tuple(exps)
        if monomialDegree(exps)>self.topDegree:
            return {}
        if exps in self.normalForms:
            return self.normalForms[exps]

        if self.basis is None or self.isNormal(exps):
            result={exps: 1}
        else:
            monomial=sp.Mul(*[s**e for s, e in zip(self.symbols, exps)])
            _, remainder=self.basis.reduce(monomial)
            result={}
            if remainder!=0:
                for monoExps, coeff in sp.Poly(remainder, *self.symbols).terms():
                    coeff=sp.Rational(coeff)
                    assert coeff.q==1
                    if coeff!=0:
                        result[tuple(monoExps)]=int(coeff)
        self.normalForms[exps]=result
        return result

    #rewrite a combination of monomials by applying the rules in the given order until none applies
    #(used to check that the rewrite system is confluent)
    def rewrite(self, terms, ruleOrder=None):
        if ruleOrder is None:
            ruleOrder=range(len(self.relations))
        current={k: v for k, v in terms.items() if monomialDegree(k)<=self.topDegree and v!=0}
        changed=True
        while changed:
            changed=False
            for exps in sorted(current):
                for ruleIndex in ruleOrder:
                    leadExps, rule=self.relations[ruleIndex]
                    if all(e>=l for e, l in zip(exps, leadExps)):
                        coeff=current.pop(exps)
                        rest=tuple(e-l for e, l in zip(exps, leadExps))
                        for ruleExps, ruleCoeff in rule.items():
                            newExps=multiplyExponents(ruleExps, rest)
                            if monomialDegree(newExps)<=self.topDegree:
                                addInto(current, {newExps: coeff*ruleCoeff})
                        changed=True
                        break
                if changed:
                    break
        return current

    def zero(self):
        return ChowClass(self, {})

    def one(self):
        return ChowClass(self, {(0,)*self.nGens: 1})

    def gen(self, name):
        if name not in self.generators:
            raise UnknownVarietyError("no generator "+name+" on "+self.varietyId)
        exps=[0]*self.nGens
        exps[self.generators.index(name)]=1
        return ChowClass(self, {tuple(exps): 1})

    #linear combination of the generators (a divisor class)
    def linear(self, coeffs):
        assert len(coeffs)==self.nGens
        terms={}
        for i, c in enumerate(coeffs):
            if c!=0:
                exps=[0]*self.nGens
                exps[i]=1
                terms[tuple(exps)]=int(c)
        return ChowClass(self, terms)

    def integrateTerms(self, terms):
        return sum(coeff*self.degreeMap.get(exps, 0) for exps, coeff in terms.items() if monomialDegree(exps)==self.topDegree)


class ChowClass:
    def __init__(self, ring, terms=None):
        self.ring=ring
        self.terms={}
        for exps, coeff in (terms or {}).items():
            if coeff!=0:
                addInto(self.terms, ring.normalForm(exps), int(coeff))

    @property
    def varietyId(self):
        return self.ring.varietyId

    def copy(self):
        out=ChowClass(self.ring)
        out.terms=dict(self.terms)
        return out

    def checkRing(self, other):
        if other.ring.varietyId!=self.ring.varietyId:
            raise VarietyMismatchError("cannot combine classes on "+self.ring.varietyId+" and "+other.ring.varietyId)

    def coerce(self, other):
        if isinstance(other, ChowClass):
            self.checkRing(other)
            return other
        if isinstance(other, int):
            return self.ring.one()*other if other!=0 else self.ring.zero()
        return NotImplemented

    def __add__(self, other):
        other=self.coerce(other)
        if other is NotImplemented:
            return other
        out=self.copy()
        addInto(out.terms, other.terms)
        return out

    __radd__=__add__

    def __neg__(self):
        out=ChowClass(self.ring)
        out.terms={k: -v for k, v in self.terms.items()}
        return out

    def __sub__(self, other):
        other=self.coerce(other)
        if other is NotImplemented:
            return other
        return self+(-other)

    def __rsub__(self, other):
        return (-self)+other

    def __mul__(self, other):
        if isinstance(other, int):
            out=ChowClass(self.ring)
            if other!=0:
                out.terms={k: v*other for k, v in self.terms.items()}
            return out
        if not isinstance(other, ChowClass):
            return NotImplemented
        return multiply(self, other)

    __rmul__=__mul__

    def __pow__(self, k):
        assert k>=0
        out=self.ring.one()
        for _ in range(k):
            out=out*self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms==({} if other==0 else (self.ring.one()*other).terms)
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.ring.varietyId==other.ring.varietyId and self.terms==other.terms

    def __hash__(self):
        return hash((self.ring.varietyId, frozenset(self.terms.items())))

    def isZero(self):
        return not self.terms

    #homogeneous component of the given degree
    def part(self, degree):
        out=ChowClass(self.ring)
        out.terms={k: v for k, v in self.terms.items() if monomialDegree(k)==degree}
        return out

    def degrees(self):
        return sorted(set(monomialDegree(k) for k in self.terms))

    #coefficients of a degree one class in the generator basis
    def linearCoefficients(self):
        coeffs=[0]*self.ring.nGens
        for exps, coeff in self.terms.items():
            assert monomialDegree(exps)==1, "not a divisor class"
            coeffs[exps.index(1)]=coeff
        return tuple(coeffs)

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces=[]
        for exps in sorted(self.terms, key=lambda e: (monomialDegree(e), tuple(-x for x in e))):
            coeff=self.terms[exps]
            factors=[]
            for name, e in zip(self.ring.generators, exps):
                if e==1:
                    factors.append(name)
                elif e>1:
                    factors.append(name+"^"+str(e))
            monomial="*".join(factors)
            if not monomial:
                pieces.append(str(coeff))
            elif coeff==1:
                pieces.append(monomial)
            elif coeff==-1:
                pieces.append("-"+monomial)
            else:
                pieces.append(str(coeff)+"*"+monomial)
        return " + ".join(pieces).replace("+ -", "- ")


def multiply(a, b):
    a.checkRing(b)
    ring=a.ring
    terms={}
    for exps1, c1 in a.terms.items():
        for exps2, c2 in b.terms.items():
            exps=multiplyExponents(exps1, exps2)
            if monomialDegree(exps)<=ring.topDegree:
                addInto(terms, ring.normalForm(exps), c1*c2)
    out=ChowClass(ring)
    out.terms=terms
    return out


def integrate(a):
    return a.ring.integrateTerms(a.terms)


#parses a ring id and builds its presentation
@functools.cache
def presetRing(varietyId):
    match=re.fullmatch(r"p(\d+)", varietyId)
    if match:
        n=int(match.group(1))
        assert n>=1
        return ChowRingPresentation(varietyId, ["H"], [], n, {(n,): 1})

    match=re.fullmatch(r"q(\d+)", varietyId)
    if match:
        n=int(match.group(1))
        assert n>=1
        return ChowRingPresentation(varietyId, ["H"], [], n, {(n,): 2})

    if varietyId=="flag3":
        return ChowRingPresentation(varietyId, ["h1", "h2"], ["h1**3", "h2**3", "h1**2-h1*h2+h2**2"], 3, {(1, 2): 1})

    if varietyId=="triple_p1":
        return ChowRingPresentation(varietyId, ["h1", "h2", "h3"], ["h1**2", "h2**2", "h3**2"], 3, {(1, 1, 1): 1})

    match=re.fullmatch(r"scroll(\d+):(-?\d+)", varietyId)
    if match:
        n=int(match.group(1))
        d=int(match.group(2))
        assert n>=2
        return ChowRingPresentation(varietyId, ["h", "f"], ["f**2"], n, {(n, 0): d, (n-1, 1): 1})

    if varietyId=="curve":
        return ChowRingPresentation(varietyId, ["P"], [], 1, {(1,): 1})

    raise UnknownVarietyError("unknown Chow ring "+str(varietyId))
