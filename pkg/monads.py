"""
Monad shapes for instanton sheaves: the three terms M^-1 -> M^0 -> M^1 as formal direct sums with
multiplicities, together with the integer constraints the middle term has to satisfy.

Shapes are descriptions only; no maps between the terms are built.
"""

from chowRing import integrate
from cohomology import lineBundleCohomology, cohProjectiveSpace, CohVector
from labErrors import InconsistentInputError, ParityError
from labLogging import getLogger
import riemannRoch
from varieties import LineBundleSpec

logger=getLogger('monads')


class MonadSummand:
    def __init__(self, name, twist, multiplicity, rank=1, c1=None):
        if multiplicity<0:
            raise InconsistentInputError("negative multiplicity "+str(multiplicity)+" for "+name)
        self.name=name
        self.twist=str(twist)
        self.multiplicity=int(multiplicity)
        self.rank=rank
        self.c1=c1

    def label(self):
        if self.twist in ("", "0"):
            return self.name
        return self.name+"("+self.twist+")"

    def __eq__(self, other):
        if not isinstance(other, MonadSummand):
            return NotImplemented
        return (self.name, self.twist, self.multiplicity, self.rank, self.c1)==(other.name, other.twist, other.multiplicity, other.rank, other.c1)

    def __repr__(self):
        return self.label()+"^"+str(self.multiplicity)


class MonadShape:
    def __init__(self, terms, constraints=None, notes=None):
        assert len(terms)==3
        self.terms=tuple([s for s in term] for term in terms)
        self.constraints=dict(constraints or {})
        self.notes=list(notes or [])

    @staticmethod
    def termRank(term):
        return sum(s.rank*s.multiplicity for s in term)

    #rk(M^0)-rk(M^-1)-rk(M^1)
    def rank(self):
        left, middle, right=self.terms
        return self.termRank(middle)-self.termRank(left)-self.termRank(right)

    #c1 as a multiple of h, when every summand carries one
    def c1(self):
        total=0
        for sign, term in zip((-1, 1, -1), self.terms):
            for s in term:
                if s.c1 is None:
                    return None
                total+=sign*s.c1*s.multiplicity
        return total

    def multiplicity(self, position, name, twist=""):
        for s in self.terms[position+1]:
            if s.name==name and s.twist==str(twist):
                return s.multiplicity
        return 0

    def __eq__(self, other):
        if not isinstance(other, MonadShape):
            return NotImplemented
        return (self.terms, self.constraints, self.notes)==(other.terms, other.constraints, other.notes)

    def __repr__(self):
        pieces=[" + ".join(repr(s) for s in term if s.multiplicity>0) or "0" for term in self.terms]
        return "0 -> "+" -> ".join(pieces)+" -> 0"


def spinorRank(n):
    return 2**((n-1)//2)


#monad of an instanton on P^n; for defect 1 the maximal b0=h^0(E), b1=h^n(E(-n)) are used
def monadPn(n, defect, quantum, chi0, h0E=None, hnE=None):
    if n<2:
        raise InconsistentInputError("monads on P^n need n >= 2")
    k=quantum
    if defect==0:
        return MonadShape((
            [MonadSummand("O", -1, k, 1, -1)],
            [MonadSummand("O", 0, chi0+(n+1)*k, 1, 0)],
            [MonadSummand("O", 1, k, 1, 1)]),
            {"middle": chi0+(n+1)*k})

    if h0E is None or hnE is None:
        raise InconsistentInputError("non-ordinary monads need h^0(E) and h^n(E(-n))")
    b0=h0E
    b1=hnE
    middle=[MonadSummand("O", 0, b0, 1, 0), MonadSummand("Omega^1", 1, k, n, -1)]
    if n>=3:
        middle.append(MonadSummand("Omega^"+str(n-1), n-1, k, n, -(n-1)))
    middle.append(MonadSummand("O", -1, b1, 1, -1))
    shape=MonadShape((
        [MonadSummand("O", -1, b1-chi0, 1, -1)],
        middle,
        [MonadSummand("O", 0, b0-chi0, 1, 0)]),
        {"b0": b0, "b1": b1},
        ["b0, b1 are the largest allowed values; isomorphic summands of M^0 and M^1 may cancel"])
    return shape


def canonicalTwist(variety, t):
    coords=tuple(k+t*p for k, p in zip(variety.canonicalCoords, variety.polarizationCoords))
    return LineBundleSpec(variety.varietyId, coords)


def h0(variety, bundle):
    return lineBundleCohomology(variety, bundle)[0]


def chiLine(variety, t):
    return lineBundleCohomology(variety, LineBundleSpec(variety.varietyId, tuple(t*p for p in variety.polarizationCoords))).euler()


#monad with aCM middle term B on an aCM variety
def monadAcm(variety, defect, quantum, h1E, hn1E, rank=None):
    n=variety.n
    if n<3:
        raise InconsistentInputError("monadAcm needs dimension at least 3")
    if not variety.isACM:
        raise InconsistentInputError(variety.varietyId+" is not aCM")
    k=quantum
    a=defect*hn1E
    c=defect*h1E

    omegaLow=h0(variety, canonicalTwist(variety, n-1-defect))
    omegaHigh=h0(variety, canonicalTwist(variety, n-defect))
    sign=(-1)**n
    constraints={
        "h0(B(-h))": k*omegaLow+a*omegaHigh,
        "hn(B((d-n)h))": k*omegaLow+c*omegaHigh,
        "chi(B)-(-1)^n chi(B(-nh))": defect*(c-a)*(chiLine(variety, 0)-sign*chiLine(variety, -n)),
        "a": a,
        "c": c,
    }
    middle=[]
    if rank is not None:
        constraints["rk(B)"]=rank+2*k+a+c
        middle=[MonadSummand("B", "", 1, rank+2*k+a+c)]

    def h(t):
        return str(t)+"h"

    shape=MonadShape((
        [MonadSummand("omega_X", h(n-defect), k), MonadSummand("omega_X", h(n+1-defect), a)],
        middle,
        [MonadSummand("O_X", "", c), MonadSummand("O_X", "h", k)]),
        constraints)
    return shape


#ordinary instantons on a quadric: 0 -> O^k -> S(h)^s (+ S'(h)^s' + S''(h)^s'') -> O(h)^k -> 0
#spinorChis are h^0-h^1 of E(x)S (odd n) or of (E(x)S', E(x)S'') (even n)
def monadQuadricOrdinary(n, rank, quantum, spinorChis=None):
    if n<3:
        raise InconsistentInputError("quadric monads need n >= 3")
    if rank%2!=0:
        raise ParityError("ordinary instantons on a quadric have even rank")
    sigma=spinorRank(n)
    k=quantum
    if (rank+2*k)%sigma!=0:
        raise ParityError(str(sigma)+" does not divide r+2k="+str(rank+2*k))
    total=(rank+2*k)//sigma
    c1Spinor=2**((n-3)//2)

    if n%2==1:
        if spinorChis is not None and spinorChis[0]+sigma*k!=total:
            raise InconsistentInputError("h^0-h^1 of E(x)S gives s="+str(spinorChis[0]+sigma*k)+", rank gives "+str(total))
        middle=[MonadSummand("S", "h", total, sigma, c1Spinor)]
        constraints={"s": total}
    else:
        if spinorChis is None:
            middle=[MonadSummand("S'+S''", "h", total, sigma, c1Spinor)]
            constraints={"s'+s''": total}
        else:
            chiPrime, chiSecond=spinorChis
            if n%4==0:
                sPrime, sSecond=chiPrime+sigma*k, chiSecond+sigma*k
            else:
                sPrime, sSecond=chiSecond+sigma*k, chiPrime+sigma*k
            if sPrime+sSecond!=total:
                raise InconsistentInputError("spinor inputs give s'+s''="+str(sPrime+sSecond)+", rank gives "+str(total))
            middle=[MonadSummand("S'", "h", sPrime, sigma, c1Spinor), MonadSummand("S''", "h", sSecond, sigma, c1Spinor)]
            constraints={"s'": sPrime, "s''": sSecond, "s'+s''": total}

    return MonadShape((
        [MonadSummand("O_X", "", k, 1, 0)],
        middle,
        [MonadSummand("O_X", "h", k, 1, 1)]),
        constraints)


#multiplicity s of the odd quadric case, or s'+s'' for even n
def spinorMultiplicity(n, rank, quantum):
    shape=monadQuadricOrdinary(n, rank, quantum)
    return shape.constraints["s" if n%2==1 else "s'+s''"]


#quasi-linear monad of a non-ordinary instanton on P^n
def monadSpaceNonordinary(n, rank, quantum, a, c):
    if n<3:
        raise InconsistentInputError("needs n >= 3")
    if rank%2!=0:
        raise ParityError("non-ordinary instantons on P^n have even rank")
    if a<0 or c<0:
        raise InconsistentInputError("a and c must be nonnegative")
    k=quantum
    b0=rank//2+k+a
    b1=rank//2+k+c
    return MonadShape((
        [MonadSummand("O", -2, k, 1, -2), MonadSummand("O", -1, a, 1, -1)],
        [MonadSummand("O", -1, b0, 1, -1), MonadSummand("O", 0, b1, 1, 0)],
        [MonadSummand("O", 0, c, 1, 0), MonadSummand("O", 1, k, 1, 1)]),
        {"b0": b0, "b1": b1})


#odd quadric, non-ordinary: 0 -> O(-h)^k+O^a -> O^b+S^s+S(h)^s -> O^c+O(h)^k -> 0
def monadQuadricNonordinary(n, rank, quantum, a, c, b):
    if n%2==0:
        raise InconsistentInputError("only odd dimensional quadrics are handled")
    k=quantum
    top=rank+2*k+a+c-b
    if top<0:
        raise InconsistentInputError("b="+str(b)+" exceeds r+2k+a+c="+str(rank+2*k+a+c))
    divisor=2**((n+1)//2)
    if top%divisor!=0:
        raise ParityError(str(divisor)+" does not divide r+2k+a+c-b="+str(top))
    s=top//divisor
    sigma=spinorRank(n)
    shape=MonadShape((
        [MonadSummand("O_X", "-h", k, 1, -1), MonadSummand("O_X", "", a, 1, 0)],
        [MonadSummand("O_X", "", b, 1, 0), MonadSummand("S", "", s, sigma, -2**((n-3)//2)), MonadSummand("S", "h", s, sigma, 2**((n-3)//2))],
        [MonadSummand("O_X", "", c, 1, 0), MonadSummand("O_X", "h", k, 1, 1)]),
        {"s": s})
    return shape


#h^i of the dual relative Euler sequence twisted by -h on a scroll over P1: h^i(G^vee) pulled back
def relativeTangentMinusH(degrees):
    n=len(degrees)
    dims=[0]*(n+1)
    for a in degrees:
        line=cohProjectiveSpace(1, -a)
        dims[0]+=line[0]
        dims[1]+=line[1]
    return CohVector(dims)


def nonnegative(values, what):
    for name, value in values.items():
        if value<0:
            raise InconsistentInputError(what+": "+name+"="+str(value)+" is negative")


#threefold scroll P(O(a0)+O(a1)+O(a2)) over P1 of degree d=a0+a1+a2; inputs are (h^0-h^1 of E(f-h), h^1(E(f-2h)), h^3-h^2 of E(-3h-f))
def monadScroll3(d, rank, quantum, sInputs, degrees=None):
    if d<3:
        raise InconsistentInputError("a threefold scroll over P1 has degree at least 3")
    degrees=(1, 1, d-2) if degrees is None else tuple(degrees)
    if len(degrees)!=3 or sum(degrees)!=d or min(degrees)<1:
        raise InconsistentInputError("degrees "+str(degrees)+" do not describe a threefold scroll of degree "+str(d))
    k=quantum
    chiFirst, h1Second, chiThird=sInputs
    s1=chiFirst+2*k
    s2=h1Second
    s3=chiThird+2*k
    nonnegative({"s1": s1, "s2": s2, "s3": s3}, "scroll monad")
    if s1+2*s2+s3!=rank+2*k:
        raise InconsistentInputError("s1+2s2+s3="+str(s1+2*s2+s3)+" differs from r+2k="+str(rank+2*k))
    relative=relativeTangentMinusH(degrees)
    return MonadShape((
        [MonadSummand("O_X", str(d-2)+"f", k)],
        [MonadSummand("O_X", "h-f", s1), MonadSummand("Omega^1_rel", "2h-f", s2, 2), MonadSummand("O_X", str(d-1)+"f", s3)],
        [MonadSummand("O_X", "h", k)]),
        {"s1": s1, "s2": s2, "s3": s3, "h1(T_rel(-h))": relative[1]})


#P1xP3 as the scroll with degrees (1,1,1,1); inputs (h^0-h^1 of E(f-h), h^1(E(f-2h)), h^2(E(-3h-f)), h^4-h^3 of E(-4h-f))
def monadP1P3(rank, quantum, sInputs):
    k=quantum
    chiFirst, h1Second, h2Third, chiFourth=sInputs
    s1=chiFirst+2*k
    s2=h1Second
    s3=h2Third
    s4=chiFourth+2*k
    nonnegative({"s1": s1, "s2": s2, "s3": s3, "s4": s4}, "P1xP3 monad")
    if s1+3*s2+3*s3+s4!=rank+2*k:
        raise InconsistentInputError("s1+3s2+3s3+s4="+str(s1+3*s2+3*s3+s4)+" differs from r+2k="+str(rank+2*k))
    return MonadShape((
        [MonadSummand("O_X", "2f", k)],
        [MonadSummand("O_X", "h-f", s1), MonadSummand("p*Omega^1", "2h-f", s2, 3),
            MonadSummand("p*Omega^2", "3h-f", s3, 3), MonadSummand("O_X", "3f", s4)],
        [MonadSummand("O_X", "h", k)]),
        {"s1": s1, "s2": s2, "s3": s3, "s4": s4})


#the s-inputs of the scroll monads read off a direct sum of line bundles
def scrollMonadInputs(variety, bundles):
    n=variety.n

    def total(t, a):
        out=CohVector.zeros(n)
        for bundle in bundles:
            out=out+lineBundleCohomology(variety, LineBundleSpec(variety.varietyId, (bundle.coords[0]+t, bundle.coords[1]+a)))
        return out

    first=total(-1, 1)
    if n==3:
        third=total(-3, -1)
        return (first[0]-first[1], total(-2, 1)[1], third[3]-third[2])
    if n==4:
        fourth=total(-4, -1)
        return (first[0]-first[1], total(-2, 1)[1], total(-3, -1)[2], fourth[4]-fourth[3])
    raise InconsistentInputError("scroll monads are available for n=3 and P1xP3")


#Chern classes of E in 0 -> O(D) -> E -> I_Z(detE-D) -> 0
def serreConstructionChern(variety, D, detE, Zclass):
    for name, cls, degree in (("D", D, 1), ("det", detE, 1), ("Z", Zclass, 2)):
        if not (cls.isZero() or cls.degrees()==[degree]):
            raise InconsistentInputError(name+" must have degree "+str(degree)+", got "+str(cls))
    c2=D*(detE-D)+Zclass
    logger.debug("Serre construction on %s: c2=%s, c2.h^(n-2)=%d", variety.varietyId, c2, integrate(c2*variety.polarization**(variety.n-2)))
    return riemannRoch.ChernData(2, detE, c2)
