"""
Hirzebruch-Riemann-Roch through dimension three, slopes and normalization, and the Chern class
constraints satisfied by instanton sheaves (slope condition, cyclic and Fano first Chern classes,
the Chern polynomial of instantons on P^n and the quantum number identity on surface sections).

Intersection numbers come from chowRing.integrate, every rational is a Fraction.
"""

from fractions import Fraction

import sympy as sp

from chowRing import integrate
from labErrors import InconsistentInputError, ParityError, VarietyMismatchError
from labLogging import getLogger

logger=getLogger('rr')


class ChernData:
    def __init__(self, rank, c1, c2=None, c3=None):
        assert rank>=0
        ring=c1.ring
        self.rank=rank
        self.c1=c1
        self.c2=c2 if c2 is not None else ring.zero()
        self.c3=c3 if c3 is not None else ring.zero()
        for degree, c in ((1, self.c1), (2, self.c2), (3, self.c3)):
            c1.checkRing(c)
            if not (c.isZero() or c.degrees()==[degree]):
                raise InconsistentInputError("c"+str(degree)+" must have degree "+str(degree)+", got "+str(c))

    @property
    def ring(self):
        return self.c1.ring

    @property
    def varietyId(self):
        return self.c1.varietyId

    def __eq__(self, other):
        if not isinstance(other, ChernData):
            return NotImplemented
        return (self.rank, self.c1, self.c2, self.c3)==(other.rank, other.c1, other.c2, other.c3)

    def __repr__(self):
        return "ChernData(rank="+str(self.rank)+", c1="+str(self.c1)+", c2="+str(self.c2)+", c3="+str(self.c3)+")"


def checkVariety(variety, c):
    if variety.ring.varietyId!=c.varietyId:
        raise VarietyMismatchError("Chern data on "+c.varietyId+" used on "+variety.varietyId)


def exactInteger(value, what):
    value=Fraction(value)
    if value.denominator!=1:
        raise InconsistentInputError(what+" is not an integer: "+str(value))
    return value.numerator


#c(E(L)) for E of rank r
def twistChern(c, L):
    r=c.rank
    c1=c.c1+L*r
    c2=c.c2+c.c1*L*(r-1)+L*L*(r*(r-1)//2)
    c3=c.c3+c.c2*L*(r-2)+c.c1*L*L*((r-1)*(r-2)//2)+L*L*L*(r*(r-1)*(r-2)//6)
    return ChernData(r, c1.part(1), c2.part(2), c3.part(3))


def dualChern(c):
    return ChernData(c.rank, -c.c1, c.c2, -c.c3)


def chiCurve(variety, c):
    if variety.n!=1:
        raise InconsistentInputError("chiCurve needs a curve, got dimension "+str(variety.n))
    checkVariety(variety, c)
    return c.rank*variety.chiO+integrate(c.c1)


def chiSurface(variety, c):
    if variety.n!=2:
        raise InconsistentInputError("chiSurface needs a surface, got dimension "+str(variety.n))
    checkVariety(variety, c)
    K=variety.canonical
    value=c.rank*variety.chiO+Fraction(integrate(c.c1*c.c1)-integrate(K*c.c1), 2)-integrate(c.c2)
    return exactInteger(value, "chi")


def chiThreefold(variety, c):
    if variety.n!=3:
        raise InconsistentInputError("chiThreefold needs a threefold, got dimension "+str(variety.n))
    if variety.c2Omega is None:
        raise InconsistentInputError("no c2 of the cotangent sheaf stored for "+variety.varietyId)
    checkVariety(variety, c)
    K=variety.canonical
    c1, c2, c3=c.c1, c.c2, c.c3
    return hrrThreefold(c.rank, variety.chiO, integrate(c1**3), integrate(c1*c2), integrate(c3),
        integrate(K*c1*c1), integrate(K*c2), integrate(K*K*c1), integrate(variety.c2Omega*c1))


#Riemann-Roch on a threefold from the intersection numbers alone
def hrrThreefold(rank, chiO, c1Cube, c1c2, c3, kc1Sq, kc2, kSqc1, c2OmegaC1):
    value=(rank*chiO
        +Fraction(c1Cube-3*c1c2+3*c3, 6)
        -Fraction(kc1Sq-2*kc2, 4)
        +Fraction(kSqc1+c2OmegaC1, 12))
    return exactInteger(value, "chi")


def eulerCharacteristic(variety, c):
    if variety.n==1:
        return chiCurve(variety, c)
    if variety.n==2:
        return chiSurface(variety, c)
    if variety.n==3:
        return chiThreefold(variety, c)
    raise InconsistentInputError("Riemann-Roch is only available up to dimension 3")


#c1(E)h^{n-1}
def c1Degree(variety, c):
    checkVariety(variety, c)
    return integrate(c.c1*variety.polarization**(variety.n-1))


def slope(variety, c):
    assert c.rank>0
    return Fraction(c1Degree(variety, c), c.rank)


#the t with -rk*h^n < c1(E(th))h^{n-1} <= 0
def normalizationTwist(variety, c):
    assert c.rank>0
    return (-c1Degree(variety, c))//(c.rank*variety.degree())


def slopeCondition(variety, c, defect):
    n=variety.n
    hn1=variety.polarization**(n-1)
    rhs=c.rank*((n+1-defect)*variety.degree()+integrate(variety.canonical*hn1))
    return 2*c1Degree(variety, c)==rhs


#2c1 = rk((n+1-defect)h+K) with h=uH, K=vH; returns the multiple of H or None
def cyclicC1(rank, defect, u, v, n):
    total=rank*(u*(n+1-defect)+v)
    if total%2!=0:
        return None
    return total//2


#2c1 = rk(4-defect-i_X)h on a Fano threefold of index i_X
def fanoChernC1(fanoIndex, rank, defect):
    if not 1<=fanoIndex<=4:
        raise InconsistentInputError("Fano index must lie in 1..4, got "+str(fanoIndex))
    total=rank*(4-defect-fanoIndex)
    if total%2!=0:
        return None
    return total//2


def chernPolynomialPn(n, rank, defect, quantum):
    t=sp.Symbol('t')
    if defect==0:
        return 1/(1-t**2)**quantum, t
    if n==2:
        return (1-t)**sp.Rational(rank, 2)/(1-t**2)**quantum, t
    return (1-t)**(sp.Rational(rank, 2)+quantum)/((1+t)**quantum*(1-2*t)**quantum), t


#c_1..c_n of an instanton on P^n, expanding its Chern polynomial
def chernPolyInstantonPn(n, rank, defect, quantum):
    assert n>=1 and quantum>=0
    if defect==1 and rank%2!=0:
        raise ParityError("non-ordinary instantons on P^n have even rank, got "+str(rank))
    expr, t=chernPolynomialPn(n, rank, defect, quantum)
    expansion=sp.expand(sp.series(expr, t, 0, n+1).removeO())
    return tuple(int(expansion.coeff(t, i)) for i in range(1, n+1))


#c1=-defect*r/2, c2=eps*q+defect*r(r-2)/8
def chernPnClosedForm(n, rank, defect, quantum):
    if defect==1 and rank%2!=0:
        raise ParityError("non-ordinary instantons on P^n have even rank, got "+str(rank))
    eps=1 if n==2 else 1+defect
    c1=-defect*rank//2
    c2=eps*quantum+exactInteger(Fraction(defect*rank*(rank-2), 8), "c2")
    return (c1, c2)


#solves the surface section identity for eps*q; chiList[i]=chi(O_X(-ih)) for 0<=i<=n-2
def quantumChernIdentity(variety, c, defect, chiList):
    n=variety.n
    if n<2:
        raise InconsistentInputError("the quantum identity needs dimension at least 2")
    if len(chiList)<n-1:
        raise InconsistentInputError("need chi(O(-ih)) for 0<=i<="+str(n-2))
    checkVariety(variety, c)
    h=variety.polarization
    K=variety.canonical
    hn2=h**(n-2)
    first=integrate(c.c2*hn2)-Fraction(integrate(c.c1*(c.c1-K-h*(n-2))*hn2), 2)
    alternating=sum((-1)**i*int(sp.binomial(n-2, i))*chiList[i] for i in range(n-1))
    value=first+c.rank*(Fraction(variety.degree(), 1+defect)-alternating)
    eps=1 if n==2 else 1+defect
    return exactInteger(value/eps, "quantum number")


#Chern data of E^{U,h}(-defect*h) = E^vee((n+1-defect)h+K)
def ulrichDualChern(variety, c, defect):
    checkVariety(variety, c)
    L=variety.polarization*(variety.n+1-defect)+variety.canonical
    return twistChern(dualChern(c), L)
