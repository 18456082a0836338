"""
This file contains the instanton condition checker and everything computed from cohomology tables:
quantum numbers and defects, natural cohomology, the chi polynomial of an instanton, rank formulas,
the table transforms (push-forward to P^n, direct sums, Ulrich duality), regularity and Betti table checks,
and the numerical gates on Veronese embeddings and on small rank bundles in high dimension.

A table is an instanton with defect d and quantum number q when
    h^0(E(-h)) = h^n(E((d-n)h)) = 0
    h^i(E(-(i+1)h)) = h^(n-i)(E((d-n+i)h)) = 0              1 <= i <= n-2
    d*h^i(E(-ih)) = 0                                       2 <= i <= n-2
    q = h^1(E(-h)) = h^(n-1)(E((d-n)h))
    d*(chi(E) - (-1)^n chi(E(-nh))) = 0
so every verdict only reads the twists -n <= t <= 0.
"""

from fractions import Fraction
import math

import sympy as sp

from cohomology import CohomologyTable
from labErrors import InconsistentInputError, ParityError, VarietyMismatchError
from labLogging import getLogger
import riemannRoch

logger=getLogger('instanton')

DEFECTS=(0, 1)


class InstantonVerdict:
    def __init__(self, admissible, isUlrich, isWic, natural, notes=None):
        self.admissible=tuple(sorted(set((int(d), int(q)) for d, q in admissible)))
        for _, q in self.admissible:
            assert q>=0
        self.isUlrich=isUlrich
        self.isWic=isWic
        self.natural=natural
        self.notes=list(notes or [])
        if isUlrich:
            assert (0, 0) in self.admissible

    def isInstanton(self):
        return len(self.admissible)>0

    def defects(self):
        return [d for d, _ in self.admissible]

    def quantum(self, defect):
        for d, q in self.admissible:
            if d==defect:
                return q
        return None

    def __eq__(self, other):
        if not isinstance(other, InstantonVerdict):
            return NotImplemented
        return (self.admissible, self.isUlrich, self.isWic, self.natural, self.notes)==(other.admissible, other.isUlrich, other.isWic, other.natural, other.notes)

    def __repr__(self):
        return "InstantonVerdict(admissible="+str(list(self.admissible))+", ulrich="+str(self.isUlrich)+")"


#generalized binomial, product form (1/k!)(m)(m-1)...(m-k+1), valid for negative m
def genBinom(m, k):
    assert k>=0
    return int(sp.ff(m, k)/sp.factorial(k))


#checks the conditions for one defect; returns (passes, quantum, failures)
def instantonConditions(table, defect):
    n=table.n
    failures=[]

    def vanish(i, t):
        value=table.h(i, t)
        if value!=0:
            failures.append("defect "+str(defect)+": h^"+str(i)+"(E("+str(t)+"h))="+str(value))

    vanish(0, -1)
    vanish(n, defect-n)
    for i in range(1, n-1):
        vanish(i, -(i+1))
        vanish(n-i, defect-n+i)
    if defect:
        for i in range(2, n-1):
            vanish(i, -i)

    quantum=table.h(1, -1)
    other=table.h(n-1, defect-n)
    if quantum!=other:
        failures.append("defect "+str(defect)+": h^1(E(-h))="+str(quantum)+" differs from h^"+str(n-1)+"(E("+str(defect-n)+"h))="+str(other))

    if defect:
        gap=table.chi(0)-(-1)**n*table.chi(-n)
        if gap!=0:
            failures.append("defect 1: chi(E)-(-1)^n chi(E(-nh))="+str(gap))

    return (not failures, quantum, failures)


def ulrichCriterion(table):
    n=table.n
    table.requireTwists(range(-n, 0), "Ulrich criterion")
    return all(table.row(t).isZero() for t in range(-n, 0))


#no intermediate cohomology in any twist of the window
def withoutIntermediateCohomology(table):
    n=table.n
    return all(table.h(i, t)==0 for t in table.twists() for i in range(1, n))


def naturalCohomologyWindow(table, defect):
    n=table.n
    shifts=range(defect-n, 0)
    table.requireTwists(shifts, "natural cohomology")
    return all(table.row(t).nonzeroCount()<=1 for t in shifts)


def checkInstanton(table):
    n=table.n
    table.requireTwists(range(-n, 1), "instanton check")
    if all(table.row(t).isZero() for t in table.twists()):
        logger.info("%s vanishes on its whole window", table)
        return InstantonVerdict([], False, withoutIntermediateCohomology(table), False, ["zero sheaf: every row of the window vanishes"]+table.assumptions)

    admissible=[]
    notes=[]
    for defect in DEFECTS:
        passes, quantum, failures=instantonConditions(table, defect)
        if passes:
            admissible.append((defect, quantum))
        notes.extend(failures)

    natural=any(naturalCohomologyWindow(table, d) for d, _ in admissible)
    verdict=InstantonVerdict(admissible, ulrichCriterion(table), withoutIntermediateCohomology(table), natural, notes+table.assumptions)
    logger.debug("%s: admissible %s", table, verdict.admissible)
    return verdict


#chi(E(th)) of an instanton with the given invariants
def chiPolynomial(n, defect, quantum, chi0, t):
    assert n>=1
    q=quantum
    if n==1:
        return chi0*(t+1+defect*t)
    if (n, defect)==(2, 1):
        return (chi0+q)*(t+1)**2-q
    return ((chi0+(n+1)*q)*(genBinom(t+n, n)+defect*genBinom(t+n-defect, n))
        -q*(genBinom(t+n+1, n)+genBinom(t+n-1-defect, n)))


def rankFromChi(n, defect, quantum, chi0):
    if n<2:
        raise InconsistentInputError("rank formula needs n >= 2")
    if defect==0:
        return chi0+(n-1)*quantum
    if n==2:
        return 2*chi0+2*quantum
    return 2*chi0+2*n*quantum


def chiFromRank(n, defect, quantum, rank):
    if n<2:
        raise InconsistentInputError("rank formula needs n >= 2")
    if defect==0:
        return rank-(n-1)*quantum
    if rank%2!=0:
        raise ParityError("non-ordinary instantons have even rank here, got "+str(rank))
    return rank//2-(1 if n==2 else n)*quantum


#invariants of the restriction to a general hyperplane section
def restrictionTransform(n, defect, quantum):
    if n<=2:
        raise InconsistentInputError("restriction needs n >= 3")
    if (n, defect)==(3, 1):
        return (1, 2*quantum)
    return (defect, quantum)


#extending from a hyperplane section keeps the invariants; only guaranteed for n >= 5
def extensionTransform(n, defect, quantum):
    if n<=2:
        raise InconsistentInputError("extension needs n >= 3")
    return ((defect, quantum), n>=5)


#the same rows seen on P^n through a finite projection of degree h^n
def pushforwardModel(table, degree):
    assert degree>=1
    return CohomologyTable("p"+str(table.n), table.rank*degree, table.tmin, table.tmax, table.rows, None, table.assumptions)


def directSum(t1, t2):
    if t1.varietyId!=t2.varietyId:
        raise VarietyMismatchError("cannot sum tables on "+t1.varietyId+" and "+t2.varietyId)
    tmin=max(t1.tmin, t2.tmin)
    tmax=min(t1.tmax, t2.tmax)
    if tmin>tmax:
        raise InconsistentInputError("tables have disjoint windows")
    rows={t: t1.row(t)+t2.row(t) for t in range(tmin, tmax+1)}

    chern=None
    if t1.chern is not None and t2.chern is not None:
        c, d=t1.chern, t2.chern
        total=(1+c.c1+c.c2+c.c3)*(1+d.c1+d.c2+d.c3)
        chern=riemannRoch.ChernData(c.rank+d.rank, total.part(1), total.part(2), total.part(3))
    assumptions=t1.assumptions+[a for a in t2.assumptions if a not in t1.assumptions]
    return CohomologyTable(t1.varietyId, t1.rank+t2.rank, tmin, tmax, rows, chern, assumptions)


#table of G = E^vee((n+1-defect)h+K), i.e. h^i(G(th)) = h^(n-i)(E((defect-n-1-t)h))
def ulrichDualTable(table, variety, defect):
    if table.varietyId!=variety.varietyId:
        raise VarietyMismatchError("table on "+table.varietyId+" used with "+variety.varietyId)
    n=table.n
    table.requireTwists(range(defect-n-1, defect), "Ulrich dual")
    shift=defect-n-1
    rows={shift-s: table.row(s).dims[::-1] for s in table.twists()}
    chern=riemannRoch.ulrichDualChern(variety, table.chern, defect) if table.chern is not None else None
    return CohomologyTable(table.varietyId, table.rank, shift-table.tmax, shift-table.tmin, rows, chern, table.assumptions)


class RegularityReport:
    def __init__(self, v, vExact, w, regUpper, violations, unchecked):
        self.v=v
        self.vExact=vExact
        self.w=w
        self.regUpper=regUpper
        self.violations=violations
        self.unchecked=unchecked

    def asTuple(self):
        return (self.v, self.w, self.regUpper)

    def __repr__(self):
        return "RegularityReport(v="+str(self.v)+", w="+str(self.w)+", reg<="+str(self.regUpper)+")"


def regularityReport(table, defect):
    n=table.n
    table.requireTwists([defect-1], "regularity bound")
    w=table.h(1, defect-1)+defect

    v=None
    for t in table.twists():
        if table.h(0, t)!=0:
            v=t
            break
    if v is None:
        v=table.tmax+1
        vExact=False
    else:
        vExact=(v>table.tmin)

    violations=[]
    unchecked=[]
    for i in range(1, n+1):
        t=w-i
        if not table.hasTwist(t):
            unchecked.append((i, t))
        elif table.h(i, t)!=0:
            violations.append((i, t))
    if violations:
        logger.warning("%s is not %d-regular: nonzero h^i(E((w-i)h)) at %s", table, w, violations)
    if unchecked:
        logger.info("regularity of %s not verified at %s", table, unchecked)
    return RegularityReport(v, vExact, w, w if not violations else None, violations, unchecked)


#regularity bound for non-ordinary instantons on P^n read off the monad
def hatRegularityBound(n, chi0, quantum, hn1EminusN, h1E):
    hat=min(chi0+(n+2)*quantum+hn1EminusN, h1E+2*quantum+n)
    return max(hat, 2)


class BettiShape:
    def __init__(self, v, w, N, beta):
        self.v=v
        self.w=w
        self.N=N
        self.beta={(int(p), int(i)): int(b) for (p, i), b in beta.items()}

    def columns(self):
        return sorted(set(i for (p, i), b in self.beta.items() if b!=0))

    def __repr__(self):
        return "BettiShape(v="+str(self.v)+", w="+str(self.w)+", N="+str(self.N)+", beta="+str(self.beta)+")"


def bettiShapeCheck(shape, chiOracle, probe=None):
    N=shape.N
    for (p, i), b in shape.beta.items():
        if b<0:
            return False
        if b!=0 and not (0<=p<=N-1 and shape.v<=i<=shape.w):
            logger.info("beta_%d,%d=%d outside the allowed shape", p, i, b)
            return False
    if probe is None:
        probe=range(-N-1, 1)
    for t in probe:
        value=sum((-1)**p*b*genBinom(t-i-p+N, N) for (p, i), b in shape.beta.items())
        if value!=chiOracle(t):
            logger.info("Betti table gives chi %d at t=%d, expected %d", value, t, chiOracle(t))
            return False
    return True


#quantum number of the pull-back of an Ulrich bundle through the d-uple embedding
def veroneseQuantum(n, rank, d, hn):
    if not 1<=n<=3:
        raise InconsistentInputError("Veronese formula needs 1 <= n <= 3")
    if ((n+1)*(d-1))%2!=0:
        raise ParityError("(n+1)(d-1) must be even")
    return Fraction((n-1)**n*rank*(d*d-1)*hn, 2**n*math.factorial(n))


def horrocksGate(n, rank, hn, quantum, defect):
    if n<4:
        raise InconsistentInputError("the gate applies to n >= 4")
    degree=rank*hn
    report={
        "forcedACM": degree<2*(n//2),
        "infeasible": defect==0 and quantum>=1 and degree<n-1,
        "forcedUlrich": defect==0 and degree==n-1 and n%2==0,
    }
    return report


def quantumFromChi(table):
    return -table.chi(-1)
