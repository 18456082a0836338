"""
Classification of instanton line bundles on flag3 and P1xP1xP1 by brute force over a box of exponents, the
decision procedures on cyclic varieties (instanton line bundles, rank two stability, classical instantons on
Fano threefolds) and the numerical side of the rank two constructions: Serre correspondences on scrolls and on
P1xP1xP1, the prime Fano family, the surface constructions and the non-split extensions of instanton lines.

Brute force runs accept jobs; with jobs>1 the candidates are checked in a multiprocessing pool, each worker
rebuilding the variety from its string, and the results are merged in lexicographic order.
"""

from fractions import Fraction
import itertools as it
import multiprocessing

from chowRing import integrate
from cohomology import buildTable, lineBundleCohomology, cohProjectiveSpace
from instanton import checkInstanton, directSum
from labErrors import InconsistentInputError, ParityError
from labLogging import getLogger
from monads import serreConstructionChern
import riemannRoch
from varieties import LineBundleSpec, parseVariety, scrollP1, tripleP1

logger=getLogger('classify')

MIN_BOX=4


class ClassificationReport:
    def __init__(self, kind, varietyId, box, defect, found, expected, boundary):
        self.kind=kind
        self.varietyId=varietyId
        self.box=box
        self.defect=defect
        #canonical exponents -> quantum number from the engine
        self.found=dict(sorted(found.items()))
        #canonical exponents -> (a, quantum number from the closed formula)
        self.expected=dict(sorted(expected.items()))
        self.boundary=dict(sorted(boundary.items()))

        self.missing=[c for c in self.expected if c not in self.found]
        self.extras=[c for c in self.found if c not in self.expected]
        self.formulaMismatches=[(c, self.found[c], q) for c, (_, q) in self.expected.items() if c in self.found and self.found[c]!=q]
        if self.missing or self.formulaMismatches:
            self.agreement="mismatch"
        elif self.extras:
            self.agreement="superset"
        else:
            self.agreement="exact"

    #extras that are the a=0 members of the family
    def boundaryExtras(self):
        return [c for c in self.extras if c in self.boundary]

    def __repr__(self):
        return "ClassificationReport("+self.kind+", box="+str(self.box)+", defect="+str(self.defect)+", "+self.agreement+")"


class StabilityVerdict:
    STATUSES=("stable", "semistable", "strictly-semistable-possible", "unstable-possible", "unstable", "undecided")

    def __init__(self, status, rule, labels=None, witnesses=None):
        assert status in self.STATUSES
        self.status=status
        self.rule=rule
        self.labels=list(labels or [])
        #label -> (variety string, bundle descriptor)
        self.witnesses=dict(witnesses or {})

    #True, False, or None when undecided
    @property
    def semistable(self):
        if self.status in ("stable", "semistable"):
            return True
        if self.status=="unstable":
            return False
        return None

    @property
    def stable(self):
        if self.status=="stable":
            return True
        if self.status in ("semistable", "unstable"):
            return False
        return None

    def __eq__(self, other):
        if not isinstance(other, StabilityVerdict):
            return NotImplemented
        return (self.status, self.rule, self.labels, self.witnesses)==(other.status, other.rule, other.labels, other.witnesses)

    def __repr__(self):
        return "StabilityVerdict("+self.status+", rule="+str(self.rule)+")"


#worker entry point; takes and returns plain data so that it pickles
def checkCandidate(task):
    varietyText, coords, window=task
    variety=parseVariety(varietyText)
    table=buildTable(variety, [LineBundleSpec(variety.varietyId, coords)], window)
    return coords, checkInstanton(table)


def runCandidates(varietyText, candidates, window, jobs=1):
    tasks=[(varietyText, coords, window) for coords in candidates]
    if jobs>1:
        with multiprocessing.Pool(processes=jobs) as pool:
            results=pool.map(checkCandidate, tasks)
    else:
        results=[checkCandidate(task) for task in tasks]
    return sorted(results, key=lambda r: r[0])


def bruteForce(varietyText, candidates, defect, jobs):
    variety=parseVariety(varietyText)
    window=(-variety.n-1, 0)
    candidates=list(candidates)
    logger.info("checking %d candidates on %s", len(candidates), varietyText)
    found={}
    for coords, verdict in runCandidates(varietyText, candidates, window, jobs):
        quantum=verdict.quantum(defect)
        if quantum is not None:
            found[coords]=quantum
    return variety, found


def checkBox(box):
    if box<MIN_BOX:
        raise InconsistentInputError("the enumeration box must be at least "+str(MIN_BOX)+", got "+str(box))


#L_a = O(-a h1 + (a+2-defect) h2) up to swapping h1 and h2, q = (2-defect)/2 a(a+2-defect)
def flagFamilyQuantum(a, defect):
    return riemannRoch.exactInteger(Fraction(2-defect, 2)*a*(a+2-defect), "quantum number")


def classifyFlagLines(box=6, defect=0, jobs=1):
    checkBox(box)
    logger.info("flag3 line bundles, box %d, defect %d", box, defect)
    candidates=[(a1, a2) for a1, a2 in it.combinations_with_replacement(range(-box, box+1), 2)]
    variety, found=bruteForce("flag3", candidates, defect, jobs)

    expected={}
    a=1
    while a+2-defect<=box and a<=box:
        expected[(-a, a+2-defect)]=(a, flagFamilyQuantum(a, defect))
        a+=1
    boundary={(0, 2-defect): (0, flagFamilyQuantum(0, defect))}
    return ClassificationReport("flag", variety.varietyId, box, defect, found, expected, boundary)


#L_a = O(-a h1 + h2 + (a+2) h3) up to permutations, ordinary only, q = a(a+2)
def classifySegreLines(box=6, defect=0, jobs=1):
    checkBox(box)
    logger.info("P1xP1xP1 line bundles, box %d, defect %d", box, defect)
    candidates=list(it.combinations_with_replacement(range(-box, box+1), 3))
    variety, found=bruteForce("triple_p1", candidates, defect, jobs)

    expected={}
    boundary={}
    if defect==0:
        a=1
        while a+2<=box:
            expected[(-a, 1, a+2)]=(a, a*(a+2))
            a+=1
        boundary[(0, 1, 2)]=(0, 0)
    return ClassificationReport("segre", variety.varietyId, box, defect, found, expected, boundary)


class CyclicLineDecision:
    def __init__(self, assertion, w, reason, conclusive=True):
        assert assertion in (None, 1, 2, 3)
        self.assertion=assertion
        self.w=w
        self.reason=reason
        self.conclusive=conclusive

    def isNone(self):
        return self.assertion is None

    def __eq__(self, other):
        if not isinstance(other, CyclicLineDecision):
            return NotImplemented
        return (self.assertion, self.w, self.conclusive)==(other.assertion, other.w, other.conclusive)

    def __repr__(self):
        return "CyclicLineDecision(assertion="+str(self.assertion)+", w="+str(self.w)+", "+self.reason+")"


#instanton line bundles O(wH) on a cyclic n-fold with h=uH and K=vH
def classifyCyclicLines(n, u, v, defect, generatorEffective=True):
    if n<2 or u<1:
        raise InconsistentInputError("need n >= 2 and u >= 1")
    if not generatorEffective:
        return CyclicLineDecision(None, None, "ample generator not effective: no conclusion", conclusive=False)

    eps=u*(n+1-defect)+v
    if eps%2!=0:
        return CyclicLineDecision(None, None, "u(n+1-d)+v="+str(eps)+" is odd")
    w=eps//2
    #h^0(L(-h))=0 with H effective forces w <= u-1, i.e. u(n-1-d)+v <= -2
    if w>u-1:
        return CyclicLineDecision(None, None, "w="+str(w)+" exceeds u-1="+str(u-1))

    if v==-n and defect==1:
        if n==2:
            return CyclicLineDecision(None, None, "the quadric surface is not cyclic")
        if (u, w)!=(1, 0):
            return CyclicLineDecision(None, None, "K=-nH with defect 1 needs u=1, got u="+str(u)+", w="+str(w))
        return CyclicLineDecision(3, w, "quadric, h=O(1), L=O")
    if v!=-n-1:
        return CyclicLineDecision(None, None, "v="+str(v)+" is neither -n nor -n-1")
    if defect==0:
        if (u, w)!=(1, 0):
            return CyclicLineDecision(None, None, "K=-(n+1)H with defect 0 needs u=1, got u="+str(u)+", w="+str(w))
        return CyclicLineDecision(1, w, "P^n, h=O(1), L=O")
    if (n, u, w)!=(3, 2, 1):
        return CyclicLineDecision(None, None, "K=-(n+1)H with defect 1 needs n=3, u=2, got n="+str(n)+", u="+str(u))
    return CyclicLineDecision(2, w, "P^3, h=O(2), L=O(1)")


#the rank two rules on a cyclic variety; h0Norm=h^0(E_norm), h0NormMinus=h^0(E_norm(-H))
def hoppeRank2(variety, c, h0Norm, h0NormMinus):
    if variety.cyclic is None:
        raise InconsistentInputError(variety.varietyId+" is not a cyclic catalog entry")
    if c.rank!=2:
        raise InconsistentInputError("the rank two rules need rank 2, got "+str(c.rank))
    riemannRoch.checkVariety(variety, c)
    eps=c.c1.linearCoefficients()[0]

    if h0NormMinus>0:
        return StabilityVerdict("unstable", "semistable bundles have h0(E_norm(-H))=0")
    if h0Norm==0:
        return StabilityVerdict("stable", "h0(E_norm)=0 gives stability in rank two")
    if eps%2!=0:
        return StabilityVerdict("unstable", "odd c1: stable iff semistable, and h0(E_norm)>0")
    return StabilityVerdict("semistable", "even c1 with h0(E_norm(-H))=0, not stable since h0(E_norm)>0")


#when rank two instantons on a cyclic n-fold with h=uH, K=vH can fail to be (semi)stable
def cyclicRank2StabilityCases(n, u, v, defect):
    if n<2 or u<1:
        raise InconsistentInputError("need n >= 2 and u >= 1")
    eps=u*(n+1-defect)+v
    t=(-eps)//2
    if eps%2==0:
        semistableGuaranteed=(t-1<=-u)
    else:
        semistableGuaranteed=(t<=-u)
    stableGuaranteed=(t<=-u)
    projective=(v==-n-1)
    quadric=(v==-n)

    labels=[]
    witnesses={}
    if not semistableGuaranteed:
        if projective and u==1 and defect==1:
            labels.append("1a")
            witnesses["1a"]=("p"+str(n), "O:"+str(u-1)+"+O:"+str(u-2))
        if n==2 and v==-3 and defect==1:
            labels.append("1b")
            witnesses["1b"]=(("p2@"+str(u)) if u!=1 else "p2", "O:"+str(u-1)+"+O:"+str(u-2))
    elif not stableGuaranteed:
        if projective and u==1 and defect==0:
            labels.append("2a")
            witnesses["2a"]=("p"+str(n), "2*O")
        if (n, v, u, defect)==(3, -4, 2, 1):
            labels.append("2b")
            witnesses["2b"]=("p3@2", "2*O:1")
        if quadric and u==1 and defect==1 and n>=3:
            labels.append("2c")
            witnesses["2c"]=("q"+str(n), "2*O")

    if semistableGuaranteed and stableGuaranteed:
        return StabilityVerdict("stable", "t="+str(t)+" <= -u")
    if not labels:
        logger.warning("no exception case matches n=%d u=%d v=%d defect=%d", n, u, v, defect)
        return StabilityVerdict("undecided", "t="+str(t)+", eps="+str(eps))
    if not semistableGuaranteed:
        return StabilityVerdict("unstable-possible", "t="+str(t)+", eps="+str(eps), labels, witnesses)
    return StabilityVerdict("strictly-semistable-possible", "t="+str(t)+", eps="+str(eps), labels, witnesses)


def fanoQ(fanoIndex, eps):
    return (fanoIndex+1-eps)//2


#rank two E with c1=(4-d-i_X)h on a cyclic Fano threefold against classical instantons
def fanoInstantonBridge(fanoIndex, defect, eps):
    if not 1<=fanoIndex<=4:
        raise InconsistentInputError("Fano index must lie in 1..4, got "+str(fanoIndex))
    if eps not in (0, 1) or defect not in (0, 1):
        raise InconsistentInputError("eps and defect must be 0 or 1")

    qComplement=fanoQ(fanoIndex, 1-defect)
    twist=qComplement-2
    c1=4-defect-fanoIndex
    classicalEps=-(c1+2*twist)
    assert classicalEps in (0, 1)

    report={
        "fanoIndex": fanoIndex,
        "defect": defect,
        "eps": eps,
        "qX": fanoQ(fanoIndex, eps),
        "normalizationTwist": twist,
        "c1": c1,
        "normalizedEps": classicalEps,
    }
    if (fanoIndex, defect) in ((4, 0), (4, 1), (3, 1)):
        report["forward"]=("1b", "h0(E)=0")
    else:
        report["forward"]=("1a", None)
    if (fanoIndex, defect)==(1, 0):
        report["backward"]=("2b", "h0(E_norm(h))=0")
    else:
        report["backward"]=("2a", None)
    if eps!=classicalEps:
        logger.info("eps=%d differs from the eps=%d of the normalized bundle", eps, classicalEps)
    return report


def classicalInstantonCheck(fanoIndex, eps, h0E, h1ETwist):
    if not 1<=fanoIndex<=4:
        raise InconsistentInputError("Fano index must lie in 1..4, got "+str(fanoIndex))
    return h0E==0 and h1ETwist==0


def curveQuantum(rank, degree, defect):
    if defect==0:
        return 0
    if (rank*degree)%2!=0:
        raise ParityError("rk*deg="+str(rank*degree)+" must be even for non-ordinary instantons on a curve")
    return rank*degree//2


class ScrollConstructionReport:
    def __init__(self, varietyId, n, genus, degG, k):
        self.varietyId=varietyId
        self.n=n
        self.genus=genus
        self.degG=degG
        self.k=k
        self.chern=None
        self.c2Degree=None
        self.quantum=None
        self.decomposable=(k==0)
        self.summands=[]
        self.splitVerdict=None
        self.h1End=None
        self.moduliDimension=None
        self.chain={}
        self.notes=[]

    def __repr__(self):
        return "ScrollConstructionReport("+self.varietyId+", k="+str(self.k)+", quantum="+str(self.quantum)+")"


def asScroll(scroll):
    if isinstance(scroll, str):
        scroll=parseVariety(scroll)
    elif isinstance(scroll, (tuple, list)):
        scroll=scrollP1(scroll)
    if scroll.kind not in ('scroll_p1', 'scroll_generic'):
        raise InconsistentInputError(scroll.varietyId+" is not a scroll")
    return scroll


#0 -> O((g+theta)f) -> E -> I_Z(h+theta f) -> 0 with Z the union of k linear P^{n-2} in distinct fibres
def scrollConstructionReport(scroll, k):
    scroll=asScroll(scroll)
    n=scroll.n
    genus=scroll.params["genus"]
    degG=scroll.params["degG"]
    if n<3:
        raise InconsistentInputError("the construction needs n >= 3, got "+str(n))
    if k<0:
        raise InconsistentInputError("k must be non-negative")
    report=ScrollConstructionReport(scroll.varietyId, n, genus, degG, k)
    h=scroll.ring.gen("h")
    f=scroll.ring.gen("f")
    #theta has degree g-1, so (g+theta)f=(degG+g-1)f
    fibreTwist=degG+genus-1

    D=f*fibreTwist
    detE=h+f*(degG+2*genus-2)
    chern=serreConstructionChern(scroll, D, detE, h*f*k)
    assert chern.c1==scroll.polarization*(n+1)+scroll.canonical
    report.chern=chern
    report.c2Degree=integrate(chern.c2*h**(n-2))

    def line(t, a):
        return lineBundleCohomology(scroll, LineBundleSpec(scroll.varietyId, (t, a)))

    def chiE(t):
        return line(t, fibreTwist).euler()+line(t+1, genus-1).euler()-k*cohProjectiveSpace(n-2, t+1).euler()

    report.quantum=-chiE(-1)
    if n==3:
        expected=riemannRoch.eulerCharacteristic(scroll, riemannRoch.twistChern(chern, h*(-1)))
        if expected!=chiE(-1):
            raise InconsistentInputError("chi(E(-h)) by additivity is "+str(chiE(-1))+" but Riemann-Roch gives "+str(expected))
    if genus>0:
        report.notes.append("positive genus: engine values are chi-level")

    if k==0:
        report.summands=[LineBundleSpec(scroll.varietyId, (0, fibreTwist)), LineBundleSpec(scroll.varietyId, (1, genus-1))]
        table=buildTable(scroll, report.summands, (-n-1, 0))
        report.splitVerdict=checkInstanton(table)
        report.h1End=(n-1)*degG+(n+1)*(genus-1)+genus
        report.notes.append("k=0: non-split extensions 0 -> O(h+theta f) -> E -> O((g+theta)f) -> 0 give the simple bundles")
    else:
        report.h1End=(n-1)*degG+(n+1)*(genus-1)+2*n*k
    report.moduliDimension=report.h1End

    plane=cohProjectiveSpace(n-2, 1)
    twisted=line(1, -degG)
    chain={}
    if k>=1:
        chain["E(-h-theta f)"]={"h1": k-1, "engine": (k-line(0, 0).euler()) if genus==0 else None}
    chain["O(h-g f)"]={"h1": (n-1)*degG+n*(genus-1), "engine": twisted[1]}
    chain["O_Z(h-g f)"]={"h0": (n-1)*k, "engine": k*plane[0]}
    chain["I_Z(h-g f)"]={"h1": n*(genus-1)+(n-1)*(degG+k), "engine": twisted[1]+k*plane[0] if twisted[0]==0 else None}
    chain["E(-(g+theta)f)"]={"h0": 1, "h1": n*(genus-1)+(n-1)*(degG+k)+genus}
    chain["I_Z E(-(g+theta)f)"]={"h1-h0": (n-1)*degG+(n+1)*(genus-1)+(2*n-1)*k}
    chain["N_L"]={"h0": n}
    for name, entry in chain.items():
        value=entry.get("h1", entry.get("h0"))
        if entry.get("engine") is not None and entry["engine"]!=value:
            logger.warning("%s on %s: closed form %d, engine %d", name, scroll.varietyId, value, entry["engine"])
            report.notes.append(name+": closed form "+str(value)+", engine "+str(entry["engine"]))
    report.chain=chain
    return report


#quantum numbers of the rank two constructions on surfaces
def surfaceQuantumFormulas(kind, invariants):
    if kind=="mukai":
        degD, chiO, hSq, kh, defect=invariants
        value=Fraction(degD-2*chiO)-Fraction((defect*defect-4*defect+5)*hSq+(3-defect)*kh, 2)
    elif kind=="genus0":
        z, defect, irregularity, h1Oh, N=invariants
        if z<(1-defect)*(N+1)+1:
            raise InconsistentInputError("need z >= "+str((1-defect)*(N+1)+1)+", got "+str(z))
        value=Fraction(z+(1+defect)*(irregularity-1)+(1-defect)*(h1Oh-N-1))
    else:
        raise InconsistentInputError("unknown surface construction "+str(kind))
    if value.denominator!=1:
        raise ParityError("quantum number "+str(value)+" is not an integer")
    if value<0:
        raise InconsistentInputError("negative quantum number "+str(value))
    return value.numerator


#invariants of the rank two ordinary instantons E_k on a prime Fano threefold of genus g_X
def primeFanoFamily(genusX, k):
    if genusX<3 or k<0:
        raise InconsistentInputError("need g_X >= 3 and k >= 0")
    hCube=2*genusX-2
    c1=riemannRoch.fanoChernC1(1, 2, 0)
    c2h=5*genusX-1+k
    #E(-h): c1=h, c2 h=c2h-c1 h^3+h^3, K=-h and c2(X)h=24
    c2hTwist=c2h-(c1-1)*hCube
    chiMinus=riemannRoch.hrrThreefold(2, 1, hCube, c2hTwist, 0, -hCube, -c2hTwist, hCube, 24)
    return {
        "rank": 2,
        "c1": c1,
        "c2h": c2h,
        "quantum": k,
        "chiMinusH": chiMinus,
        "h1End": 4+genusX+2*k,
        "hHigherEnd": 0,
    }


#upper bounds on h^i(E) from 0 -> A -> E -> I_Z(B) -> 0
def sequenceBounds(hA, hB, hZ):
    n=len(hA)-1
    return [hA[i]+hB[i]+(hZ[i-1] if i>=1 and i-1<len(hZ) else 0) for i in range(n+1)]


#0 -> O(h1+3h3) -> E -> I_Z(h1+2h2-h3) -> 0 on P1xP1xP1, Z the union of s lines of class h2h3
def segreStableExample(s):
    if s<0:
        raise InconsistentInputError("s must be non-negative")
    variety=tripleP1()
    ring=variety.ring
    h2h3=ring.gen("h2")*ring.gen("h3")
    A=variety.divisorClass((1, 0, 3))
    B=variety.divisorClass((1, 2, -1))
    chern=serreConstructionChern(variety, A, A+B, h2h3*s)

    #E(-h): A-h=(0,-1,2), B-h=(0,1,-2); h1 restricts to O(1) on each line, h2 and h3 trivially
    hA=lineBundleCohomology(variety, LineBundleSpec(variety.varietyId, (0, -1, 2)))
    hB=lineBundleCohomology(variety, LineBundleSpec(variety.varietyId, (0, 1, -2)))
    hZ=cohProjectiveSpace(1, 0).scaled(s)
    chi=hA.euler()+hB.euler()-hZ.euler()
    hrr=riemannRoch.eulerCharacteristic(variety, riemannRoch.twistChern(chern, variety.polarization*(-1)))
    if hrr!=chi:
        raise InconsistentInputError("chi(E(-h)) by additivity is "+str(chi)+" but Riemann-Roch gives "+str(hrr))
    bounds=sequenceBounds(hA, hB, hZ)
    exact=(bounds[0]==bounds[2]==bounds[3]==0)

    return {
        "s": s,
        "chern": chern,
        "c1IsTwoH": chern.c1==variety.polarization*2,
        "chiMinusH": chi,
        "bounds": bounds,
        "quantumOracle": -chi if exact else None,
        "quantumClaimed": s-2,
        "splitObstruction": lineBundleCohomology(variety, LineBundleSpec(variety.varietyId, (0, -2, 4)))[1],
    }


def extensionLines(kind, a, b, defect):
    if kind=="flag":
        return "flag3", (-a, a+2-defect), (-b, b+2-defect)
    if kind=="segre":
        if defect!=0:
            raise InconsistentInputError("instanton lines on P1xP1xP1 are ordinary")
        return "triple_p1", (-a, 1, a+2), (-b, b+2, 1)
    raise InconsistentInputError("unknown extension family "+str(kind))


#0 -> L_a -> E -> L_b -> 0 with L_a, L_b instanton lines of the same slope
def extensionFamilies(kind, a, b, defect=0):
    if a<0 or b<0:
        raise InconsistentInputError("a and b must be non-negative")
    varietyText, first, second=extensionLines(kind, a, b, defect)
    variety=parseVariety(varietyText)
    La=LineBundleSpec(variety.varietyId, first)
    Lb=LineBundleSpec(variety.varietyId, second)
    difference=LineBundleSpec(variety.varietyId, tuple(x-y for x, y in zip(first, second)))
    ext=lineBundleCohomology(variety, difference)[1]

    window=(-variety.n-1, 0)
    ta=buildTable(variety, [La], window)
    tb=buildTable(variety, [Lb], window)
    verdict=checkInstanton(directSum(ta, tb))
    slopes=[riemannRoch.slope(variety, t.chern) for t in (ta, tb)]
    return {
        "variety": variety.varietyId,
        "sub": first,
        "quotient": second,
        "ext1": ext,
        "nonSplit": ext>0,
        "slopes": slopes,
        "sameSlope": slopes[0]==slopes[1],
        "quantum": verdict.quantum(defect),
    }
