"""
Line bundle cohomology on the catalog varieties.

Each engine returns a CohVector (h^0,...,h^n) for one line bundle:
    cohProjectiveSpace  O(t) on P^n
    bottPn              Omega^p(t) on P^n (Bott's formula)
    cohQuadric          O(t) on a smooth quadric
    cohProduct          Kunneth over a product of projective spaces
    cohFlag3            Borel-Weil-Bott on the point-line flag threefold
    cohScrollP1         scrolls over P1, through the symmetric powers of the defining bundle
    cohScrollGeneric    scrolls over a curve of positive genus (generic model, exact only at the level of chi)
    cohCurve            curves (P1 exact, generic Brill-Noether, non-effective theta characteristic)

A CohomologyTable stores the rows of E(th) over a window of twists for E a direct sum of catalog line bundles.
"""

import functools
import itertools as it

import numpy as np
from scipy.special import comb

import riemannRoch
from labErrors import InconsistentInputError, VarietyMismatchError, WindowTooSmallError, DescriptorError
from labLogging import getLogger
from varieties import parseBundle

logger=getLogger('cohomology')

GENERIC_CURVE_NOTE="positive genus curve: generic Brill-Noether model"
GENERIC_SCROLL_NOTE="scroll over a positive genus curve: generic model, exact only for chi"


def binom(m, k):
    if k<0 or m<k:
        return 0
    return int(comb(m, k, exact=True))


class CohVector:
    def __init__(self, dims):
        self.dims=tuple(int(x) for x in dims)
        for x in self.dims:
            if x<0:
                raise InconsistentInputError("negative cohomology dimension in "+str(self.dims))

    @classmethod
    def zeros(cls, n):
        return cls((0,)*(n+1))

    #single nonzero entry h^i=value
    @classmethod
    def concentrated(cls, n, i, value):
        dims=[0]*(n+1)
        dims[i]=value
        return cls(dims)

    @property
    def n(self):
        return len(self.dims)-1

    def __len__(self):
        return len(self.dims)

    def __getitem__(self, i):
        return self.dims[i]

    def __iter__(self):
        return iter(self.dims)

    def asArray(self):
        return np.array(self.dims, dtype=object)

    def euler(self):
        signs=np.array([(-1)**i for i in range(len(self.dims))], dtype=object)
        return int(np.dot(self.asArray(), signs))

    def isZero(self):
        return not any(self.dims)

    def nonzeroCount(self):
        return int(np.count_nonzero(self.asArray()))

    def __add__(self, other):
        if len(other)!=len(self):
            raise VarietyMismatchError("cannot add cohomology vectors of lengths "+str(len(self))+" and "+str(len(other)))
        return CohVector(self.asArray()+other.asArray())

    def scaled(self, m):
        return CohVector(self.asArray()*m)

    def __eq__(self, other):
        if isinstance(other, CohVector):
            return self.dims==other.dims
        if isinstance(other, tuple):
            return self.dims==other
        return NotImplemented

    def __hash__(self):
        return hash(self.dims)

    def __repr__(self):
        return "CohVector"+str(self.dims)


def serreDualVector(v):
    return CohVector(tuple(reversed(v.dims)))


@functools.cache
def cohProjectiveSpace(n, t):
    assert n>=1
    if t>=0:
        return CohVector.concentrated(n, 0, binom(t+n, n))
    if t<=-n-1:
        return CohVector.concentrated(n, n, binom(-t-1, n))
    return CohVector.zeros(n)


#Bott's formula for Omega^p(t) on P^n
@functools.cache
def bottPn(n, p, t):
    assert n>=1 and 0<=p<=n
    dims=[0]*(n+1)
    if t>p:
        dims[0]+=binom(t+n-p, t)*binom(t-1, p)
    if t==0:
        dims[p]+=1
    if t<p-n:
        dims[n]+=binom(-t+p, -t)*binom(-t-1, n-p)
    return CohVector(dims)


@functools.cache
def cohQuadric(n, t):
    assert n>=2
    if t>=0:
        return CohVector.concentrated(n, 0, binom(t+n+1, n+1)-binom(t+n-1, n+1))
    if t<=-n:
        return serreDualVector(cohQuadric(n, -n-t))
    return CohVector.zeros(n)


#Kunneth formula, factors are (n_i, t_i) for O(t_i) on P^{n_i}
def cohProduct(factors):
    factors=list(factors)
    assert len(factors)>=1
    total=np.array([1], dtype=object)
    for n, t in factors:
        vector=cohProjectiveSpace(n, t).asArray()
        out=np.zeros(len(total)+len(vector)-1, dtype=object)
        for i, value in enumerate(total):
            out[i:i+len(vector)]+=value*vector
        total=out
    return CohVector(total)


#Borel-Weil-Bott for SL3/B, rho=(1,1), simple reflections acting on lambda+rho
@functools.cache
def cohFlag3(a1, a2):
    x=a1+1
    y=a2+1
    if x==0 or y==0 or x+y==0:
        return CohVector.zeros(3)
    length=0
    while x<0 or y<0:
        if x<0:
            x, y=-x, x+y
        else:
            x, y=x+y, -y
        length+=1
    return CohVector.concentrated(3, length, x*y*(x+y)//2)


#h^i(P1, O(s)) for s running over the degrees of S^t(O(a_0)+...+O(a_{n-1}))
def symmetricPowerDegrees(degrees, t):
    for combo in it.combinations_with_replacement(range(len(degrees)), t):
        yield sum(degrees[i] for i in combo)


@functools.cache
def cohScrollP1(degrees, t, a):
    degrees=tuple(degrees)
    n=len(degrees)
    assert n>=2 and min(degrees)>=1
    if t>=0:
        dims=[0]*(n+1)
        for s in symmetricPowerDegrees(degrees, t):
            line=cohProjectiveSpace(1, s+a)
            dims[0]+=line[0]
            dims[1]+=line[1]
        return CohVector(dims)
    if t>=1-n:
        return CohVector.zeros(n)
    #K=-nh+(d-2)f
    return serreDualVector(cohScrollP1(degrees, -n-t, sum(degrees)-2-a))


#chi of S^t(G)(a) on a genus g curve, G of rank n and degree degG, split generically into h^0 or h^1
@functools.cache
def cohScrollGeneric(n, genus, degG, t, a):
    assert n>=2
    if t>=0:
        rank=binom(t+n-1, n-1)
        degree=degG*binom(t+n-1, n)+rank*a
        chi=degree+rank*(1-genus)
        dims=[0]*(n+1)
        dims[0]=max(0, chi)
        dims[1]=max(0, -chi)
        return CohVector(dims)
    if t>=1-n:
        return CohVector.zeros(n)
    return serreDualVector(cohScrollGeneric(n, genus, degG, -n-t, degG+2*genus-2-a))


@functools.cache
def cohCurve(genus, d, model):
    assert genus>=0
    if model=='exact_p1':
        if genus!=0:
            raise InconsistentInputError("exact_p1 model needs genus 0")
        return CohVector((max(0, d+1), max(0, -d-1)))
    if model=='generic':
        return CohVector((max(0, d-genus+1), max(0, genus-1-d)))
    if model=='theta':
        if d!=genus-1:
            raise InconsistentInputError("a theta characteristic has degree g-1="+str(genus-1)+", got "+str(d))
        return CohVector((0, 0))
    raise InconsistentInputError("unknown curve model "+str(model))


def lineBundleCohomology(variety, bundle):
    if bundle.varietyId!=variety.varietyId:
        raise VarietyMismatchError(str(bundle)+" does not live on "+variety.varietyId)
    coords=bundle.coords
    variety.divisorClass(coords)
    kind=variety.kind

    if kind=='projective_space':
        return cohProjectiveSpace(variety.n, coords[0])
    if kind=='quadric':
        return cohQuadric(variety.n, coords[0])
    if kind=='flag3':
        return cohFlag3(coords[0], coords[1])
    if kind=='triple_p1':
        return cohProduct([(1, a) for a in coords])
    if kind=='scroll_p1':
        return cohScrollP1(variety.params["degrees"], coords[0], coords[1])
    if kind=='scroll_generic':
        params=variety.params
        return cohScrollGeneric(variety.n, params["genus"], params["degG"], coords[0], coords[1])
    if kind=='curve':
        genus=variety.params["genus"]
        model='theta' if bundle.theta and coords[0]==genus-1 else variety.params["model"]
        return cohCurve(genus, coords[0], model)
    raise DescriptorError("no cohomology engine for "+kind)


#assumptions the engines make on this variety, carried by every table built on it
def modelAssumptions(variety):
    genus=variety.params.get("genus", 0)
    if variety.kind=='curve' and genus>0:
        return [GENERIC_CURVE_NOTE]
    if variety.kind=='scroll_generic' and genus>0:
        return [GENERIC_SCROLL_NOTE]
    return []


class CohomologyTable:
    def __init__(self, varietyId, rank, tmin, tmax, rows, chern=None, assumptions=None):
        assert rank>=0
        if tmin>tmax:
            raise InconsistentInputError("empty window ["+str(tmin)+","+str(tmax)+"]")
        self.varietyId=varietyId
        self.rank=rank
        self.tmin=tmin
        self.tmax=tmax
        self.rows={t: rows[t] if isinstance(rows[t], CohVector) else CohVector(rows[t]) for t in range(tmin, tmax+1) if t in rows}
        missing=[t for t in range(tmin, tmax+1) if t not in self.rows]
        if missing:
            raise WindowTooSmallError(missing, "row data")
        lengths=set(len(v) for v in self.rows.values())
        if len(lengths)!=1:
            raise InconsistentInputError("rows of different lengths in table on "+varietyId)
        self.dimension=lengths.pop()-1
        self.chern=chern
        self.assumptions=list(assumptions or [])

    @property
    def window(self):
        return (self.tmin, self.tmax)

    @property
    def n(self):
        return self.dimension

    def twists(self):
        return list(range(self.tmin, self.tmax+1))

    def hasTwist(self, t):
        return self.tmin<=t<=self.tmax

    def requireTwists(self, twists, what="table"):
        missing=[t for t in twists if not self.hasTwist(t)]
        if missing:
            logger.warning("%s needs twists %s outside the window [%d,%d]", what, missing, self.tmin, self.tmax)
            raise WindowTooSmallError(missing, what)

    def row(self, t):
        self.requireTwists([t])
        return self.rows[t]

    #h^i(E(th))
    def h(self, i, t):
        return self.row(t)[i]

    def chi(self, t):
        return self.row(t).euler()

    def restricted(self, tmin, tmax):
        self.requireTwists([tmin, tmax])
        return CohomologyTable(self.varietyId, self.rank, tmin, tmax, self.rows, self.chern, self.assumptions)

    #alternating sums against Riemann-Roch, when the variety admits it
    def validate(self, variety):
        if self.chern is None or variety.n>3:
            return True
        if variety.n==3 and variety.c2Omega is None:
            return True
        for t in self.twists():
            expected=riemannRoch.eulerCharacteristic(variety, riemannRoch.twistChern(self.chern, variety.polarization*t))
            if expected!=self.chi(t):
                raise InconsistentInputError("row t="+str(t)+" has chi "+str(self.chi(t))+" but Riemann-Roch gives "+str(expected))
        return True

    def __eq__(self, other):
        if not isinstance(other, CohomologyTable):
            return NotImplemented
        return (self.varietyId, self.rank, self.window, self.rows)==(other.varietyId, other.rank, other.window, other.rows)

    def __repr__(self):
        return "CohomologyTable("+self.varietyId+", rank="+str(self.rank)+", window="+str(self.window)+")"


#Chern data of a direct sum of line bundles, prod(1+D_i)
def directSumChern(variety, bundles):
    total=variety.ring.one()
    for bundle in bundles:
        total=total*(1+variety.divisorClass(bundle.coords))
    return riemannRoch.ChernData(len(bundles), total.part(1), total.part(2), total.part(3))


def defaultWindow(variety):
    return (-variety.n-1, 2)


def buildTable(variety, bundles, window=None):
    if isinstance(bundles, str):
        bundles=parseBundle(variety, bundles)
    bundles=list(bundles)
    if not bundles:
        raise DescriptorError("a table needs at least one summand")
    tmin, tmax=window if window is not None else defaultWindow(variety)

    rows={}
    for t in range(tmin, tmax+1):
        row=CohVector.zeros(variety.n)
        for bundle in bundles:
            row=row+lineBundleCohomology(variety, bundle.twist(variety, t))
        rows[t]=row
    logger.debug("built table of %s on %s over [%d,%d]", bundles, variety.varietyId, tmin, tmax)

    table=CohomologyTable(variety.varietyId, len(bundles), tmin, tmax, rows, directSumChern(variety, bundles), modelAssumptions(variety))
    table.validate(variety)
    return table
