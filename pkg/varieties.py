"""
The catalog of polarized varieties and the line bundles living on them.

Variety strings (as accepted by parseVariety):
    pN, pN@u            projective space, polarization O(u) (default u=1)
    qN, qN@u            smooth quadric hypersurface of dimension N (numerical model)
    flag3               the flag threefold, h=h1+h2
    p1xp1xp1            P1xP1xP1 (also triple_p1), h=h1+h2+h3
    scroll-p1:a0,...    rational normal scroll P(O(a0)+...+O(a_{n-1})) over P1
    scroll:n,g,deg      scroll of dimension n over a curve of genus g with h^n=deg (generic model)
    curve:g:deg         smooth curve of genus g polarized in degree deg (P1 exact when g=0)

Line bundle coordinates follow the divisor basis of each variety: (t,) on cyclic entries (multiples of the
generator H, so O(h)=O(u)), (a1,a2) on flag3, (a1,a2,a3) on P1xP1xP1, (t,a) meaning t*h+a*f on scrolls and
(d,) on curves, where theta bundles carry a flag.
"""

import re

from chowRing import presetRing, integrate
from labErrors import UnknownVarietyError, DescriptorError


class VarietyCatalogEntry:
    def __init__(self, varietyId, kind, dimension, ringId, polarizationCoords, canonicalCoords, chiO, params=None):
        self.varietyId=varietyId
        self.kind=kind
        self.dimension=dimension
        self.ring=presetRing(ringId)
        self.polarizationCoords=tuple(polarizationCoords)
        self.canonicalCoords=tuple(canonicalCoords)
        self.chiO=chiO
        self.params=dict(params or {})

        self.polarization=self.ring.linear(self.polarizationCoords)
        self.canonical=self.ring.linear(self.canonicalCoords)
        self.c2Omega=None
        self.isACM=True
        self.fanoIndex=None
        self.cyclic=None
        assert self.degree()>0, "polarization must be ample"

    def __repr__(self):
        return "VarietyCatalogEntry("+self.varietyId+")"

    @property
    def picardRank(self):
        return len(self.polarizationCoords)

    @property
    def n(self):
        return self.dimension

    #h^n
    def degree(self):
        return integrate(self.polarization**self.dimension)

    def divisorClass(self, coords):
        if len(coords)!=self.picardRank:
            raise DescriptorError("expected "+str(self.picardRank)+" coordinates on "+self.varietyId+", got "+str(tuple(coords)))
        return self.ring.linear(coords)

    def lineBundle(self, *coords, theta=False):
        return LineBundleSpec(self.varietyId, coords, theta=theta)


class LineBundleSpec:
    def __init__(self, varietyId, coords, theta=False):
        self.varietyId=varietyId
        self.coords=tuple(int(c) for c in coords)
        self.theta=theta

    #O(L + t*h)
    def twist(self, variety, t):
        coords=tuple(c+t*p for c, p in zip(self.coords, variety.polarizationCoords))
        return LineBundleSpec(self.varietyId, coords, theta=self.theta)

    #L^vee((n+1)h+K), the Ulrich dual of a line bundle
    def ulrichDual(self, variety):
        n=variety.dimension
        coords=tuple(k+(n+1)*p-c for c, p, k in zip(self.coords, variety.polarizationCoords, variety.canonicalCoords))
        return LineBundleSpec(self.varietyId, coords, theta=self.theta)

    #K-L, the Serre dual
    def serreDual(self, variety):
        coords=tuple(k-c for c, k in zip(self.coords, variety.canonicalCoords))
        return LineBundleSpec(self.varietyId, coords, theta=self.theta)

    def __eq__(self, other):
        if not isinstance(other, LineBundleSpec):
            return NotImplemented
        return (self.varietyId, self.coords, self.theta)==(other.varietyId, other.coords, other.theta)

    def __hash__(self):
        return hash((self.varietyId, self.coords, self.theta))

    def __repr__(self):
        prefix="theta+" if self.theta else ""
        return "O("+prefix+",".join(str(c) for c in self.coords)+")"


def projectiveSpace(n, u=1):
    assert n>=1 and u>=1
    varietyId="p"+str(n)+("@"+str(u) if u!=1 else "")
    entry=VarietyCatalogEntry(varietyId, 'projective_space', n, "p"+str(n), (u,), (-(n+1),), 1, {"u": u})
    entry.cyclic={"u": u, "v": -(n+1)}
    if n==3:
        entry.c2Omega=6*entry.ring.gen("H")**2
        if u==1:
            entry.fanoIndex=4
    return entry


def quadric(n, u=1):
    assert n>=2 and u>=1
    varietyId="q"+str(n)+("@"+str(u) if u!=1 else "")
    entry=VarietyCatalogEntry(varietyId, 'quadric', n, "q"+str(n), (u,), (-n,), 1, {"u": u})
    entry.cyclic={"u": u, "v": -n}
    if n==3:
        entry.c2Omega=4*entry.ring.gen("H")**2
        if u==1:
            entry.fanoIndex=3
    return entry


def flag3():
    entry=VarietyCatalogEntry("flag3", 'flag3', 3, "flag3", (1, 1), (-2, -2), 1)
    h1=entry.ring.gen("h1")
    h2=entry.ring.gen("h2")
    entry.c2Omega=h1*h1+5*h1*h2+h2*h2
    entry.fanoIndex=2
    return entry


def tripleP1():
    entry=VarietyCatalogEntry("triple_p1", 'triple_p1', 3, "triple_p1", (1, 1, 1), (-2, -2, -2), 1)
    h1, h2, h3=(entry.ring.gen(name) for name in ("h1", "h2", "h3"))
    entry.c2Omega=4*(h1*h2+h1*h3+h2*h3)
    entry.fanoIndex=2
    return entry


#P(O(a_0)+...+O(a_{n-1})) over P1, K=-nh+(d-2)f
def scrollP1(degrees):
    degrees=tuple(sorted(int(a) for a in degrees))
    if len(degrees)<2 or degrees[0]<1:
        raise UnknownVarietyError("scroll over P1 needs at least two degrees, all >= 1")
    n=len(degrees)
    d=sum(degrees)
    varietyId="scroll-p1:"+",".join(str(a) for a in degrees)
    entry=VarietyCatalogEntry(varietyId, 'scroll_p1', n, "scroll"+str(n)+":"+str(d), (1, 0), (-n, d-2), 1,
        {"degrees": degrees, "genus": 0, "degG": d})
    if n==3:
        h=entry.ring.gen("h")
        f=entry.ring.gen("f")
        entry.c2Omega=3*h*h+(6-2*d)*h*f
    return entry


#scroll over a curve of genus g with h^n=degG, K=-nh+(degG+2g-2)f
def scrollGeneric(n, genus, degG):
    if n<2 or genus<0 or degG<1:
        raise UnknownVarietyError("invalid scroll data n="+str(n)+" g="+str(genus)+" deg="+str(degG))
    varietyId="scroll:"+str(n)+","+str(genus)+","+str(degG)
    entry=VarietyCatalogEntry(varietyId, 'scroll_generic', n, "scroll"+str(n)+":"+str(degG), (1, 0),
        (-n, degG+2*genus-2), 1-genus, {"genus": genus, "degG": degG})
    entry.isACM=(genus==0)
    if n==3:
        h=entry.ring.gen("h")
        f=entry.ring.gen("f")
        entry.c2Omega=3*h*h+(6-6*genus-2*degG)*h*f
    return entry


def curve(genus, degH=1):
    if genus<0 or degH<1:
        raise UnknownVarietyError("invalid curve data g="+str(genus)+" deg="+str(degH))
    varietyId="curve:"+str(genus)+":"+str(degH)
    model='exact_p1' if genus==0 else 'generic'
    entry=VarietyCatalogEntry(varietyId, 'curve', 1, "curve", (degH,), (2*genus-2,), 1-genus,
        {"genus": genus, "degH": degH, "model": model})
    entry.isACM=False
    return entry


def parseVariety(text):
    text=text.strip().lower()

    match=re.fullmatch(r"p(\d+)(?:@(\d+))?", text)
    if match:
        return projectiveSpace(int(match.group(1)), int(match.group(2) or 1))

    match=re.fullmatch(r"q(\d+)(?:@(\d+))?", text)
    if match:
        return quadric(int(match.group(1)), int(match.group(2) or 1))

    if text=="flag3":
        return flag3()

    if text in ("p1xp1xp1", "triple_p1"):
        return tripleP1()

    match=re.fullmatch(r"scroll-p1:(\d+(?:,\d+)+)", text)
    if match:
        return scrollP1([int(a) for a in match.group(1).split(",")])

    match=re.fullmatch(r"scroll:(\d+),(\d+),(\d+)", text)
    if match:
        return scrollGeneric(int(match.group(1)), int(match.group(2)), int(match.group(3)))

    match=re.fullmatch(r"curve:(\d+)(?::(\d+))?", text)
    if match:
        return curve(int(match.group(1)), int(match.group(2) or 1))

    raise UnknownVarietyError("unknown variety '"+text+"'")


def parseCoords(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise DescriptorError("bad coordinates '"+text+"'")


#one summand of a descriptor, without multiplicity
def parseSummand(variety, text):
    text=text.strip()

    if variety.kind=='curve' and text.startswith("theta"):
        genus=variety.params["genus"]
        rest=text[len("theta"):]
        if rest and not rest.startswith(":"):
            raise DescriptorError("bad theta summand '"+text+"'")
        j=parseCoords(rest[1:])[0] if rest else 0
        return LineBundleSpec(variety.varietyId, (genus-1+j*variety.params["degH"],), theta=True)

    if variety.kind in ('scroll_p1', 'scroll_generic'):
        if text.startswith("h:"):
            return LineBundleSpec(variety.varietyId, (parseCoords(text[2:])[0], 0))
        if text.startswith("f:"):
            return LineBundleSpec(variety.varietyId, (0, parseCoords(text[2:])[0]))

    if text=="O":
        return LineBundleSpec(variety.varietyId, (0,)*variety.picardRank)
    if text.startswith("O:"):
        text=text[2:]
    coords=parseCoords(text)
    variety.divisorClass(coords)
    return LineBundleSpec(variety.varietyId, coords)


#"2*O:1+O:0" -> [O(1), O(1), O(0)]
def parseBundle(variety, text):
    if not text or not text.strip():
        raise DescriptorError("empty bundle descriptor")
    bundles=[]
    for piece in text.split("+"):
        piece=piece.strip()
        mult=1
        if "*" in piece:
            multText, piece=piece.split("*", 1)
            try:
                mult=int(multText)
            except ValueError:
                raise DescriptorError("bad multiplicity '"+multText+"'")
            if mult<1:
                raise DescriptorError("multiplicity must be positive")
        summand=parseSummand(variety, piece)
        bundles.extend([summand]*mult)
    return bundles
