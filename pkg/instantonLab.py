import argparse
import sys

import classify
from cohomology import buildTable
import instanton
from instanton import checkInstanton
from labConfig import CliConfig
from labErrors import InstantonLabError, DescriptorError
from labLogging import getLogger, setupLogging
import monads
import riemannRoch
from serialization import render, tableFromJson
from varieties import parseBundle, parseVariety

logger=getLogger('cli')

#exit codes
OK=0
NEGATIVE=1
INPUT_ERROR=2


def buildParser():
    #flags every subcommand understands
    common=argparse.ArgumentParser(add_help=False)
    output=common.add_mutually_exclusive_group()
    output.add_argument("--json", help="JSON output (default)", action='store_true', default=False)
    output.add_argument("--md", help="markdown output", action='store_true', default=False)
    common.add_argument("--box", help="enumeration box (default $INSTANTON_LAB_BOX or 6)", type=int, default=None)
    common.add_argument("--window", help="twist window tmin:tmax", type=str, default=None)
    common.add_argument("--jobs", help="worker processes for enumerations", type=int, default=1)
    common.add_argument("-v", "--verbose", help="more logging, repeatable", action='count', default=0)

    parser=argparse.ArgumentParser(description='Cohomology tables and instanton sheaves on polarized varieties')
    sub=parser.add_subparsers(dest="command", required=True)

    p=sub.add_parser("cohom", parents=[common], help="cohomology table of a direct sum of line bundles")
    p.add_argument("--variety", required=True, type=str)
    p.add_argument("--bundle", required=True, type=str, help="e.g. O:2, 2*O+O:1, -1,3, h:1+f:-1")

    p=sub.add_parser("check", parents=[common], help="instanton verdict of a table")
    p.add_argument("--variety", type=str)
    p.add_argument("--bundle", type=str)
    p.add_argument("--table", type=str, help="JSON file written by cohom --json")

    p=sub.add_parser("chi", parents=[common], help="chi polynomial, rank and Chern classes of an instanton")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--defect", type=int, default=0, choices=[0, 1])
    p.add_argument("--quantum", required=True, type=int)
    p.add_argument("--chi0", required=True, type=int)
    p.add_argument("--chern", help="also expand the Chern polynomial on P^n", action='store_true', default=False)

    p=sub.add_parser("monad", parents=[common], help="monad shapes")
    p.add_argument("kind", choices=["pn", "quadric", "space-nonordinary", "quadric-nonordinary", "acm", "scroll"])
    p.add_argument("--n", type=int)
    p.add_argument("--defect", type=int, default=0, choices=[0, 1])
    p.add_argument("--rank", type=int)
    p.add_argument("--quantum", type=int)
    p.add_argument("--h0", type=int, help="h^0(E) for non-ordinary monads on P^n")
    p.add_argument("--hn", type=int, help="h^n(E(-n)) for non-ordinary monads on P^n")
    p.add_argument("--h1", type=int, help="h^1(E) for monads on aCM varieties")
    p.add_argument("--hn1", type=int, help="h^(n-1)(E(-nh)) for monads on aCM varieties")
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--variety", type=str)
    p.add_argument("--bundle", type=str)

    p=sub.add_parser("classify", parents=[common], help="classification of instanton line bundles")
    p.add_argument("kind", choices=["flag", "segre", "cyclic"])
    p.add_argument("--defect", type=int, default=0, choices=[0, 1])
    p.add_argument("--n", type=int)
    p.add_argument("--u", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--not-effective", help="the ample generator has no sections", action='store_true', default=False)

    p=sub.add_parser("stability", parents=[common], help="stability of rank two instantons on cyclic varieties")
    p.add_argument("--n", type=int)
    p.add_argument("--u", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--defect", type=int, default=0, choices=[0, 1])
    p.add_argument("--variety", type=str)
    p.add_argument("--c1", type=int, help="c1 as a multiple of the generator")
    p.add_argument("--h0-norm", type=int)
    p.add_argument("--h0-norm-minus", type=int)

    p=sub.add_parser("scroll", parents=[common], help="Serre construction on a scroll")
    p.add_argument("--degrees", type=str, help="scroll over P1, e.g. 1,1,2")
    p.add_argument("--variety", type=str, help="any scroll entry, e.g. scroll:3,1,4")
    p.add_argument("--k", required=True, type=int)

    p=sub.add_parser("fano", parents=[common], help="instantons against classical instantons on Fano threefolds")
    p.add_argument("--index", required=True, type=int)
    p.add_argument("--defect", type=int, default=0, choices=[0, 1])
    p.add_argument("--eps", type=int, default=0, choices=[0, 1])
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--genus", type=int, help="genus of a prime Fano threefold (index 1)")
    p.add_argument("--k", type=int, default=0)

    p=sub.add_parser("resolution-check", parents=[common], help="regularity and Betti table shape")
    p.add_argument("--variety", required=True, type=str)
    p.add_argument("--bundle", required=True, type=str)
    p.add_argument("--defect", type=int, default=0, choices=[0, 1])
    p.add_argument("--betti", type=str, help="p,i,b;p,i,b;...")
    p.add_argument("--v", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--N", type=int)

    p=sub.add_parser("veronese", parents=[common], help="quantum number from Ulrich bundles on Veronese embeddings")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--hn", type=int, default=1)

    p=sub.add_parser("example", parents=[common], help="numerical side of the rank two constructions")
    p.add_argument("kind", choices=["segre-stable", "extension", "mukai", "genus0"])
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--family", choices=["flag", "segre"], default="flag")
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--defect", type=int, default=0, choices=[0, 1])
    p.add_argument("--invariants", type=str, help="comma separated invariants of the surface construction")
    return parser


def need(args, *names):
    missing=[name for name in names if getattr(args, name.replace("-", "_"), None) is None]
    if missing:
        raise DescriptorError(args.command+" needs --"+", --".join(missing))


def tableFromArgs(args, config):
    need(args, "variety", "bundle")
    variety=parseVariety(args.variety)
    return variety, buildTable(variety, args.bundle, config.window)


def cmdCohom(args, config):
    _, table=tableFromArgs(args, config)
    return table, OK


def cmdCheck(args, config):
    if args.table is not None:
        with open(args.table) as file:
            table=tableFromJson(file.read())
        if config.window is not None:
            table=table.restricted(*config.window)
    else:
        _, table=tableFromArgs(args, config)
    verdict=checkInstanton(table)
    return verdict, OK if verdict.isInstanton() else NEGATIVE


def cmdChi(args, config):
    n=args.n
    tmin, tmax=config.window if config.window is not None else (-n-1, 2)
    result={
        "chi": {t: instanton.chiPolynomial(n, args.defect, args.quantum, args.chi0, t) for t in range(tmin, tmax+1)},
        "rank": instanton.rankFromChi(n, args.defect, args.quantum, args.chi0),
    }
    if args.chern:
        rank=result["rank"]
        result["chernSeries"]=riemannRoch.chernPolyInstantonPn(n, rank, args.defect, args.quantum)
        result["chernClosedForm"]=riemannRoch.chernPnClosedForm(n, rank, args.defect, args.quantum)
    return result, OK


def cmdMonad(args, config):
    kind=args.kind
    if kind=="pn":
        need(args, "n", "rank", "quantum")
        chi0=instanton.chiFromRank(args.n, args.defect, args.quantum, args.rank)
        return monads.monadPn(args.n, args.defect, args.quantum, chi0, args.h0, args.hn), OK
    if kind=="quadric":
        need(args, "n", "rank", "quantum")
        return monads.monadQuadricOrdinary(args.n, args.rank, args.quantum), OK
    if kind=="space-nonordinary":
        need(args, "n", "rank", "quantum")
        return monads.monadSpaceNonordinary(args.n, args.rank, args.quantum, args.a, args.c), OK
    if kind=="quadric-nonordinary":
        need(args, "n", "rank", "quantum")
        return monads.monadQuadricNonordinary(args.n, args.rank, args.quantum, args.a, args.c, args.b), OK
    if kind=="acm":
        need(args, "variety", "quantum", "h1", "hn1")
        variety=parseVariety(args.variety)
        return monads.monadAcm(variety, args.defect, args.quantum, args.h1, args.hn1, args.rank), OK

    variety, table=tableFromArgs(args, config)
    verdict=checkInstanton(table)
    quantum=verdict.quantum(0)
    if quantum is None:
        raise DescriptorError("the scroll monads are for ordinary instantons; "+args.bundle+" is not one")
    bundles=parseBundle(variety, args.bundle)
    inputs=monads.scrollMonadInputs(variety, bundles)
    if variety.n==3:
        return monads.monadScroll3(variety.params["degG"], table.rank, quantum, inputs, variety.params.get("degrees")), OK
    return monads.monadP1P3(table.rank, quantum, inputs), OK


def cmdClassify(args, config):
    if args.kind=="flag":
        report=classify.classifyFlagLines(config.box, args.defect, config.jobs)
    elif args.kind=="segre":
        report=classify.classifySegreLines(config.box, args.defect, config.jobs)
    else:
        need(args, "n", "u", "v")
        decision=classify.classifyCyclicLines(args.n, args.u, args.v, args.defect, not args.not_effective)
        return decision, OK
    return report, NEGATIVE if report.agreement=="mismatch" else OK


def cmdStability(args, config):
    if args.h0_norm is not None:
        need(args, "variety", "c1", "h0-norm-minus")
        variety=parseVariety(args.variety)
        c=riemannRoch.ChernData(2, variety.divisorClass((args.c1,)))
        return classify.hoppeRank2(variety, c, args.h0_norm, args.h0_norm_minus), OK
    need(args, "n", "u", "v")
    return classify.cyclicRank2StabilityCases(args.n, args.u, args.v, args.defect), OK


def cmdScroll(args, config):
    if args.degrees is not None:
        scroll=tuple(int(a) for a in args.degrees.split(","))
    else:
        need(args, "variety")
        scroll=args.variety
    return classify.scrollConstructionReport(scroll, args.k), OK


def cmdFano(args, config):
    result={
        "bridge": classify.fanoInstantonBridge(args.index, args.defect, args.eps),
        "c1": riemannRoch.fanoChernC1(args.index, args.rank, args.defect),
    }
    if args.genus is not None:
        if args.index!=1:
            raise DescriptorError("--genus describes prime Fano threefolds, which have index 1")
        result["primeFamily"]=classify.primeFanoFamily(args.genus, args.k)
    return result, OK


def parseBetti(text):
    beta={}
    try:
        for entry in text.split(";"):
            p, i, b=(int(x) for x in entry.split(","))
            beta[(p, i)]=b
    except ValueError:
        raise DescriptorError("Betti entries must look like p,i,b;p,i,b, got '"+text+"'")
    return beta


def cmdResolution(args, config):
    _, table=tableFromArgs(args, config)
    report=instanton.regularityReport(table, args.defect)
    result={"regularity": report, "regular": not report.violations}
    ok=not report.violations
    if args.betti is not None:
        need(args, "v", "w", "N")
        shape=instanton.BettiShape(args.v, args.w, args.N, parseBetti(args.betti))
        probe=[t for t in range(-args.N-1, 1) if table.hasTwist(t)]
        result["bettiShape"]=instanton.bettiShapeCheck(shape, table.chi, probe)
        ok=ok and result["bettiShape"]
    return result, OK if ok else NEGATIVE


def cmdVeronese(args, config):
    return {"quantum": instanton.veroneseQuantum(args.n, args.rank, args.d, args.hn)}, OK


def cmdExample(args, config):
    if args.kind=="segre-stable":
        return classify.segreStableExample(args.s), OK
    if args.kind=="extension":
        return classify.extensionFamilies(args.family, args.a, args.b, args.defect), OK
    need(args, "invariants")
    try:
        invariants=tuple(int(x) for x in args.invariants.split(","))
    except ValueError:
        raise DescriptorError("invariants must be integers, got '"+args.invariants+"'")
    if len(invariants)!=5:
        raise DescriptorError(args.kind+" needs five invariants")
    return {"quantum": classify.surfaceQuantumFormulas(args.kind, invariants)}, OK


COMMANDS={
    "cohom": cmdCohom,
    "check": cmdCheck,
    "chi": cmdChi,
    "monad": cmdMonad,
    "classify": cmdClassify,
    "stability": cmdStability,
    "scroll": cmdScroll,
    "fano": cmdFano,
    "resolution-check": cmdResolution,
    "veronese": cmdVeronese,
    "example": cmdExample,
}


def main(argv=None):
    args=buildParser().parse_args(argv)
    try:
        config=CliConfig.fromArgs(args)
        setupLogging(config.verbosity)
        result, status=COMMANDS[args.command](args, config)
        print(render(result, config.fmt))
        return status
    except InstantonLabError as e:
        print("error: "+str(e), file=sys.stderr)
        return INPUT_ERROR
    except OSError as e:
        print("error: "+str(e), file=sys.stderr)
        return INPUT_ERROR


if __name__=="__main__":
    sys.exit(main())
