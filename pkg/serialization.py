"""
JSON and markdown rendering of tables, verdicts, monad shapes and reports.

Numbers are exact: integers stay integers and rationals are written as "p/q" strings. Tables, verdicts and
monad shapes parse back to equal objects (tableFromJson, verdictFromJson, shapeFromJson).

    table:   {"variety", "rank", "window": {"tmin", "tmax"}, "rows": [{"t", "h": [h^0,...,h^n]}], "chern", "assumptions"}
    verdict: {"admissible": [{"defect", "quantum"}], "ulrich", "wic", "natural", "notes"}
    chern:   {"ring", "rank", "c1", "c2", "c3"}, each class a list of {"monomial": exponents, "coefficient"}
"""

from fractions import Fraction
import json

import numpy as np

from chowRing import ChowClass, presetRing
from cohomology import CohomologyTable, CohVector
from instanton import InstantonVerdict
from labErrors import DescriptorError
from monads import MonadShape, MonadSummand
from riemannRoch import ChernData
from varieties import LineBundleSpec


def rationalToText(value):
    value=Fraction(value)
    if value.denominator==1:
        return value.numerator
    return str(value.numerator)+"/"+str(value.denominator)


def textToRational(value):
    if isinstance(value, int):
        return value
    try:
        value=Fraction(value)
    except (ValueError, TypeError):
        raise DescriptorError("not an exact number: "+repr(value))
    return value.numerator if value.denominator==1 else value


def keyToText(key):
    if isinstance(key, tuple):
        return ",".join(str(k) for k in key)
    return str(key)


#{"monomial": exponents, "coefficient": c} per normal monomial
def classToJson(c):
    return [{"monomial": list(exps), "coefficient": coeff} for exps, coeff in sorted(c.terms.items())]


def classFromJson(ring, terms):
    return ChowClass(ring, {tuple(term["monomial"]): term["coefficient"] for term in terms})


def chernToJson(c):
    return {
        "ring": c.ring.varietyId,
        "rank": c.rank,
        "c1": classToJson(c.c1),
        "c2": classToJson(c.c2),
        "c3": classToJson(c.c3),
        "text": {"c1": str(c.c1), "c2": str(c.c2), "c3": str(c.c3)},
    }


def chernFromJson(data):
    try:
        ring=presetRing(data["ring"])
        return ChernData(data["rank"], *(classFromJson(ring, data[name]) for name in ("c1", "c2", "c3")))
    except (KeyError, TypeError, ValueError) as e:
        raise DescriptorError("bad Chern data JSON: "+str(e))


def tableToJson(table):
    return {
        "variety": table.varietyId,
        "rank": table.rank,
        "window": {"tmin": table.tmin, "tmax": table.tmax},
        "rows": [{"t": t, "h": list(table.row(t))} for t in table.twists()],
        "chern": None if table.chern is None else chernToJson(table.chern),
        "assumptions": list(table.assumptions),
    }


def verdictToJson(verdict):
    return {
        "admissible": [{"defect": d, "quantum": q} for d, q in verdict.admissible],
        "ulrich": verdict.isUlrich,
        "wic": verdict.isWic,
        "natural": verdict.natural,
        "notes": list(verdict.notes),
    }


def summandToJson(s):
    return {"name": s.name, "twist": s.twist, "multiplicity": s.multiplicity, "rank": s.rank,
        "c1": None if s.c1 is None else rationalToText(s.c1)}


def shapeToJson(shape):
    return {
        "terms": [[summandToJson(s) for s in term] for term in shape.terms],
        "constraints": {k: toJsonable(v) for k, v in shape.constraints.items()},
        "notes": list(shape.notes),
    }


#anything the library returns, turned into plain JSON types
def toJsonable(obj):
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, Fraction):
        return rationalToText(obj)
    if isinstance(obj, CohomologyTable):
        return tableToJson(obj)
    if isinstance(obj, InstantonVerdict):
        return verdictToJson(obj)
    if isinstance(obj, MonadShape):
        return shapeToJson(obj)
    if isinstance(obj, ChernData):
        return chernToJson(obj)
    if isinstance(obj, CohVector):
        return list(obj)
    if isinstance(obj, (ChowClass, LineBundleSpec)):
        return str(obj)
    if isinstance(obj, dict):
        return {keyToText(k): toJsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [toJsonable(v) for v in obj]
    if hasattr(obj, "__dict__"):
        return {k: toJsonable(v) for k, v in vars(obj).items()}
    raise DescriptorError("cannot serialize "+type(obj).__name__)


def toJson(obj):
    return json.dumps(toJsonable(obj), indent=2)


def loadJson(data):
    if isinstance(data, str):
        try:
            return json.loads(data)
        except json.JSONDecodeError as e:
            raise DescriptorError("bad JSON: "+str(e))
    return data


def tableFromJson(data):
    data=loadJson(data)
    try:
        window=data["window"]
        rows={int(row["t"]): CohVector(row["h"]) for row in data["rows"]}
        chern=data.get("chern")
        if chern is not None:
            chern=chernFromJson(chern)
        return CohomologyTable(data["variety"], data["rank"], window["tmin"], window["tmax"], rows, chern, data.get("assumptions", []))
    except (KeyError, TypeError, ValueError) as e:
        raise DescriptorError("bad table JSON: "+str(e))


def verdictFromJson(data):
    data=loadJson(data)
    try:
        admissible=[(pair["defect"], pair["quantum"]) for pair in data["admissible"]]
        return InstantonVerdict(admissible, data["ulrich"], data["wic"], data["natural"], data.get("notes", []))
    except (KeyError, TypeError, ValueError) as e:
        raise DescriptorError("bad verdict JSON: "+str(e))


def shapeFromJson(data):
    data=loadJson(data)
    try:
        terms=[]
        for term in data["terms"]:
            terms.append([MonadSummand(s["name"], s["twist"], s["multiplicity"], s["rank"], None if s["c1"] is None else textToRational(s["c1"]))
                for s in term])
        constraints={k: textToRational(v) if isinstance(v, (int, str)) else v for k, v in data["constraints"].items()}
        return MonadShape(terms, constraints, data.get("notes", []))
    except (KeyError, TypeError, ValueError) as e:
        raise DescriptorError("bad monad JSON: "+str(e))


def tableToMarkdown(table):
    n=table.n
    string="| t |"
    for i in range(n+1):
        string+=" h^"+str(i)+" |"
    string+=" chi |\n|---|"+"---|"*(n+2)+"\n"
    for t in table.twists():
        string+="| "+str(t)+" |"
        for value in table.row(t):
            string+=" "+str(value)+" |"
        string+=" "+str(table.chi(t))+" |\n"
    return string


def verdictToMarkdown(verdict):
    string="| defect | quantum |\n|---|---|\n"
    for d, q in verdict.admissible:
        string+="| "+str(d)+" | "+str(q)+" |\n"
    string+="\n"
    string+="- instanton: "+str(verdict.isInstanton())+"\n"
    string+="- Ulrich: "+str(verdict.isUlrich)+"\n"
    string+="- no intermediate cohomology: "+str(verdict.isWic)+"\n"
    string+="- natural cohomology: "+str(verdict.natural)+"\n"
    for note in verdict.notes:
        string+="- note: "+note+"\n"
    return string


def shapeToMarkdown(shape):
    string="`"+repr(shape)+"`\n\n"
    if shape.constraints:
        string+="| constraint | value |\n|---|---|\n"
        for name, value in shape.constraints.items():
            string+="| "+name+" | "+str(toJsonable(value))+" |\n"
    for note in shape.notes:
        string+="\n- "+note
    return string


#generic key/value rendering for reports
def mappingToMarkdown(data):
    string="| key | value |\n|---|---|\n"
    for key, value in data.items():
        if isinstance(value, (dict, list)):
            value=json.dumps(value)
        string+="| "+str(key)+" | "+str(value)+" |\n"
    return string


def toMarkdown(obj):
    if isinstance(obj, CohomologyTable):
        return tableToMarkdown(obj)
    if isinstance(obj, InstantonVerdict):
        return verdictToMarkdown(obj)
    if isinstance(obj, MonadShape):
        return shapeToMarkdown(obj)
    data=toJsonable(obj)
    if isinstance(data, dict):
        return mappingToMarkdown(data)
    return str(data)+"\n"


def render(obj, fmt="json"):
    if fmt=="json":
        return toJson(obj)
    if fmt=="md":
        return toMarkdown(obj)
    raise DescriptorError("unknown output format "+str(fmt))
