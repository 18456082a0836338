#Worked example: run from the repository root with
#   python docs/exampleImplementation.py flag3 -1,3
import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))

from cohomology import buildTable
from instanton import checkInstanton, chiPolynomial, regularityReport, ulrichDualTable
from labLogging import setupLogging
from serialization import tableToMarkdown, verdictToMarkdown
from varieties import parseVariety

#Set up argparser to allow for the variety and the bundle
parser = argparse.ArgumentParser(description='Instanton check of a direct sum of line bundles')
parser.add_argument('variety', type=str, help='variety string, e.g. p3, q3, flag3, p1xp1xp1, scroll-p1:1,1,2')
parser.add_argument('bundle', type=str, help='bundle descriptor, e.g. O:1 or -1,3')
parser.add_argument('-d', "--defect", help="defect used for the Ulrich dual and the regularity bound", type=int, default=0)
parser.add_argument('-o', "--output", help="csv file for the table", type=str, default="output.csv")
parser.add_argument('-l', "--log", help="1 debug, 2 info, 3 warning", type=int, default=3)

args=parser.parse_args()
setupLogging(args.log)

variety=parseVariety(args.variety)
n=variety.n

#one extra twist on each side so that the Ulrich dual can be formed
table=buildTable(variety, args.bundle, (-n-2, 2))
print(tableToMarkdown(table))

verdict=checkInstanton(table)
print(verdictToMarkdown(verdict))

for defect, quantum in verdict.admissible:
    #the table should follow the chi polynomial of its invariants
    chi0=table.chi(0)
    agrees=all(chiPolynomial(n, defect, quantum, chi0, t)==table.chi(t) for t in table.twists())
    print("defect "+str(defect)+": chi polynomial agrees with the table: "+str(agrees))

if verdict.quantum(args.defect) is not None:
    dual=ulrichDualTable(table, variety, args.defect)
    print("Ulrich dual:")
    print(verdictToMarkdown(checkInstanton(dual)))
    print(regularityReport(table, args.defect))

#one row per twist: t, h^0, ..., h^n
with open(args.output, 'w') as file:
    for t in table.twists():
        file.write(str(t)+", "+", ".join(str(x) for x in table.row(t))+"\n")
