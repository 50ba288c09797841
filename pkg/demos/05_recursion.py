"""
Checking the recursion
======================

Expand a correlator as a sum over graphs, build the right-hand side of the
recursion one level deep and compare the two.
"""

from lrtrees.loopgraphs import LoopGraph
from lrtrees.recursion import acceptance_cases, expand_W, psi_term, rhs_recursion, verify_recursion
from lrtrees.trees import parse_tree

print(psi_term(parse_tree("(||)"), ["p1", "p2"]))
print(psi_term(LoopGraph(parse_tree("(||)"), ((0, 1),)), []))

print("W^1_2 from graphs:")
print(expand_W(1, 2).to_string())
print("W^1_2 from the recursion:")
print(rhs_recursion(1, 2).to_string())

for g, k in acceptance_cases(5):
    r = verify_recursion(g, k)
    print(
        f"W^{g}_{k}: equal={r.equal} classes={r.classes} "
        f"graph terms={r.lhs_terms} recursion terms={r.rhs_terms} same counts={r.multiplicity_equal}"
    )
