"""
Loop graphs
===========

Join neighbouring free leaves of a tree to raise the genus, then look at
mirror symmetry, weights and ungrafting.
"""

from lrtrees.loopgraphs import (
    LoopGraph,
    contract,
    enumerate_loop_graphs,
    first_summand_analysis,
    generation_multiset,
    is_mirror_symmetric,
    root_bridge,
    ungraft,
    weight,
)
from lrtrees.trees import parse_tree

comb = LoopGraph(parse_tree("(((||)|)|)"))
once = contract(comb, 0)
print("contract leaves 0,1:", once)
print("then the next two:", contract(once, 0))
print("a loop in the way gives nothing:", contract(LoopGraph(comb.base, ((1, 2),)), 0))

for n, g in [(1, 1), (2, 1), (3, 1), (3, 2), (5, 3)]:
    print(f"order {n}, genus {g}: {len(enumerate_loop_graphs(n, g))} graphs")

print("genus-2 graphs of order 3:")
for x in enumerate_loop_graphs(3, 2):
    print("  ", x, "symmetric" if is_mirror_symmetric(x) else "")

print("weights in genus 1, order 3:")
for x in enumerate_loop_graphs(3, 1):
    if root_bridge(x):
        print("  ", x, "weight", weight(x), "ungrafts to", ungraft(x))

ms = generation_multiset(4, 2)
print("generation multiset, order 4 genus 2:", sorted(set(ms.values())), "copies each")

rows = first_summand_analysis(1, 3)
for r in rows:
    print("  ", r.graph, "symmetric", r.symmetric, "orientations", r.multiplicity)
