"""
Planar binary trees
===================

Build trees by grafting, list them by order and count them.
"""

from lrtrees.trees import LEAF, catalan, enumerate_trees, graft, mirror, parse_tree

# the generator (1) is two leaves grafted onto a root vertex
gen = graft(LEAF, LEAF)
print("generator:", gen, "order", gen.order)

# trees print as nested parentheses and parse back
t = parse_tree("((||)(||))")
print("balanced tree:", t, "leaves", t.leaf_count)

# the five trees of order 3, sorted by their text form
for s in enumerate_trees(3):
    print("  ", s, "mirror:", mirror(s))

# how many trees of each order
for n in range(9):
    print(f"order {n}: {len(enumerate_trees(n))} trees, catalan {catalan(n)}")
