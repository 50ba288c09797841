"""
Permutations and shuffles
=========================

The product of k[S∞] sums over shuffles; its coproduct splits a permutation
by value. Forgetting levels sends each permutation to a tree.
"""

from lrtrees.linear import tensor_string
from lrtrees.perms import fiber, mr_coproduct, mr_star, parse_perm, perm, perm_to_tree, shuffles, split_at
from lrtrees.trees import enumerate_trees

print("shuffles of type (1,2):", [str(s) for s in shuffles(1, 2)])

cube = mr_star(mr_star(perm(1), perm(1)), perm(1))
print("(1)*(1)*(1) =", cube)

sigma = parse_perm("(3142)")
for i in range(5):
    left, right, w = split_at(sigma, i)
    print(f"split at {i}: {left} x {right}, shuffle {w}")
print("coproduct:", tensor_string(mr_coproduct(perm(3, 1, 4, 2))))

# permutations above each tree of order 3; (132) and (231) share a tree
for t in enumerate_trees(3):
    print(t, [str(s) for s in fiber(t)])
print(perm_to_tree(parse_perm("(132)")) == perm_to_tree(parse_perm("(231)")))
