"""
The Hopf algebra of trees
=========================

Star product, coproduct and antipode on trees, and the two ways of taking
powers of the generator.
"""

from lrtrees.hopf import (
    GENERATOR,
    antipode,
    convolution_check,
    star_power_generator,
    tree,
    tree_coproduct,
    tree_power_generator,
    tree_star,
)
from lrtrees.linear import tensor_string

g = tree(GENERATOR)
print("(1)*(1) =", tree_star(g, g))

# inside k[Y∞] the n-th power is the plain sum of all trees of order n
print("(1)^3 in trees:", tree_power_generator(3))
# pushing the power from k[S∞] down to trees counts permutations instead
p3 = star_power_generator(3)
print("(1)^3 projected:", p3, "sum", p3.coefficient_sum())

print("coproduct of ((||)|):", tensor_string(tree_coproduct(tree("((||)|)"))))
print("S((1)) =", antipode(g))
print("S(((||)|)) =", antipode(tree("((||)|)")))
for n in range(5):
    x = tree_power_generator(n)
    print(f"S((1)^{n}) == (-1)^{n} (1)^{n}:", antipode(x) == x * (-1) ** n)

print("antipode is a convolution inverse up to order 6:", convolution_check(6))
