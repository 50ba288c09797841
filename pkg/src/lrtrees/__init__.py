"""Planar binary trees, the Loday–Ronco Hopf algebra, loop graphs and a
symbolic check of the Eynard–Orantin topological recursion."""

from .hopf import (
    antipode,
    convolution_check,
    factor_through_fibers,
    star_power_generator,
    tree,
    tree_coproduct,
    tree_power_generator,
    tree_star,
)
from .linear import LinComb
from .loopgraphs import (
    LoopGraph,
    contract,
    enumerate_loop_graphs,
    generation_multiset,
    is_mirror_symmetric,
    parse_graph,
    ungraft,
    weight,
)
from .perms import Permutation, compose, cross, fiber, mr_coproduct, mr_star, perm_to_tree, shuffles, split_at
from .recursion import euler_char, expand_W, psi_term, rhs_recursion, verify_recursion
from .trees import LEAF, Tree, catalan, enumerate_trees, graft, mirror, parse_tree, root_decompose

__version__ = "0.1.0"
