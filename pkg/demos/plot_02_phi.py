"""
From Schröder trees to weighted binary trees
============================================

A node with k children becomes a right comb of k-1 binary nodes.  All but
the last get weight 2, and the last gets weight 1.  The map preserves leaves
and is invertible.
"""

from schroeder.bijections import phi, phi_inverse
from schroeder.enumeration import enumerate_schroeder
from schroeder.render import to_ascii
from schroeder.text import TreeKind, parse_tree, serialize_tree

t = parse_tree("{* {* * *} *}", TreeKind.SCHROEDER)
w = phi(t)
print(serialize_tree(t), "->", serialize_tree(w))
print(to_ascii(w), end="")

# Going back recovers the original tree.
print("round trip:", phi_inverse(w) == t)

# The whole size-4 family, side by side.
for s in enumerate_schroeder(4):
    print(f"{serialize_tree(s):<16} {serialize_tree(phi(s))}")
