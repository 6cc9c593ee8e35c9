"""
The pointed insertion map, case by case
=======================================

Each pointed tree with n leaves and each label in {L1, L2, R1} produce either
a leaf-pointed tree with n+1 leaves or an interior-pointed tree with n-1
leaves.  Labels L1 and R1 always insert a fresh leaf beside the pointed
subtree.  Label L2 does the same under a weight-2 node, and when the pointed
node is a leaf this needs repair.
"""

from schroeder.bijections import Label, classify_father_case, sigma, sigma_inverse, sigma_prime
from schroeder.text import TreeKind, parse_tree, serialize_tree


def show(label, text):
    p = parse_tree(text, TreeKind.POINTED)
    image = sigma(label, p)
    back = sigma_inverse(image)
    print(f"{label.value} {text:<18} {image.kind.value}: {serialize_tree(image.pointed):<24} "
          f"inverse ok: {back == (label, p)}")


# Plain insertions.
show(Label.L1, "(1 *' *)")
show(Label.R1, "(1 *' *)")
show(Label.L2, "(1' * *)")

# A raw L2 insertion at a leaf puts a leaf under a weight-2 node.
raw = sigma_prime(Label.L2, parse_tree("(1 *' *)", TreeKind.POINTED))
print("raw L2 at a leaf:", serialize_tree(raw))

# The father of the pointed leaf decides the repair.
for text in ("(1 (1 * *) *')", "(1 *' *)", "(2 *' (1 * *))"):
    case = classify_father_case(parse_tree(text, TreeKind.POINTED))
    print(case.name, end=": ")
    show(Label.L2, text)
