"""
Counting Schröder trees three ways
==================================

The little Schröder numbers count plane trees whose internal nodes have at
least two children.  Here they are computed by brute enumeration, by a
convolution over well-weighted binary trees, and by the three-term recurrence.
"""

from schroeder.counting import catalan_closed_form, pointed_counts, schroeder_numbers_dp, schroeder_numbers_rec
from schroeder.enumeration import enumerate_schroeder, enumerate_well_weighted

# Enumerate the trees themselves for small sizes and count them.
by_listing = [sum(1 for _ in enumerate_schroeder(n)) for n in range(1, 9)]
print("listed Schröder trees  ", by_listing)

# The same numbers count well-weighted binary trees (weights 1 or 2 on
# internal nodes, and a weight-2 node never has a leaf as right son).
print("listed weighted trees  ", [sum(1 for _ in enumerate_well_weighted(n)) for n in range(1, 9)])

# Dynamic programming never builds a tree.
dp = schroeder_numbers_dp(30)
print("DP                     ", list(dp)[:8])

# The recurrence 3(2n-1) s(n) = (n+1) s(n+1) + (n-2) s(n-1) propagates the
# table from s(1) = s(2) = 1 with exact integer division.
rec = schroeder_numbers_rec(30)
print("recurrence agrees to 30:", rec.values == dp.values)
print("s(30) =", dp[30])

# Pointed trees carry one marked node.  Their counts are what make the
# recurrence bijective: both sides count the same set of labelled objects.
for n in (3, 4, 5):
    pt, lt, it = pointed_counts(n)
    print(f"n={n}: 3*PT={3 * pt} = LT(n+1) + IT(n-1) = {pointed_counts(n + 1)[1]} + {pointed_counts(n - 1)[2]}")

# For comparison, binary plane trees grow by the Catalan numbers.
print("Catalan", [catalan_closed_form(n) for n in range(1, 11)])
