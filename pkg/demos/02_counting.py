"""
Counting fixed points and double points
=======================================

Brute-force censuses over all (n+1)! sequences of a generation, next to the
closed forms that predict them.
"""

from selfdescribing import (
    catalan,
    count_double_points_gamma,
    count_fixed_points_delta,
    name_distribution,
    name_distribution_closed,
)

###############################################################################
# Fixed points of delta in generation n number c_{n+1}.

print(" n  census  catalan(n+1)")
for n in range(10):
    print(f"{n:2d}  {count_fixed_points_delta(n):6d}  {catalan(n + 1):6d}")

###############################################################################
# Grouped by the last term r, the members of generation n split as c_r c_{n-r}.

n = 6
d = name_distribution(n)
print([d.counts[r] for r in range(n + 1)])
print([name_distribution_closed(n, r) for r in range(n + 1)])

###############################################################################
# gamma = mu . delta has no fixed points past the root, but many points of
# period 2.  No closed form is known for their number, so it is only
# counted here.

print([count_double_points_gamma(n) for n in range(10)])
