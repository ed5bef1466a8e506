"""
Self-describing sequences
=========================

A sequence is self-describing when every term equals the number of earlier
terms that are smaller than it.  ``delta`` rewrites a sequence into those
counts, so the self-describing sequences are exactly its fixed points.
"""

from selfdescribing import delta, enumerate_family, is_family_member, orbit, stabilize_delta

###############################################################################
# ``delta`` works on any non-negative sequence, and its image always lies in
# the domain A (0 <= a_i <= i).

print(delta((5, 3, 7)))
print(delta((0, 0, 1)))

###############################################################################
# Iterating delta never goes down in lexicographic order and stops at a
# fixed point.  For a sequence of generation n (length n+1) it takes at most
# n(n+1)/2 steps.

trace = orbit((0, 0, 0, 1, 0), "delta")
for step, s in enumerate(trace.visited):
    print(step, s)
print("fixed point", trace.terminal, "after", trace.steps_to_cycle, "steps")

###############################################################################
# The fixed points are also the members of the Catalan family tree, which
# is grown with naming rules alone, without ever calling delta.

for node in enumerate_family(3):
    print(node.full_name, "seniority", node.seniority, "->", node.child_names())

print(all(delta(x.full_name) == x.full_name for x in enumerate_family(6)))
print(is_family_member((0, 1, 1, 3)), stabilize_delta((0, 1, 1, 3)))
