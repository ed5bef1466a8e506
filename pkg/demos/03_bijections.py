"""
Unit-increase sequences and ballot words
========================================

Sequences with a_{i+1} <= a_i + 1 form a tree with the same shape as the
Catalan family tree.  Each one encodes to a word of +1's and -1's whose
partial sums never go negative.
"""

import itertools

from selfdescribing import decode_ballot, encode_ballot, encode_ballot_m, enumerate_unit_increase
from selfdescribing.bijections import family_to_unit_increase, format_ballot, west_tree_labels
from selfdescribing.family import enumerate_family

for a in enumerate_unit_increase(3):
    w = encode_ballot(a)
    print(a, format_ballot(w), list(itertools.accumulate(w)), decode_ballot(w) == a)

###############################################################################
# Shifting every label by 2 gives a path in West's Catalan tree, where a
# vertex labelled x has children 2, ..., x+1.

print(west_tree_labels((0, 1, 1, 2)))

###############################################################################
# With m-increase, each step contributes a symbol of weight m.

print(format_ballot(encode_ballot_m((0, 2, 1, 3), 2), 2))

###############################################################################
# Walking both trees in the same shape pairs family members with
# unit-increase sequences.

for node in enumerate_family(3):
    print(node.full_name, "<->", family_to_unit_increase(node.full_name))
