"""Points of the unital associahedra and their normal forms.

A point is a binary tree with a label in [0, 1] on each inner edge.  Zero
labels are rewritten away: inner edges contract, corks disappear.
"""
from fractions import Fraction
import random

from uassoc import points as pt

p = pt.LabeledPoint.parse("((l l) l)", ["0"])
print("((l l) l) with label 0  ->", pt.normal_form(p).to_dict())

# a cork next to an inner sibling: the two merged edges keep the larger label
q = pt.LabeledPoint.parse("(l (b (l l)))", ["1/3", "0", "1/2"])
print("cork deletion           ->", pt.normal_form(q).to_dict())

# both bracketings of three inputs agree once the middle edge is 0
a = pt.LabeledPoint.parse("((l l) l)", ["0"])
b = pt.LabeledPoint.parse("(l (l l))", ["0"])
print("equivalent:", pt.equivalent(a, b))

# composition grafts trees and puts label 1 on the new edge
x = pt.LabeledPoint.parse("((l l) (l (l l)))", ["1/2", "1/3", "1/4"])
y = pt.LabeledPoint.parse("(((l l) l) l)", ["1/5", "1/6"])
print("x o_3 y:", pt.compose_point(x, 3, y).to_dict())

# the rewriting order does not matter
rng = random.Random(0)
z = pt.random_point(rng, 3, 2, pool=[0, Fraction(1, 2), 1])
print("random point:", z.to_dict())
print("normal forms under 5 random schedules:",
      {str(pt.normal_form(z, rng=rng).to_dict()) for _ in range(5)})

# characteristic map of the cell with a black cork in position 1
print("top cell map:", pt.char_map_top([1], pt.LabeledPoint.parse("((l l) l)", ["1/2"]), ["1/4"]).to_dict())
