"""
Inducing with trivial representations, and taking invariants
============================================================

Both operations only move boxes on the iota partition: induction adds a
horizontal strip, invariants remove one.
"""

from vistab import IOTA, IrrepLabel, Partition, VirtualRep, add_horizontal_strip
from vistab import h_invariants, times_trivial, vr_dim
from vistab.oracles import complete_homogeneous, schur_expand, schur_poly

lam = Partition([2, 1])
print("strips added to", lam, ":", add_horizontal_strip(lam, 2))

# The same answer from brute-force tableau expansion of s_(2,1) * h_2
print("tableau oracle:", schur_expand(schur_poly(lam, 5) * complete_homogeneous(2, 5)))

# Induction of an irreducible of GL_1 up to GL_3
v = VirtualRep.irreducible(IrrepLabel({IOTA: [1]}))
w = times_trivial(v, 2)
print(w)
for q in (2, 3):
    print(f"  dimension at q={q}: {vr_dim(w, q)}")

# Invariants bring us back down: the original label reappears exactly once
print(h_invariants(VirtualRep.irreducible(IrrepLabel({IOTA: [2, 1]})), 1))
