"""
Irreducible representations of GL_n(F_q)
=========================================

Labels are maps from cuspidal symbols to partitions.  Their dimensions come
from the q-hook formula and are polynomials in q.
"""

from vistab import IOTA, CuspidalSymbol, IrrepLabel, dim, dim_at, enumerate_irreps
from vistab.irreps import cuspidal_count
from vistab.oracles import gl_order_at

# How many cuspidal symbols of each degree exist over F_3?
for d in range(1, 5):
    print(f"degree {d}: {cuspidal_count(d, 3)} cuspidals over F_3")

# The three irreducibles of GL_2(F_2)
for mu in enumerate_irreps(2, 2):
    print(f"{str(mu):16s} dim(q) = {dim(mu).format():10s} at q=2: {dim_at(mu, 2)}")

# A cuspidal of degree 2 together with a hook on iota
mu = IrrepLabel({IOTA: [2, 1], CuspidalSymbol(2, 0): [1]})
print(mu, "has dimension", dim(mu).format())

# Summing squared dimensions recovers the group order
for q in (2, 3, 4, 5):
    labels = enumerate_irreps(3, q)
    total = sum(dim_at(m, q) ** 2 for m in labels)
    print(f"q={q}: {len(labels)} irreducibles, sum of squares {total}, |GL_3| = {gl_order_at(3, q)}")
