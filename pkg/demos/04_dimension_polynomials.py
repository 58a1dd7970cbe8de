"""
Dimension polynomials
=====================

For large n, dim V_n = P(q^n).  The polynomial comes from the first-row hook
structure of each stable label.
"""

from vistab import IOTA, IrrepLabel, VIModuleSpec, dim_at, pad
from vistab import dim_polynomial_irrep, dim_polynomial_module

for q in (2, 3):
    lam = IrrepLabel({IOTA: [1]})
    p, onset = dim_polynomial_irrep(lam, q)
    print(f"q={q}: {lam} -> P(T) = {p.format('T')}  (from n = {onset})")
    for n in range(onset, onset + 4):
        print("   ", n, p(q**n), dim_at(pad(lam, n), q))

for gens in [(1,), (2,), (1, 1, 3)]:
    p, onset = dim_polynomial_module(VIModuleSpec(gens), 3)
    print(f"M{gens} over F_3: P(T) = {p.format('T')}, valid from n = {onset}")
