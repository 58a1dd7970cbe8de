"""
Stable multiplicities of free VI-modules
========================================

Decompose M(m)_n level by level, strip the first iota row off every label and
watch the multiplicities freeze.
"""

from vistab import VIModuleSpec, module_level, stable_multiplicities, vr_dim
from vistab.vimodules import injection_count_formula, multiplicities_at

spec = VIModuleSpec((2,))
q = 2

for n in range(2, 9):
    mults = multiplicities_at(spec, n, q)
    pretty = ", ".join(f"{lam}:{c}" for lam, c in mults.items())
    print(f"n={n}: {pretty}")

report = stable_multiplicities(spec, q)
print("onset", report.onset, "weight", report.weight)

# Dimensions agree with counting injective maps F_q^2 -> F_q^n
for n in range(2, 7):
    print(n, vr_dim(module_level(spec, n, q), q), injection_count_formula(2, n, q))

# Mixed generators
report = stable_multiplicities(VIModuleSpec((0, 1, 3)), 3)
print(len(report.stable_multiplicities), "stable labels; weight", report.weight)
