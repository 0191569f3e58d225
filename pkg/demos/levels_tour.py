"""Tour of conformal levels: build a subalgebra, solve for its levels, confirm them.

Run with ``python demos/levels_tour.py``.
"""

# %% Central charges of an ambient algebra and of a maximal subalgebra
from fractions import Fraction

from confembed import (
    build_root_datum,
    central_charge,
    conformal_levels,
    enumerate_maximal,
    find_subalgebra,
    verify_numcheck,
)

g2 = build_root_datum("G2")
print("G2: dim", g2.dim, "dual Coxeter", g2.dual_coxeter)
print("c(G2, k=-5/3) =", central_charge("G2", Fraction(-5, 3)))

# %% Every maximal equal-rank subalgebra of E8 with its conformal levels
for sub in enumerate_maximal("E8"):
    levels = ", ".join(str(k) for k in conformal_levels(sub))
    print(f"E8 > {sub.label:<10} levels {levels}")

# %% The levels are exactly where every component of p has conformal weight one
sub = find_subalgebra("G2", "A2")
for k in (Fraction(-5, 3), Fraction(1), Fraction(2)):
    report = verify_numcheck(sub, k)
    print(f"k = {k}: weights {[str(v) for _, v in report.values]} conformal={report.conformal}")
