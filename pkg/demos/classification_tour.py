"""Finite versus infinite decompositions at conformal levels.

Run with ``python demos/classification_tour.py``.
"""

# %% Semisimple subalgebras: only a handful of levels other than 1 decompose finitely
from confembed import classify, conformal_levels, enumerate_maximal

for ambient in ("B4", "C4", "F4", "G2", "E7"):
    for sub in enumerate_maximal(ambient):
        if sub.center_dim:
            continue
        for k in conformal_levels(sub):
            if k == 1:
                continue
            v = classify(sub, k)
            print(f"{ambient} > {sub.label:<8} k={str(k):<6} {v.verdict.value:<9} {v.justification.value}")

# %% An infinite case carries a nonvanishing singular-vector coefficient sequence
from confembed import find_subalgebra

v = classify(find_subalgebra("C5", "C2xC3"), "-7/2")
print(v.verdict.value, "witness:", [str(c) for c in v.witness[:5]], "...")
