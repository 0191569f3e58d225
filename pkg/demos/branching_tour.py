"""Explicit decompositions into irreducible modules of the subalgebra.

Run with ``python demos/branching_tour.py``.
"""

# %% Semisimple case: a finite sum of affine modules
from confembed import BranchingTable, find_subalgebra, finite_decomposition, graded_decomposition

table = finite_decomposition(find_subalgebra("F4", "B4"), "-5/2")
print(table.text())

# %% Tables survive a JSON round trip with exact rationals as strings
again = BranchingTable.from_json(table.to_json())
print("round trip identical:", again.text() == table.text())

# %% Center case: the decomposition is graded by the charge of the center
graded = graded_decomposition(find_subalgebra("A5", "A2xA2xZ"), "-1", 2)
print(graded.text())
