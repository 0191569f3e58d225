"""Reference values transcribed from the literature, as parametric families.

Three kinds of data live here:

* conformal levels for every maximal equal-rank subalgebra, keyed by the
  removed node, with the values that only hold under a side condition;
* explicit branching rows for the finite cases, as text in the affine
  fundamental-weight notation used by :mod:`confembed.decomp`;
* the nontrivial conformal weights in V(theta) (x) V(-alpha_p) for the
  center cases with finite eigenspace decomposition.

The computation modules never read from this file; it exists for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .rootsys import LieType
from .subalg import subalgebra_name

F = Fraction


def _lt(family: str, rank: int) -> List[LieType]:
    """Ideal types for a possibly degenerate label (D2 = A1xA1, B1 = C1 = A1, B2 = C2)."""
    if rank <= 0:
        return []
    if family == "D" and rank == 1:
        raise ValueError("D1 is abelian")
    if family == "D" and rank == 2:
        return [LieType("A", 1), LieType("A", 1)]
    if family in "BC" and rank == 1:
        return [LieType("A", 1)]
    if family == "B" and rank == 2:
        return [LieType("C", 2)]
    return [LieType(family, rank)]


@dataclass(frozen=True)
class LevelRow:
    """One row of a conformal-level table, instantiated at a removed node."""

    ambient: LieType
    node: int
    name: str
    levels: Tuple[Fraction, ...]
    conditional: Tuple[Tuple[Fraction, bool, str], ...] = ()

    @property
    def expected_levels(self) -> Tuple[Fraction, ...]:
        vals = set(self.levels) | {v for v, ok, _ in self.conditional if ok}
        return tuple(sorted(vals))

    @property
    def expected_excluded(self) -> Tuple[Fraction, ...]:
        return tuple(sorted({v for v, ok, _ in self.conditional if not ok}))


def _row(g: LieType, node: int, types: Sequence[LieType], center: int, levels, conditional=()) -> LevelRow:
    return LevelRow(g, node, subalgebra_name(types, center), tuple(F(x) for x in levels),
                    tuple((F(v), ok, why) for v, ok, why in conditional))


_EXCEPTIONAL_LEVELS: Dict[str, Dict[int, Tuple[str, Tuple]]] = {
    "E6": {1: ("D5xZ", (1, -3)), 6: ("D5xZ", (1, -3)), 2: ("A1xA5", (1, -3)), 3: ("A1xA5", (1, -3)),
           5: ("A1xA5", (1, -3)), 4: ("A2xA2xA2", (1,))},
    "E7": {1: ("A1xD6", (1, -4)), 6: ("A1xD6", (1, -4)), 2: ("A7", (1,)), 3: ("A2xA5", (1, -4)),
           5: ("A2xA5", (1, -4)), 7: ("E6xZ", (1, -4))},
    "E8": {1: ("D8", (1,)), 2: ("A8", (1,)), 5: ("A4xA4", (1,)), 7: ("A2xE6", (1, -6)), 8: ("A1xE7", (1, -6))},
    "F4": {1: ("A1xC3", (1, F(-5, 2))), 2: ("A2xA2", (1, F(-5, 2))), 4: ("B4", (F(-5, 2),))},
    "G2": {2: ("A1xA1", (1, F(-5, 3))), 1: ("A2", (F(-5, 3),))},
}


def level_row(g, node: int) -> LevelRow:
    """Reference conformal levels for the subalgebra obtained by removing ``node``."""
    if isinstance(g, str):
        g = LieType.parse(g)
    fam, n = g.family, g.rank
    if fam == "A":
        if node in (1, n):
            lv = (1, F(-(n + 1), 2)) if n > 1 else (1,)
            return _row(g, node, _lt("A", n - 1), 1, lv)
        h = node - 1
        return _row(g, node, _lt("A", h) + _lt("A", n - h - 1), 1, (1, -1),
                    [(F(-(n + 1), 2), 2 * h != n - 1, "h != (n-1)/2")])
    if fam == "D":
        if node == 1:
            return _row(g, node, _lt("D", n - 1), 1, (1, 2 - n))
        if node in (n - 1, n):
            return _row(g, node, _lt("A", n - 1), 1, (1, -2))
        h = node
        return _row(g, node, _lt("D", h) + _lt("D", n - h), 0, (1,), [(2 - n, 2 * h != n, "h != n/2")])
    if fam == "C":
        if node == n:
            return _row(g, node, _lt("A", n - 1), 1, (1, F(-1, 2)))
        h = node
        return _row(g, node, _lt("C", h) + _lt("C", n - h), 0, (F(-1, 2),),
                    [(-1 - F(n, 2), 2 * h != n, "h != n/2")])
    if fam == "B" and n == 2:
        # B2 = C2 with the nodes exchanged
        row = level_row(LieType("C", 2), 3 - node)
        return LevelRow(g, node, row.name, row.levels, row.conditional)
    if fam == "B":
        if node == 1:
            # listed for n >= 4; at n = 3 it is the h = 1 member of the D_h x B_{n-h} row
            return _row(g, node, _lt("B", n - 1), 1, (1, F(3, 2) - n))
        if node == n:
            return _row(g, node, _lt("D", n), 0, (F(3, 2) - n,))
        h = node
        return _row(g, node, _lt("D", h) + _lt("B", n - h), 0, (1, F(3, 2) - n))
    table = _EXCEPTIONAL_LEVELS[str(g)]
    if node not in table:
        raise KeyError(f"{g} node {node} has composite mark; no table row")
    name, lv = table[node]
    return LevelRow(g, node, name, tuple(F(x) for x in lv))


# -- branching rows ------------------------------------------------------------


@dataclass(frozen=True)
class BranchingReference:
    family: str
    ambient: LieType
    subalgebra: str
    level: Fraction
    ideal_order: Tuple[str, ...]
    text: str
    note: str = ""


def _fr(x: Fraction) -> str:
    x = F(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _b(family, g, types: Sequence[str], level, text, note="") -> BranchingReference:
    g = LieType.parse(g) if isinstance(g, str) else g
    parsed = [LieType.parse(t) for t in types]
    return BranchingReference(family, g, subalgebra_name(parsed, 0), F(level), tuple(types), text, note)


def _spread(minimum: int) -> Tuple[int, int, int]:
    return (minimum, minimum + 1, minimum + 3)


VAC2 = "(L0, L0)"
VAC3 = "(L0, L0, L0)"
C_HALF = "(-1/2 L0, -1/2 L0) + (-3/2 L0 + L1, -3/2 L0 + L1)"


def branching_references() -> List[BranchingReference]:
    out: List[BranchingReference] = []
    # type D, level 1
    for n in _spread(8):
        for h in range(4, n - 3):
            out.append(_b("D_h x D_n-h", f"D{n}", [f"D{h}", f"D{n - h}"], 1, f"{VAC2} + (L1, L1)"))
    for n in _spread(6):
        out.append(_b("A1 x A1 x D_n-2", f"D{n}", ["A1", "A1", f"D{n - 2}"], 1, f"{VAC3} + (L1, L1, L1)"))
    out.append(_b("A1 x A1 x A3", "D5", ["A1", "A1", "A3"], 1, f"{VAC3} + (L1, L1, L2)"))
    out.append(_b("A1^4", "D4", ["A1"] * 4, 1, "(L0, L0, L0, L0) + (L1, L1, L1, L1)"))
    for n in _spread(7):
        out.append(_b("A3 x D_n-3", f"D{n}", ["A3", f"D{n - 3}"], 1, f"{VAC2} + (L2, L1)"))
    out.append(_b("A3 x A3", "D6", ["A3", "A3"], 1, f"{VAC2} + (L2, L2)"))
    # type B
    for n in _spread(7):
        for h in range(4, n - 2):
            out.append(_b("D_h x B_n-h", f"B{n}", [f"D{h}", f"B{n - h}"], 1, f"{VAC2} + (L1, L1)"))
    for n in _spread(6):
        out.append(_b("A3 x B_n-3", f"B{n}", ["A3", f"B{n - 3}"], 1, f"{VAC2} + (L2, L1)"))
    for n in _spread(5):
        out.append(_b("A1 x A1 x B_n-2", f"B{n}", ["A1", "A1", f"B{n - 2}"], 1, f"{VAC3} + (L1, L1, L1)"))
    for n in _spread(6):
        out.append(_b("D_n-2 x C2", f"B{n}", [f"D{n - 2}", "C2"], 1, f"{VAC2} + (L1, L2)"))
    out.append(_b("A1 x A1 x C2", "B4", ["A1", "A1", "C2"], 1, f"{VAC3} + (L1, L1, L2)"))
    out.append(_b("A3 x C2", "B5", ["A3", "C2"], 1, f"{VAC2} + (L2, L2)"))
    for n in _spread(5):
        out.append(_b("D_n-1 x A1", f"B{n}", [f"D{n - 1}", "A1"], 1, "(L0, 2 L0) + (L1, 2 L1)"))
    out.append(_b("A1 x A1 x A1", "B3", ["A1", "A1", "A1"], 1, "(L0, L0, 2 L0) + (L1, L1, 2 L1)",
                  "source row has a period in place of the second comma"))
    out.append(_b("A3 x A1", "B4", ["A3", "A1"], 1, "(L0, 2 L0) + (L2, 2 L1)"))
    for n in _spread(4):
        k = F(3, 2) - n
        out.append(_b("D_n", f"B{n}", [f"D{n}"], k, f"({_fr(k)} L0) + ({_fr(k - 1)} L0 + L1)"))
    out.append(_b("A3 (n = 3)", "B3", ["A3"], F(-3, 2), "(-3/2 L0) + (-5/2 L0 + L1)"))
    # type C, level -1/2
    for n in _spread(4):
        for h in range(2, n - 1):
            out.append(_b("C_h x C_n-h", f"C{n}", [f"C{h}", f"C{n - h}"], F(-1, 2), C_HALF))
    for n in _spread(3):
        out.append(_b("A1 x C_n-1", f"C{n}", ["A1", f"C{n - 1}"], F(-1, 2), C_HALF))
    out.append(_b("A1 x A1", "C2", ["A1", "A1"], F(-1, 2), C_HALF))
    # exceptional
    out += [
        _b("E6", "E6", ["A1", "A5"], 1, f"{VAC2} + (L1, L3)"),
        _b("E6", "E6", ["A2", "A2", "A2"], 1, f"{VAC3} + (L1, L1, L1) + (L2, L2, L2)"),
        _b("E7", "E7", ["A1", "D6"], 1, f"{VAC2} + (L1, L6)"),
        _b("E7", "E7", ["A2", "A5"], 1, f"{VAC2} + (L1, L4) + (L2, L2)"),
        _b("E7", "E7", ["A7"], 1, "(L0) + (L4)"),
        _b("E8", "E8", ["A1", "E7"], 1, f"{VAC2} + (L1, L7)"),
        _b("E8", "E8", ["A2", "E6"], 1, f"{VAC2} + (L2, L1) + (L1, L6)"),
        _b("E8", "E8", ["A4", "A4"], 1, f"{VAC2} + (L4, L2) + (L1, L3) + (L2, L4) + (L3, L1)"),
        _b("E8", "E8", ["D8"], 1, "(L0) + (L7)"),
        _b("E8", "E8", ["A8"], 1, "(L0) + (L6) + (L3)"),
        _b("F4", "F4", ["A1", "C3"], 1, f"{VAC2} + (L1, L3)"),
        _b("F4", "F4", ["A2", "A2"], 1, "(L0, 2 L0) + (L2, 2 L1) + (L1, 2 L2)"),
        _b("F4", "F4", ["B4"], F(-5, 2), "(-5/2 L0) + (-7/2 L0 + L4)"),
        _b("G2", "G2", ["A1", "A1"], 1, "(L0, L0) + (L1, 3 L1)"),
        _b("G2", "G2", ["A2"], F(-5, 3), "(-5/3 L0) + (-8/3 L0 + L1) + (-8/3 L0 + L2)"),
    ]
    return out


# -- residual conformal weights in the center cases ---------------------------


@dataclass(frozen=True)
class ResidualReference:
    case: int
    ambient: LieType
    node: int
    level: Fraction
    deltas: Tuple[Fraction, ...] = field(default=())


def residual_references() -> List[ResidualReference]:
    out: List[ResidualReference] = []
    for n in _spread(6):
        for h in range(3, n - 1):
            a, b = F(1, h - 1), F(1, n - h)
            out.append(ResidualReference(1, LieType("A", n), h, F(-1), (1 + a, 1 + b, 2 + a + b)))
    for n in _spread(4):
        out.append(ResidualReference(2, LieType("A", n), 1, F(-(n + 1), 2), (2 + F(2, n - 1),)))
    for n in _spread(5):
        out.append(ResidualReference(3, LieType("D", n), n, F(-2), (1 + F(2, n - 2), 2 + F(2, n - 2))))
    for n in _spread(4):
        out.append(ResidualReference(4, LieType("C", n), n, F(-1, 2), (1 + F(1, n - 1), 2 + F(2, n - 1))))
    out.append(ResidualReference(5, LieType("E", 6), 1, F(-3), (F(8, 5), F(12, 5))))
    out.append(ResidualReference(6, LieType("E", 7), 7, F(-4), (F(3, 2), F(9, 4))))
    return out


# -- the finite semisimple cases at levels other than 1 ------------------------


def expected_semisimple_finite(g: LieType, node: int, k: Fraction) -> Optional[bool]:
    """True for the four finite families, False for other semisimple pairs, None if not semisimple."""
    fam, n = g.family, g.rank
    row = level_row(g, node)
    if row.name.endswith("Z"):
        return None
    if fam == "B" and n == 2:
        fam, node = "C", 3 - node
    if fam == "C" and node < n and k == F(-1, 2):
        return True
    if fam == "B" and node == n and k == F(3, 2) - n:
        return True
    if str(g) == "G2" and node == 1 and k == F(-5, 3):
        return True
    if str(g) == "F4" and node == 4 and k == F(-5, 2):
        return True
    return False
