"""Explicit branching of V_k(g) into irreducible modules of the affine subalgebra.

A classical weight mu on an ideal at level l is written in affine fundamental
weights as (l - <mu, theta^vee>) L0 + sum_i mu_i Li, e.g. "(-8/3 L0 + L1)".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .findec import Justification, Verdict, classify
from .rootsys import LieType, build_root_datum
from .subalg import EqualRankSubalgebra, G0Weight, SubalgebraError

CONTINUATION = "..."


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip().replace("−", "-"))


@dataclass(frozen=True)
class AffineBlock:
    """Affine weight on one ideal: coefficient of L0 and the classical labels."""

    level: Fraction
    labels: Tuple[int, ...]
    lie_type: LieType

    @property
    def l0(self) -> Fraction:
        comarks = build_root_datum(self.lie_type).comarks
        return self.level - sum(c * a for c, a in zip(comarks, self.labels))

    def coefficients(self) -> Tuple[Fraction, ...]:
        return (self.l0,) + tuple(Fraction(a) for a in self.labels)

    def text(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients()):
            if c == 0:
                continue
            if c == 1:
                terms.append(f"L{i}")
            elif c == -1:
                terms.append(f"-L{i}")
            else:
                terms.append(f"{fmt_rational(c)} L{i}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class BranchingRow:
    blocks: Tuple[AffineBlock, ...]
    charge: Optional[Fraction] = None

    def text(self) -> str:
        return "(" + ", ".join(b.text() for b in self.blocks) + ")"


def _row(sub: EqualRankSubalgebra, w: G0Weight, k: Fraction, order: Sequence[int]) -> BranchingRow:
    blocks = tuple(
        AffineBlock(sub.ideals[j].index * k, tuple(int(a) for a in w.blocks[j]), sub.ideals[j].lie_type)
        for j in order
    )
    return BranchingRow(blocks, w.charge if sub.center_dim else None)


@dataclass(frozen=True)
class BranchingTable:
    ambient: LieType
    subalgebra: str
    level: Fraction
    ideal_types: Tuple[LieType, ...]
    ideal_levels: Tuple[Fraction, ...]
    rows: Tuple[BranchingRow, ...]

    def text(self) -> str:
        return " + ".join(r.text() for r in self.rows)

    def to_json(self) -> dict:
        return {
            "ambient": str(self.ambient),
            "subalgebra": self.subalgebra,
            "level": fmt_rational(self.level),
            "ideals": [str(t) for t in self.ideal_types],
            "rows": [
                {
                    "ideal_blocks": [[fmt_rational(c) for c in b.coefficients()] for b in r.blocks],
                    "center_charge": None if r.charge is None else fmt_rational(r.charge),
                    "level_per_ideal": [fmt_rational(b.level) for b in r.blocks],
                }
                for r in self.rows
            ],
        }

    @classmethod
    def from_json(cls, data) -> "BranchingTable":
        if isinstance(data, str):
            data = json.loads(data)
        types = tuple(LieType.parse(t) for t in data["ideals"])
        rows = []
        for r in data["rows"]:
            blocks = []
            for t, coeffs, lev in zip(types, r["ideal_blocks"], r["level_per_ideal"]):
                labels = tuple(int(parse_rational(c)) for c in coeffs[1:])
                blocks.append(AffineBlock(parse_rational(lev), labels, t))
            charge = r.get("center_charge")
            rows.append(BranchingRow(tuple(blocks), None if charge is None else parse_rational(charge)))
        levels = tuple(parse_rational(x) for x in data["rows"][0]["level_per_ideal"]) if data["rows"] else ()
        return cls(
            ambient=LieType.parse(data["ambient"]),
            subalgebra=data["subalgebra"],
            level=parse_rational(data["level"]),
            ideal_types=types,
            ideal_levels=levels,
            rows=tuple(rows),
        )


def ideal_order(sub: EqualRankSubalgebra, types: Optional[Sequence] = None) -> List[int]:
    """Positions of the ideals listed in ``types`` (first unused match wins)."""
    if types is None:
        return list(range(len(sub.ideals)))
    used: List[int] = []
    for t in types:
        t = LieType.parse(t) if isinstance(t, str) else t
        for j, ideal in enumerate(sub.ideals):
            if j not in used and ideal.lie_type == t:
                used.append(j)
                break
        else:
            raise SubalgebraError(f"{sub.name} has no unused ideal of type {t}")
    if len(used) != len(sub.ideals):
        raise SubalgebraError(f"ideal list {list(map(str, types))} does not cover {sub.name}")
    return used


def finite_decomposition(sub: EqualRankSubalgebra, k, types: Optional[Sequence] = None) -> BranchingTable:
    """Vacuum plus one row per component of p, for semisimple g^0 with finite decomposition.

    ``types`` optionally reorders the ideal blocks (e.g. ``["D4", "A1"]``).
    """
    k = Fraction(k)
    if sub.center_dim:
        raise SubalgebraError("g^0 has a center; use graded_decomposition for its eigenspaces")
    verdict = classify(sub, k)
    if verdict.verdict is not Verdict.FINITE:
        raise SubalgebraError(f"{sub.label or sub.name} at k = {k} is {verdict.verdict.value}, not Finite")
    order = ideal_order(sub, types)
    zero = G0Weight(tuple((0,) * i.lie_type.rank for i in sub.ideals))
    rows = [_row(sub, zero, k, order)]
    rows += [_row(sub, c.weight, k, order) for c in sub.p_module]
    return BranchingTable(
        ambient=sub.ambient,
        subalgebra=sub.label or sub.name,
        level=k,
        ideal_types=tuple(sub.ideals[j].lie_type for j in order),
        ideal_levels=tuple(sub.ideals[j].index * k for j in order),
        rows=tuple(rows),
    )


# -- graded form for the center case -------------------------------------------


@dataclass(frozen=True)
class GradedBranching:
    ambient: LieType
    subalgebra: str
    level: Fraction
    window: int
    ideal_types: Tuple[LieType, ...]
    rows: Tuple[Tuple[int, BranchingRow], ...]

    def text(self) -> str:
        lines = [f"q={q}: {row.text()}" for q, row in self.rows]
        lines.append(CONTINUATION)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "ambient": str(self.ambient),
            "subalgebra": self.subalgebra,
            "level": fmt_rational(self.level),
            "window": self.window,
            "ideals": [str(t) for t in self.ideal_types],
            "rows": [
                {
                    "ideal_blocks": [[fmt_rational(c) for c in b.coefficients()] for b in r.blocks],
                    "center_charge": fmt_rational(q),
                    "level_per_ideal": [fmt_rational(b.level) for b in r.blocks],
                }
                for q, r in self.rows
            ],
            "continues": True,
        }

    @classmethod
    def from_json(cls, data) -> "GradedBranching":
        if isinstance(data, str):
            data = json.loads(data)
        flat = BranchingTable.from_json(dict(data, rows=data["rows"]))
        rows = tuple((int(r.charge), r) for r in flat.rows)
        return cls(flat.ambient, flat.subalgebra, flat.level, int(data["window"]), flat.ideal_types, rows)


GRADED_JUSTIFICATIONS = (Justification.CRITERION_CENTER, Justification.CITED)


def graded_decomposition(sub: EqualRankSubalgebra, k, window: int) -> GradedBranching:
    """Eigenspaces for charges q in [-window, window]: L(q theta) for q >= 0, L(q alpha_p) for q <= 0."""
    k = Fraction(k)
    if window < 0:
        raise ValueError("window must be nonnegative")
    if not sub.center_dim:
        raise SubalgebraError("g^0 is semisimple; use finite_decomposition")
    verdict = classify(sub, k)
    if verdict.verdict is not Verdict.FINITE or verdict.justification not in GRADED_JUSTIFICATIONS:
        raise SubalgebraError(
            f"{sub.label or sub.name} at k = {k} is {verdict.verdict.value} ({verdict.justification.value}); "
            "the eigenspace formula does not apply"
        )
    theta = sub.datum.theta
    ap = sub.alpha_p
    order = list(range(len(sub.ideals)))
    rows = []
    for q in range(-window, window + 1):
        vec = tuple(q * t for t in theta) if q >= 0 else tuple(q * a for a in ap)
        rows.append((q, _row(sub, sub.restrict(vec), k, order)))
    return GradedBranching(
        ambient=sub.ambient,
        subalgebra=sub.label or sub.name,
        level=k,
        window=window,
        ideal_types=tuple(i.lie_type for i in sub.ideals),
        rows=tuple(rows),
    )


# -- comparison up to diagram automorphisms ------------------------------------


def diagram_automorphisms(t: LieType) -> List[Tuple[int, ...]]:
    """Permutations of the node labels 1..r (as 0-based tuples) preserving the Bourbaki diagram."""
    r = t.rank
    ident = tuple(range(r))
    if t.family == "A" and r >= 2:
        return [ident, tuple(reversed(ident))]
    if t.family == "D" and r == 4:
        out = []
        for a, b, c in permutations((0, 2, 3)):
            perm = [0, 1, 0, 0]
            perm[0], perm[2], perm[3] = a, b, c
            out.append(tuple(perm))
        return out
    if t.family == "D":
        return [ident, ident[:-2] + (r - 1, r - 2)]
    if t.family == "E" and r == 6:
        return [ident, (5, 1, 4, 3, 2, 0)]
    return [ident]


RowKey = Tuple[Tuple[Fraction, ...], ...]


def canonical_rows(types: Sequence[LieType], levels: Sequence[Fraction], rows: Sequence[RowKey]) -> Tuple[RowKey, ...]:
    """Lexicographically least sorted row list over ideal diagram automorphisms
    and permutations of ideals with equal type and level."""
    n = len(types)
    groups: Dict[Tuple[LieType, Fraction], List[int]] = {}
    for j in range(n):
        groups.setdefault((types[j], levels[j]), []).append(j)
    perm_choices = [list(permutations(idx)) for idx in groups.values()]
    group_idx = list(groups.values())
    best = None
    auts = [diagram_automorphisms(t) for t in types]
    for auto in product(*auts):
        for perms in product(*perm_choices):
            position = list(range(n))
            for idx, p in zip(group_idx, perms):
                for src, dst in zip(idx, p):
                    position[dst] = src
            cand = []
            for row in rows:
                blocks = []
                for j in range(n):
                    src = position[j]
                    block = row[src]
                    sigma = auto[src]
                    labels = [None] * len(sigma)
                    for i, s in enumerate(sigma):
                        labels[s] = block[1 + i]
                    blocks.append((block[0],) + tuple(labels))
                cand.append(tuple(blocks))
            key = tuple(sorted(cand))
            if best is None or key < best:
                best = key
    return best


def table_keys(table: BranchingTable) -> Tuple[RowKey, ...]:
    return tuple(tuple(b.coefficients() for b in r.blocks) for r in table.rows)


def parse_row_text(text: str, ranks: Sequence[int]) -> List[RowKey]:
    """Parse "(L0, 2 L0) + (L1, 2 L1)" back into coefficient tuples."""
    rows = []
    depth = 0
    cur = ""
    chunks = []
    for ch in text:
        if ch == "(":
            depth += 1
            if depth == 1:
                cur = ""
                continue
        elif ch == ")":
            depth -= 1
            if depth == 0:
                chunks.append(cur)
                continue
        if depth >= 1:
            cur += ch
    for chunk in chunks:
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != len(ranks):
            raise ValueError(f"row {chunk!r} has {len(parts)} blocks, expected {len(ranks)}")
        row = []
        for part, r in zip(parts, ranks):
            coeffs = [Fraction(0)] * (r + 1)
            for term in part.replace(" - ", " + -").split(" + "):
                term = term.strip()
                if term == "0":
                    continue
                coef, _, name = term.rpartition("L")
                coef = coef.strip()
                c = Fraction(1) if coef in ("", "+") else Fraction(-1) if coef == "-" else parse_rational(coef)
                coeffs[int(name)] += c
            row.append(tuple(coeffs))
        rows.append(tuple(row))
    return rows
