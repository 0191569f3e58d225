"""Maximal equal-rank subalgebras by node removal from the extended Dynkin diagram.

A subalgebra is described by its simple ideals (each with its own Bourbaki
numbering and embedding index ``d_j = 2/(theta_j, theta_j)``) and an optional
one-dimensional center.  The orthocomplement ``p`` is split into irreducible
components, one per eigenvalue class of the defining automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .repthy import IrrepSum, casimir_value, dynkin_index, weyl_dim
from .rootsys import LieType, RootDatum, build_root_datum

AFFINE_NODE = 0
PRIMES = (2, 3, 5)


class SubalgebraError(ValueError):
    pass


class ConstructionError(AssertionError):
    """Internal inconsistency while building a subalgebra; indicates a bug."""


@dataclass(frozen=True)
class Ideal:
    """Simple ideal of g^0.

    ``nodes`` are the extended-diagram nodes (0 = -theta) in the ideal's own
    Bourbaki order; ``simple_roots`` are the matching vectors in the ambient
    simple-root coordinates.
    """

    lie_type: LieType
    index: Fraction
    nodes: Tuple[int, ...]
    simple_roots: Tuple[Tuple[int, ...], ...]

    @property
    def datum(self) -> RootDatum:
        return build_root_datum(self.lie_type)

    @property
    def dual_coxeter(self) -> int:
        return self.datum.dual_coxeter

    @property
    def dim(self) -> int:
        return self.datum.dim

    def __str__(self):
        return str(self.lie_type)


@dataclass(frozen=True)
class G0Weight:
    """A g^0-weight: Dynkin labels per simple ideal plus the charge on zeta."""

    blocks: Tuple[Tuple[int, ...], ...]
    charge: Fraction = Fraction(0)

    def __add__(self, other: "G0Weight") -> "G0Weight":
        return G0Weight(
            tuple(tuple(a + b for a, b in zip(x, y)) for x, y in zip(self.blocks, other.blocks)),
            self.charge + other.charge,
        )

    def scale(self, c: int) -> "G0Weight":
        return G0Weight(tuple(tuple(c * a for a in x) for x in self.blocks), c * self.charge)

    def is_zero(self) -> bool:
        return self.charge == 0 and all(a == 0 for x in self.blocks for a in x)


@dataclass(frozen=True)
class PComponent:
    """Irreducible summand V(mu_i) of p."""

    index: int
    root: Tuple[int, ...]
    weight: G0Weight
    dim: int


@dataclass(frozen=True)
class PModule:
    components: Tuple[PComponent, ...]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    @property
    def dim(self) -> int:
        return sum(c.dim for c in self.components)


@dataclass(frozen=True, eq=False)
class EqualRankSubalgebra:
    ambient: LieType
    removed_node: int
    mark: int
    ideals: Tuple[Ideal, ...]
    center_dim: int
    label: str = ""

    @property
    def datum(self) -> RootDatum:
        return build_root_datum(self.ambient)

    @property
    def automorphism_order(self) -> int:
        return 2 if self.mark == 1 else self.mark

    @property
    def maximal(self) -> bool:
        return self.mark == 1 or self.mark in PRIMES

    @property
    def semisimple(self) -> bool:
        return self.center_dim == 0

    @property
    def name(self) -> str:
        return subalgebra_name([i.lie_type for i in self.ideals], self.center_dim)

    @property
    def dim(self) -> int:
        return sum(i.dim for i in self.ideals) + self.center_dim

    @property
    def alpha_p(self) -> Tuple[int, ...]:
        n = self.ambient.rank
        return tuple(int(j == self.removed_node - 1) for j in range(n))

    @cached_property
    def simple_roots(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(r for ideal in self.ideals for r in ideal.simple_roots)

    @cached_property
    def positive_roots(self) -> Tuple[Tuple[int, ...], ...]:
        """Roots of g^0 that are nonnegative combinations of its simple roots."""
        out = []
        for ideal in self.ideals:
            for r in ideal.datum.positive_roots:
                v = [0] * self.ambient.rank
                for c, s in zip(r, ideal.simple_roots):
                    for t in range(len(v)):
                        v[t] += c * s[t]
                out.append(tuple(v))
        return tuple(out)

    @cached_property
    def rho_g0(self) -> Tuple[Fraction, ...]:
        """Weyl vector of g^0 in ambient simple-root coordinates."""
        n = self.ambient.rank
        acc = [Fraction(0)] * n
        for r in self.positive_roots:
            for t in range(n):
                acc[t] += Fraction(r[t], 2)
        return tuple(acc)

    def grade(self, root: Sequence[int]) -> int:
        """Coefficient of alpha_p in a vector of ambient simple-root coordinates."""
        return root[self.removed_node - 1]

    def restrict(self, vec: Sequence) -> G0Weight:
        """Restrict a vector in ambient simple-root coordinates to g^0."""
        d = self.datum
        blocks = []
        for ideal in self.ideals:
            labels = []
            for beta in ideal.simple_roots:
                val = 2 * d.root_inner(vec, beta) / d.root_inner(beta, beta)
                labels.append(int(val) if val.denominator == 1 else val)
            blocks.append(tuple(labels))
        charge = Fraction(vec[self.removed_node - 1]) if self.center_dim else Fraction(0)
        return G0Weight(tuple(blocks), charge)

    @cached_property
    def zeta_norm(self) -> Fraction:
        """(zeta, zeta) in the restricted ambient form; zero without a center."""
        if not self.center_dim:
            return Fraction(0)
        d = self.datum
        p = self.removed_node - 1
        omega = tuple(int(j == p) for j in range(d.rank))
        ap = d.root_lengths[p]
        # varpi is the fundamental coweight 2 omega_p/(alpha_p, alpha_p)
        return ap * ap / (4 * d.inner(omega, omega))

    def casimir(self, w: G0Weight) -> Fraction:
        """Sum over ideals of (mu^j, mu^j + 2 rho^j)_0 plus the center term."""
        total = Fraction(0)
        for ideal, block in zip(self.ideals, w.blocks):
            total += casimir_value(ideal.datum, block)
        return total + w.charge * w.charge * self.zeta_norm

    def dim_of(self, w: G0Weight) -> int:
        out = 1
        for ideal, block in zip(self.ideals, w.blocks):
            out *= weyl_dim(ideal.datum, block)
        return out

    @cached_property
    def p_module(self) -> PModule:
        return decompose_p(self)

    def __repr__(self):
        return f"EqualRankSubalgebra({self.ambient} > {self.label or self.name}, node={self.removed_node})"


def subalgebra_name(types: Sequence[LieType], center_dim: int) -> str:
    parts = [str(t) for t in sorted(types, key=lambda t: (t.family, t.rank))]
    if center_dim:
        parts.append("Z")
    return "x".join(parts) if parts else "0"


# -- ideal identification ------------------------------------------------------


def _components(nodes: Sequence[int], gram) -> List[List[int]]:
    rest = list(nodes)
    comps = []
    while rest:
        comp = [rest.pop(0)]
        grew = True
        while grew:
            grew = False
            for x in list(rest):
                if any(gram[x][y] != 0 for y in comp):
                    comp.append(x)
                    rest.remove(x)
                    grew = True
        comps.append(sorted(comp))
    return comps


def _candidate_types(rank: int) -> List[LieType]:
    out = []
    for fam in "ACBDEFG":
        try:
            t = LieType(fam, rank)
        except ValueError:
            continue
        if t.family == fam:
            out.append(t)
    return out


def _matchings(std, local, scale) -> List[Tuple[int, ...]]:
    """All bijections sigma with local[sigma[a]][sigma[b]] == scale * std[a][b]."""
    r = len(std)
    out = []
    assign: List[int] = []

    def rec(a):
        if a == r:
            out.append(tuple(assign))
            return
        for x in range(r):
            if x in assign:
                continue
            if local[x][x] != scale * std[a][a]:
                continue
            if any(local[x][assign[b]] != scale * std[a][b] for b in range(a)):
                continue
            assign.append(x)
            rec(a + 1)
            assign.pop()

    rec(0)
    return out


def _node_key(node: int) -> int:
    return node


def identify_ideal(datum: RootDatum, nodes: Sequence[int], vectors: Dict[int, Tuple[int, ...]]) -> Ideal:
    """Type, Bourbaki ordering and embedding index of one connected component."""
    local = [[datum.root_inner(vectors[a], vectors[b]) for b in nodes] for a in nodes]
    longest = max(local[i][i] for i in range(len(nodes)))
    scale = longest / 2
    for t in _candidate_types(len(nodes)):
        std = build_root_datum(t).gram
        found = _matchings(std, local, scale)
        if found:
            orders = [tuple(nodes[i] for i in sigma) for sigma in found]
            best = min(orders, key=lambda o: tuple(_node_key(x) for x in o))
            return Ideal(
                lie_type=t,
                index=2 / longest,
                nodes=best,
                simple_roots=tuple(vectors[x] for x in best),
            )
    raise ConstructionError(f"could not identify component {list(nodes)} of {datum.lie_type}")


def _extended_vectors(datum: RootDatum) -> Dict[int, Tuple[int, ...]]:
    vecs = {i + 1: r for i, r in enumerate(datum.simple_roots)}
    vecs[AFFINE_NODE] = tuple(-c for c in datum.theta)
    return vecs


def extended_gram(datum: RootDatum) -> Dict[int, Dict[int, Fraction]]:
    vecs = _extended_vectors(datum)
    return {a: {b: datum.root_inner(vecs[a], vecs[b]) for b in vecs} for a in vecs}


@lru_cache(maxsize=None)
def build_subalgebra(g: LieType, node: int) -> EqualRankSubalgebra:
    """Subalgebra obtained by deleting ``node`` (1-based; 0 is the affine node)."""
    if isinstance(g, str):
        g = LieType.parse(g)
    d = build_root_datum(g)
    if not 0 <= node <= g.rank:
        raise SubalgebraError(f"node {node} out of range for {g}")
    if node == AFFINE_NODE:
        raise SubalgebraError("removing the affine node returns g itself")
    mark = d.marks[node - 1]
    vecs = _extended_vectors(d)
    gram = extended_gram(d)
    if mark == 1:
        keep = [i for i in range(1, g.rank + 1) if i != node]
        center = 1
    else:
        keep = [i for i in range(0, g.rank + 1) if i != node]
        center = 0
    ideals = [identify_ideal(d, comp, vecs) for comp in _components(keep, gram)]
    ideals.sort(key=lambda i: (i.lie_type.family, i.lie_type.rank, min(i.nodes), i.nodes))
    return EqualRankSubalgebra(
        ambient=g, removed_node=node, mark=mark, ideals=tuple(ideals), center_dim=center
    )


def enumerate_maximal(g, include_nonmaximal: bool = False) -> List[EqualRankSubalgebra]:
    """One subalgebra per removable node, in node order.

    Nodes with composite mark give non-maximal subalgebras; they are returned
    only with ``include_nonmaximal``.  Isomorphic duplicates get a ``#node``
    label suffix.
    """
    if isinstance(g, str):
        g = LieType.parse(g)
    d = build_root_datum(g)
    subs = []
    for node in range(1, g.rank + 1):
        mark = d.marks[node - 1]
        if mark != 1 and mark not in PRIMES and not include_nonmaximal:
            continue
        subs.append(build_subalgebra(g, node))
    counts: Dict[str, int] = {}
    for s in subs:
        counts[s.name] = counts.get(s.name, 0) + 1
    out = []
    for s in subs:
        label = s.name if counts[s.name] == 1 else f"{s.name}#{s.removed_node}"
        object.__setattr__(s, "label", label)
        out.append(s)
    return out


def find_subalgebra(g, name: str) -> EqualRankSubalgebra:
    """Look up a maximal subalgebra by name (``"C2xC3"``) or label (``"A4xZ#5"``)."""
    if isinstance(g, str):
        g = LieType.parse(g)
    key = _normalize_name(name)
    subs = enumerate_maximal(g, include_nonmaximal=True)
    for s in subs:
        if _normalize_name(s.label) == key:
            return s
    for s in subs:
        if _normalize_name(s.name) == key:
            return s
    known = ", ".join(s.label for s in enumerate_maximal(g))
    raise SubalgebraError(f"no subalgebra {name!r} in {g}; known: {known}")


def _normalize_name(name: str) -> str:
    base, _, tag = name.strip().partition("#")
    parts = [p.strip().upper() for p in base.replace("*", "x").replace("X", "x").split("x") if p.strip()]
    center = [p for p in parts if p == "Z"]
    types = []
    for p in parts:
        if p == "Z":
            continue
        types.append(LieType.parse(p))
    out = subalgebra_name(types, len(center))
    return f"{out}#{tag.strip()}" if tag else out


# -- p -------------------------------------------------------------------------


def decompose_p(sub: EqualRankSubalgebra) -> PModule:
    d = sub.datum
    m = sub.automorphism_order
    simple0 = sub.simple_roots
    classes: Dict[int, List[Tuple[int, ...]]] = {}
    for r in d.roots:
        c = sub.grade(r)
        if sub.center_dim:
            if c == 0:
                continue
            key = 1 if c > 0 else 2
        else:
            key = c % m
            if key == 0:
                continue
        classes.setdefault(key, []).append(r)
    comps = []
    for key in sorted(classes):
        roots = classes[key]
        tops = []
        for r in roots:
            if not any(d.is_root(tuple(a + b for a, b in zip(r, s))) for s in simple0):
                tops.append(r)
        if len(tops) != 1:
            raise ConstructionError(f"{sub}: class {key} has {len(tops)} highest roots")
        w = sub.restrict(tops[0])
        dim = sub.dim_of(w)
        if dim != len(roots):
            raise ConstructionError(f"{sub}: class {key} has {len(roots)} roots but V{w.blocks} has dim {dim}")
        comps.append(PComponent(index=key, root=tops[0], weight=w, dim=dim))
    if sub.center_dim and len(comps) != 2:
        raise ConstructionError(f"{sub}: expected two components of p")
    if not sub.center_dim and len(comps) != m - 1:
        raise ConstructionError(f"{sub}: expected {m - 1} components of p")
    total = sum(c.dim for c in comps)
    if total != d.dim - sub.dim:
        raise ConstructionError(f"{sub}: dim p = {total}, expected {d.dim - sub.dim}")
    return PModule(tuple(comps))


def embedding_index(sub: EqualRankSubalgebra, j: int) -> Fraction:
    """d_j for ideal ``j`` (1-based); ``j = 0`` is the center with d_0 = 1."""
    if j == 0:
        return Fraction(1)
    return Fraction(sub.ideals[j - 1].index)


def index_of_p(sub: EqualRankSubalgebra, j: int) -> Fraction:
    """Dynkin index of p as a module for the simple ideal ``j`` (1-based)."""
    if j == 0:
        raise SubalgebraError("the center has h^vee = 0; the index formula does not apply")
    ideal = sub.ideals[j - 1]
    terms: Dict[Tuple[int, ...], int] = {}
    for comp in sub.p_module:
        others = 1
        for t, (other, block) in enumerate(zip(sub.ideals, comp.weight.blocks)):
            if t != j - 1:
                others *= weyl_dim(other.datum, block)
        block = comp.weight.blocks[j - 1]
        terms[block] = terms.get(block, 0) + others
    return dynkin_index(ideal.datum, IrrepSum(terms))


def index_of_p_expected(sub: EqualRankSubalgebra, j: int) -> Fraction:
    ideal = sub.ideals[j - 1]
    return ideal.index * sub.datum.dual_coxeter / ideal.dual_coxeter - 1


def casimir_eigenvalue_on_p(sub: EqualRankSubalgebra) -> Fraction:
    """Eigenvalue of the Killing-form Casimir of g^0 on p; must not depend on the component."""
    if not sub.maximal:
        raise SubalgebraError(f"{sub.label or sub.name} is not maximal; Casimir need not be scalar on p")
    hv = sub.datum.dual_coxeter
    values = set()
    for comp in sub.p_module:
        total = Fraction(0)
        for ideal, block in zip(sub.ideals, comp.weight.blocks):
            total += casimir_value(ideal.datum, block) / ideal.index
        total += comp.weight.charge ** 2 * sub.zeta_norm
        values.add(total / (2 * hv))
    if len(values) != 1:
        raise ConstructionError(f"{sub}: Casimir is not scalar on p: {sorted(values)}")
    return values.pop()
