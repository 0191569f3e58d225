"""Finite versus infinite decomposition of V_k(g) over the affine subalgebra at a conformal level.

The decision combines four sources: the level-one result, the long-root
obstruction, the tensor-product criterion on p, and explicit families of
singular vectors whose coefficient sequences never vanish.  The handful of
cases settled by free-field or lattice realizations, and the cases still open,
are kept in small lookup tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .conformal import conformal_levels, conformal_weight_terms
from .repthy import tensor_decompose
from .subalg import EqualRankSubalgebra, G0Weight, SubalgebraError

WITNESS_LENGTH = 10


class Verdict(str, Enum):
    FINITE = "Finite"
    INFINITE = "Infinite"
    UNKNOWN = "Unknown"


class Justification(str, Enum):
    LEVEL_ONE = "level-one"
    CRITERION_SEMISIMPLE = "criterion-finiote"
    CRITERION_CENTER = "criterion-finioths"
    LONG_ROOT = "long-root-obstruction"
    CN_WITNESS = "cn-coefficient-witness"
    AN_WITNESS = "an-coefficient-witness"
    CITED = "cited-realization"
    OPEN = "open-case"


class ClassificationError(RuntimeError):
    """No branch of the decision tree applies; indicates an unexpected input or a bug."""


@dataclass(frozen=True)
class ConformalWeightReport:
    nu: G0Weight
    delta: Fraction
    source: Tuple[int, int]

    @property
    def integral(self) -> bool:
        """Delta is a positive integer."""
        return self.delta > 0 and self.delta.denominator == 1


@dataclass(frozen=True)
class SingularWeight:
    """Weight and degree of an explicit singular vector, with its conformal weight."""

    label: str
    weight: G0Weight
    degree: int
    delta: Fraction


@dataclass(frozen=True)
class FinitenessVerdict:
    verdict: Verdict
    justification: Justification
    level: Fraction
    witness: Optional[Tuple[Fraction, ...]] = None
    citation: Optional[str] = None
    reports: Tuple[ConformalWeightReport, ...] = ()
    singular_weights: Tuple[SingularWeight, ...] = ()

    @property
    def failing(self) -> Tuple[ConformalWeightReport, ...]:
        return tuple(r for r in self.reports if r.integral)


# -- conformal weights and the tensor criterion --------------------------------


def conformal_weight(sub: EqualRankSubalgebra, k, nu: G0Weight) -> Fraction:
    return conformal_weight_terms(sub, k, nu)


def _product(sub: EqualRankSubalgebra, a: G0Weight, b: G0Weight) -> Dict[G0Weight, int]:
    acc: Dict[G0Weight, int] = {G0Weight((), a.charge + b.charge): 1}
    for ideal, x, y in zip(sub.ideals, a.blocks, b.blocks):
        parts = tensor_decompose(ideal.datum, x, y)
        nxt: Dict[G0Weight, int] = {}
        for w, m in acc.items():
            for lam, c in parts:
                key = G0Weight(w.blocks + (lam,), w.charge)
                nxt[key] = nxt.get(key, 0) + m * c
        acc = nxt
    return acc


def _zero_weight(sub: EqualRankSubalgebra) -> G0Weight:
    return G0Weight(tuple((0,) * i.lie_type.rank for i in sub.ideals), Fraction(0))


def residual_weights(sub: EqualRankSubalgebra) -> List[Tuple[Tuple[int, int], G0Weight, int]]:
    """Summands of V(mu_i) (x) V(mu_j) other than the distinguished one.

    Semisimple case: all i <= j, dropping one copy of mu_{i+j mod m}.
    Center case: V(theta) (x) V(-alpha_p), dropping one trivial summand.
    """
    comps = list(sub.p_module)
    zero = _zero_weight(sub)
    out = []
    if sub.center_dim:
        pairs = [(comps[0], comps[1])]
    else:
        pairs = [(a, b) for x, a in enumerate(comps) for b in comps[x:]]
    m = sub.automorphism_order
    target_of = {c.index: c.weight for c in comps}
    for a, b in pairs:
        prod = _product(sub, a.weight, b.weight)
        if sub.center_dim:
            drop = zero
        else:
            drop = target_of.get((a.index + b.index) % m, zero)
        if prod.get(drop, 0) < 1:
            raise ClassificationError(f"{sub}: distinguished summand missing from V(mu_{a.index}) x V(mu_{b.index})")
        prod[drop] -= 1
        for w in sorted(prod, key=lambda w: (w.blocks, w.charge)):
            if prod[w]:
                out.append(((a.index, b.index), w, prod[w]))
    return out


def tensor_criterion(sub: EqualRankSubalgebra, k) -> Tuple[bool, Tuple[ConformalWeightReport, ...]]:
    k = Fraction(k)
    reports = tuple(
        ConformalWeightReport(w, conformal_weight(sub, k, w), src) for src, w, _ in residual_weights(sub)
    )
    return not any(r.integral for r in reports), reports


# -- long-root obstruction and coefficient sequences ---------------------------


def alpha_p_is_long(sub: EqualRankSubalgebra) -> bool:
    return sub.datum.root_lengths[sub.removed_node - 1] == 2


def long_root_obstruction(sub: EqualRankSubalgebra, k) -> bool:
    if sub.center_dim:
        raise SubalgebraError("the long-root obstruction applies to semisimple subalgebras only")
    return alpha_p_is_long(sub) and Fraction(k) != 1


def coeff_actionxeta(m: int, k, eta_norm) -> Fraction:
    """(m+1) k - |eta|^2 C(m+1, 2): the lowering coefficient on powers of a highest root vector of p."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return (m + 1) * Fraction(k) - Fraction(eta_norm) * comb(m + 1, 2)


def coeff_cn(m: int, k) -> Fraction:
    if m < 1:
        raise ValueError("m must be positive")
    k = Fraction(k)
    if m % 2:
        return 2 * k - 2 * m + 2
    return Fraction(m, 2) * (m * m + (-4 - 3 * k) * m + 2 * k * k + 5 * k + 3)


def coeff_an(m: int, q: int, k, branch: Optional[str] = None) -> Fraction:
    """Lowering coefficient between consecutive singular vectors of the A-family.

    ``branch`` is ``"c"`` (needs q >= 0) or ``"d"`` (needs q <= 0); by default
    it follows the sign of q.  Both agree at q = 0.
    """
    if m < 1:
        raise ValueError("m must be positive")
    k = Fraction(k)
    if branch is None:
        branch = "c" if q >= 0 else "d"
    if branch == "c":
        if q < 0:
            raise ValueError("the c-branch needs q >= 0")
        return Fraction(m, q + 1) * (2 + k - m) * (1 + k - 2 * m - q)
    if branch == "d":
        if q > 0:
            raise ValueError("the d-branch needs q <= 0")
        return Fraction(m, -q + 1) * (2 + k - m) * (1 + k - 2 * m + q)
    raise ValueError(f"unknown branch {branch!r}")


def cn_even_quadratic_roots(n: int) -> Tuple[Fraction, ...]:
    """Rational roots in m of the even-m quadratic at k = -1 - n/2."""
    from . import poly

    k = Fraction(-2 - n, 2)
    quad = poly.normalize([2 * k * k + 5 * k + 3, -4 - 3 * k, 1])
    roots, rest = poly.rational_roots(quad)
    if poly.degree(rest) > 0:
        raise ClassificationError(f"quadratic for n = {n} has irrational roots")
    return tuple(r for r, _ in roots)


def scan_cn_zeros(n_max: int = 20, m_max: int = 1000) -> List[Tuple[int, int]]:
    """(n, m) with coeff_cn(m, -1-n/2) = 0, for 2 <= n <= n_max, 1 <= m <= m_max."""
    n = np.arange(2, n_max + 1, dtype=np.int64)[:, None]
    m = np.arange(1, m_max + 1, dtype=np.int64)[None, :]
    # 8 c_m at k = -1 - n/2 for even m: 4 m (m + n - 1)(2 m + n); odd: -n - 2m
    even = 4 * m * (m + n - 1) * (2 * m + n)
    odd = -n - 2 * m
    vals = np.where(m % 2 == 0, even, odd)
    hits = np.argwhere(vals == 0)
    return [(int(n[i, 0]), int(m[0, j])) for i, j in hits]


def scan_an_zeros(n_max: int = 20, m_max: int = 1000, q_max: int = 100) -> List[Tuple[int, int, int]]:
    """(n, m, q) with coeff_an(m, q, -(n+1)/2) = 0, for 3 <= n <= n_max."""
    m = np.arange(1, m_max + 1, dtype=np.int64)[:, None]
    q = np.arange(-q_max, q_max + 1, dtype=np.int64)[None, :]
    out = []
    for n in range(3, n_max + 1):
        # 4 (|q| + 1) * coefficient = m (3 - n - 2m)(1 - n - 4m - 2|q|)
        vals = m * (3 - n - 2 * m) * (1 - n - 4 * m - 2 * np.abs(q))
        for i, j in np.argwhere(vals == 0):
            out.append((n, int(m[i, 0]), int(q[0, j])))
    return out


# -- singular-vector weights ---------------------------------------------------


def _vec(sub: EqualRankSubalgebra, coeffs: Dict[str, int]) -> Tuple[int, ...]:
    d = sub.datum
    theta = d.theta
    ap = sub.alpha_p
    return tuple(coeffs.get("theta", 0) * t + coeffs.get("alpha_p", 0) * a for t, a in zip(theta, ap))


def highest_root_power_weights(sub: EqualRankSubalgebra, k, count: int = WITNESS_LENGTH) -> Tuple[SingularWeight, ...]:
    """Weights m*eta of the m-th power of a highest root vector of p (degree m)."""
    eta = sub.p_module.components[0].root
    out = []
    for mm in range(1, count + 1):
        w = sub.restrict(tuple(mm * c for c in eta))
        out.append(SingularWeight(f"m={mm}", w, mm, conformal_weight(sub, k, w)))
    return tuple(out)


def an_family_weights(sub: EqualRankSubalgebra, k, m_max: int = 3, q_max: int = 2) -> Tuple[SingularWeight, ...]:
    """Weights of v_{m,q}: (m+q) theta - m alpha_p if q >= 0, m theta - (m-q) alpha_p if q <= 0."""
    out = []
    for mm in range(1, m_max + 1):
        for q in range(-q_max, q_max + 1):
            if q >= 0:
                vec = _vec(sub, {"theta": mm + q, "alpha_p": -mm})
            else:
                vec = _vec(sub, {"theta": mm, "alpha_p": -(mm - q)})
            w = sub.restrict(vec)
            out.append(SingularWeight(f"m={mm},q={q}", w, 2 * mm + abs(q), conformal_weight(sub, k, w)))
    return tuple(out)


# -- recognizing families ------------------------------------------------------


def _shape(sub: EqualRankSubalgebra) -> Tuple[str, int, int]:
    t = sub.ambient
    return t.family, t.rank, sub.removed_node


def is_cn_split(sub) -> bool:
    fam, n, p = _shape(sub)
    return fam == "C" and 1 <= p <= n - 1


def is_an_center(sub) -> Optional[Tuple[int, int]]:
    """(n, h) for A_{h-1} x A_{n-h} x Z in A_n."""
    fam, n, p = _shape(sub)
    return (n, p) if fam == "A" else None


def _is_rank2_bc_center(sub) -> bool:
    fam, n, p = _shape(sub)
    return n == 2 and ((fam == "B" and p == 1) or (fam == "C" and p == 2))


@dataclass(frozen=True)
class CitedCase:
    verdict: Verdict
    justification: Justification
    citation: str
    matches: Callable[[EqualRankSubalgebra, Fraction], bool]


def _an(sub, k, pred) -> bool:
    nh = is_an_center(sub)
    return nh is not None and pred(nh[0], nh[1], k)


CITED_INFINITE = (
    CitedCase(
        Verdict.INFINITE, Justification.CITED,
        "[Kw] free-field realization of V_{-1}(sl(n+1)); A_{h-1} x A_{n-h} x Z with h = 2 or n-h = 1 at k = -1",
        lambda s, k: _an(s, k, lambda n, h, k: k == -1 and h >= 2 and n - h >= 1 and (h == 2 or n - h == 1)),
    ),
    CitedCase(
        Verdict.INFINITE, Justification.CITED,
        "[A-2014] realization of V_{-3/2}(sl(3)) via the N=4 superconformal algebra; A1 x Z in A2 at k = -3/2",
        lambda s, k: _an(s, k, lambda n, h, k: n == 2 and k == Fraction(-3, 2)),
    ),
    CitedCase(
        Verdict.INFINITE, Justification.CITED,
        "symplectic-boson realization of V_{-1/2}(sp(4)); A1 x Z in B2 = C2 at k = -1/2",
        lambda s, k: _is_rank2_bc_center(s) and k == Fraction(-1, 2),
    ),
)

CITED_FINITE = (
    CitedCase(
        Verdict.FINITE, Justification.CITED,
        "[AP], see [KMP, 3.5]; B4 in F4 at k = -5/2",
        lambda s, k: _shape(s) == ("F", 4, 4) and k == Fraction(-5, 2),
    ),
    CitedCase(
        Verdict.FINITE, Justification.CITED,
        "lattice/free-field realization; A2 x A2 x Z in A5 at k = -1",
        lambda s, k: _an(s, k, lambda n, h, k: n == 5 and h == 3 and k == -1),
    ),
    CitedCase(
        Verdict.FINITE, Justification.CITED,
        "[AP2], [FF] charge eigenspaces of n symplectic bosons; A_{n-1} x Z in C_n at k = -1/2, n >= 3",
        lambda s, k: _shape(s)[0] == "C" and _shape(s)[2] == s.ambient.rank >= 3 and k == Fraction(-1, 2),
    ),
    CitedCase(
        Verdict.FINITE, Justification.CITED,
        "[FF] V_{-1/2}(sp(2n)) is the even part of n symplectic bosons; splitting n = h + h gives two summands",
        lambda s, k: is_cn_split(s) and k == Fraction(-1, 2),
    ),
)

OPEN_CASES = (
    CitedCase(
        Verdict.UNKNOWN, Justification.OPEN, "A2 x Z in A3 at k = -2",
        lambda s, k: _an(s, k, lambda n, h, k: n == 3 and h in (1, 3) and k == -2),
    ),
    CitedCase(
        Verdict.UNKNOWN, Justification.OPEN, "D_{n-1} x Z in D_n at k = 2-n",
        lambda s, k: _shape(s)[0] == "D" and _shape(s)[2] == 1 and k == 2 - s.ambient.rank,
    ),
    CitedCase(
        # D3 x Z = A3 x Z; triality permutes the three A3 x Z in D4
        Verdict.UNKNOWN, Justification.OPEN, "A3 x Z = D3 x Z in D4 at k = -2 (all three, related by triality)",
        lambda s, k: _shape(s)[:2] == ("D", 4) and s.center_dim == 1 and k == -2,
    ),
    CitedCase(
        Verdict.UNKNOWN, Justification.OPEN, "B_{n-1} x Z in B_n at k = 3/2-n, n >= 3",
        lambda s, k: _shape(s)[0] == "B" and _shape(s)[2] == 1 and s.ambient.rank >= 3
        and k == Fraction(3, 2) - s.ambient.rank,
    ),
)


def _lookup(table, sub, k) -> Optional[CitedCase]:
    for case in table:
        if case.matches(sub, k):
            return case
    return None


# -- classification ------------------------------------------------------------


def classify(sub: EqualRankSubalgebra, k) -> FinitenessVerdict:
    k = Fraction(k)
    if not sub.maximal:
        raise SubalgebraError(f"{sub.label or sub.name} is not maximal")
    if k not in conformal_levels(sub):
        raise SubalgebraError(f"k = {k} is not a conformal level of {sub.label or sub.name} in {sub.ambient}")
    if k == 1:
        return FinitenessVerdict(Verdict.FINITE, Justification.LEVEL_ONE, k, citation="[Kac] level-one decomposition")
    if sub.semisimple and long_root_obstruction(sub, k):
        witness = tuple(coeff_actionxeta(mm, k, 2) for mm in range(WITNESS_LENGTH))
        return FinitenessVerdict(
            Verdict.INFINITE, Justification.LONG_ROOT, k, witness=witness,
            singular_weights=highest_root_power_weights(sub, k),
        )
    passes, reports = tensor_criterion(sub, k)
    if passes:
        just = Justification.CRITERION_CENTER if sub.center_dim else Justification.CRITERION_SEMISIMPLE
        return FinitenessVerdict(Verdict.FINITE, just, k, reports=reports)
    if is_cn_split(sub) and k == -1 - Fraction(sub.ambient.rank, 2):
        witness = tuple(coeff_cn(mm, k) for mm in range(1, WITNESS_LENGTH + 1))
        return FinitenessVerdict(
            Verdict.INFINITE, Justification.CN_WITNESS, k, witness=witness, reports=reports,
            singular_weights=highest_root_power_weights(sub, k),
        )
    nh = is_an_center(sub)
    if nh is not None:
        n, h = nh
        if h >= 2 and n - h >= 1 and k == Fraction(-(n + 1), 2):
            witness = tuple(coeff_an(mm, 0, k) for mm in range(1, WITNESS_LENGTH + 1))
            return FinitenessVerdict(
                Verdict.INFINITE, Justification.AN_WITNESS, k, witness=witness, reports=reports,
                singular_weights=an_family_weights(sub, k),
            )
    for table in (CITED_INFINITE, CITED_FINITE, OPEN_CASES):
        case = _lookup(table, sub, k)
        if case is not None:
            return FinitenessVerdict(case.verdict, case.justification, k, citation=case.citation, reports=reports)
    raise ClassificationError(f"no rule decides {sub.label or sub.name} in {sub.ambient} at k = {k}")
