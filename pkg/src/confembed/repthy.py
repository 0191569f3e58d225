"""Finite-dimensional representations over a :class:`RootDatum`.

Weyl dimensions, Freudenthal weight multiplicities, Klimyk tensor products,
Casimir values and Dynkin indices.  All results are exact.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .rootsys import LieType, RootDatum, Weight, build_root_datum


class IrrepSum:
    """Finite multiset of irreducible modules, keyed by dominant highest weight."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Weight, int] | Iterable[Tuple[Weight, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Weight, int] = {}
        for w, m in items:
            w = tuple(int(c) for c in w)
            if any(c < 0 for c in w):
                raise ValueError(f"non-dominant highest weight {w}")
            acc[w] = acc.get(w, 0) + int(m)
        for w, m in acc.items():
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {w}")
        self.terms: Dict[Weight, int] = {w: m for w, m in sorted(acc.items()) if m}

    @classmethod
    def single(cls, w: Sequence[int], mult: int = 1) -> "IrrepSum":
        return cls({tuple(w): mult})

    def __add__(self, other: "IrrepSum") -> "IrrepSum":
        return IrrepSum(list(self.terms.items()) + list(other.terms.items()))

    def __eq__(self, other):
        return isinstance(other, IrrepSum) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __iter__(self) -> Iterator[Tuple[Weight, int]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __contains__(self, w):
        return tuple(w) in self.terms

    def mult(self, w: Sequence[int]) -> int:
        return self.terms.get(tuple(w), 0)

    def __repr__(self):
        inside = " + ".join(f"{m}*V{w}" if m > 1 else f"V{w}" for w, m in self.terms.items())
        return f"IrrepSum({inside})"


class WeightMultiplicities:
    """Weight system of V(lambda): dominant multiplicities plus lazy orbit expansion."""

    def __init__(self, datum: RootDatum, highest: Weight, dominant: Dict[Weight, int]):
        self.datum = datum
        self.highest = highest
        self.dominant = dominant
        self._full = None

    @property
    def entries(self) -> Dict[Weight, int]:
        if self._full is None:
            full = {}
            for mu, m in self.dominant.items():
                for w in self.datum.orbit(mu):
                    full[w] = m
            self._full = full
        return self._full

    def __getitem__(self, w) -> int:
        w = tuple(w)
        dom = self.datum.dominant_conjugate(w)
        return self.dominant.get(dom, 0)

    def items(self):
        return self.entries.items()

    def __len__(self):
        return len(self.entries)

    def total(self) -> int:
        return sum(m * len(self.datum.orbit(mu)) for mu, m in self.dominant.items())


def _check_dominant_integral(lam: Sequence) -> Weight:
    for c in lam:
        if Fraction(c).denominator != 1:
            raise ValueError(f"weight {tuple(lam)} is not integral")
        if c < 0:
            raise ValueError(f"weight {tuple(lam)} is not dominant")
    return tuple(int(c) for c in lam)


def weyl_dim(d: RootDatum, lam: Sequence[int]) -> int:
    lam = _check_dominant_integral(lam)
    return _weyl_dim(d.lie_type, lam)


@lru_cache(maxsize=None)
def _weyl_dim(t: LieType, lam: Weight) -> int:
    d = build_root_datum(t)
    num = 1
    den = 1
    lr = tuple(c + 1 for c in lam)
    for alpha in d.positive_roots:
        # (lambda+rho, alpha^vee) in labels: sum_i c_i |alpha_i|^2/|alpha|^2 (lambda+rho)_i
        cor = d.coroot_labels(alpha)
        a = sum((cor[i] * lr[i] for i in range(d.rank)), Fraction(0))
        b = sum(cor, Fraction(0))
        num *= a
        den *= b
    val = Fraction(num) / den
    assert val.denominator == 1
    return int(val)


def casimir_value(d: RootDatum, lam: Sequence) -> Fraction:
    """(lambda, lambda + 2 rho) in the normalized form."""
    two_rho = tuple(2 for _ in range(d.rank))
    return d.inner(lam, tuple(a + b for a, b in zip(lam, two_rho)))


def dominant_weights(d: RootDatum, lam: Weight) -> list:
    """Dominant weights of V(lambda), highest first (by depth)."""
    return list(_dominant_weights(d.lie_type, tuple(lam)))


@lru_cache(maxsize=None)
def _dominant_weights(t: LieType, lam: Weight) -> Tuple[Weight, ...]:
    d = build_root_datum(t)
    pos_w = [d.root_to_weight(a) for a in d.positive_roots]
    pos_h = [sum(a) for a in d.positive_roots]
    depth = {lam: 0}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for aw, h in zip(pos_w, pos_h):
                nu = tuple(x - y for x, y in zip(mu, aw))
                if min(nu) < 0 or nu in depth:
                    continue
                depth[nu] = depth[mu] + h
                nxt.append(nu)
        frontier = nxt
    return tuple(sorted(depth, key=lambda w: (depth[w], w)))


def freudenthal(d: RootDatum, lam: Sequence[int]) -> WeightMultiplicities:
    lam = _check_dominant_integral(lam)
    return WeightMultiplicities(d, lam, dict(_freudenthal(d.lie_type, lam)))


@lru_cache(maxsize=None)
def _freudenthal(t: LieType, lam: Weight) -> Tuple[Tuple[Weight, int], ...]:
    d = build_root_datum(t)
    n = d.rank
    doms = _dominant_weights(t, lam)
    dom_set = set(doms)
    pos_w = [d.root_to_weight(a) for a in d.positive_roots]
    rho = d.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = d.inner_scaled(lr, lr)
    mult: Dict[Weight, int] = {lam: 1}
    conj_cache: Dict[Weight, Weight] = {}

    def m_of(w):
        c = conj_cache.get(w)
        if c is None:
            c = d.dominant_conjugate(w)
            conj_cache[w] = c
        return mult.get(c, 0) if c in dom_set else 0

    for mu in doms[1:]:
        mr = tuple(a + b for a, b in zip(mu, rho))
        den = top - d.inner_scaled(mr, mr)
        s = 0
        for aw in pos_w:
            nu = tuple(x + y for x, y in zip(mu, aw))
            while True:
                m = m_of(nu)
                if not m:
                    break
                s += m * d.inner_scaled(nu, aw)
                nu = tuple(x + y for x, y in zip(nu, aw))
        val = Fraction(2 * s, den)
        assert val.denominator == 1, (t, lam, mu, val)
        if val:
            mult[mu] = int(val)
    return tuple((w, mult[w]) for w in doms if w in mult)


def tensor_decompose(d: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> IrrepSum:
    """Klimyk decomposition of V(lam) (x) V(mu), iterating over the smaller factor."""
    lam = _check_dominant_integral(lam)
    mu = _check_dominant_integral(mu)
    if weyl_dim(d, lam) < weyl_dim(d, mu) or (weyl_dim(d, lam) == weyl_dim(d, mu) and lam < mu):
        lam, mu = mu, lam
    return IrrepSum(_klimyk(d.lie_type, lam, mu))


@lru_cache(maxsize=4096)
def _klimyk(t: LieType, lam: Weight, mu: Weight) -> Tuple[Tuple[Weight, int], ...]:
    d = build_root_datum(t)
    acc: Counter = Counter()
    for dom, m in _freudenthal(t, mu):
        for w in d.orbit(dom):
            shifted = tuple(a + b for a, b in zip(lam, w))
            rep, sign, _ = d.dominant_representative(shifted)
            if sign:
                acc[rep] += sign * m
    for w, m in acc.items():
        if m < 0:
            raise AssertionError(f"negative net multiplicity {m} at {w} in {t} {lam} x {mu}")
    return tuple(sorted((w, m) for w, m in acc.items() if m))


def dynkin_index(d: RootDatum, rep: IrrepSum) -> Fraction:
    """Index of a module relative to the adjoint (adjoint has index 1)."""
    norm = casimir_value(d, d.theta_weight)
    total = Fraction(0)
    for lam, m in rep:
        total += m * Fraction(weyl_dim(d, lam), d.dim) * casimir_value(d, lam) / norm
    return total


def irrep_index(d: RootDatum, lam: Sequence[int]) -> Fraction:
    return dynkin_index(d, IrrepSum.single(lam))
