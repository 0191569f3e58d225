"""Root systems of the simple Lie algebras A-G with the normalized invariant form.

Everything is exact: roots live in simple-root coordinates (integer tuples),
weights in fundamental-weight coordinates (Dynkin labels), and the form is a
rational Gram matrix scaled so that long roots have square length 2.

Simple roots follow Bourbaki numbering.  Index ``i`` in a tuple refers to
``alpha_{i+1}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

Weight = Tuple[int, ...]
Root = Tuple[int, ...]

FAMILIES = "ABCDEFG"

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


class LieTypeError(ValueError):
    """Invalid family/rank combination or unparseable type string."""


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        fam = str(self.family).upper()
        rank = int(self.rank)
        if fam not in FAMILIES:
            raise LieTypeError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if rank < 1:
            raise LieTypeError(f"{fam}{rank}: rank must be >= 1")
        if fam in "BC" and rank < 2:
            raise LieTypeError(f"{fam}{rank}: type {fam} requires rank >= 2")
        if fam == "D" and rank < 3:
            raise LieTypeError(f"D{rank}: type D requires rank >= 3")
        if fam == "D" and rank == 3:
            # D3 = A3
            fam = "A"
        if fam == "E" and rank not in (6, 7, 8):
            raise LieTypeError(f"E{rank}: type E requires rank in {{6, 7, 8}}")
        if fam == "F" and rank != 4:
            raise LieTypeError(f"F{rank}: type F requires rank 4")
        if fam == "G" and rank != 2:
            raise LieTypeError(f"G{rank}: type G requires rank 2")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "rank", rank)

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = _TYPE_RE.match(text)
        if not m:
            raise LieTypeError(f"cannot parse Lie type {text!r}; expected e.g. 'A5' or 'G2'")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def dim(self) -> int:
        n = self.rank
        return {
            "A": n * (n + 2),
            "B": n * (2 * n + 1),
            "C": n * (2 * n + 1),
            "D": n * (2 * n - 1),
            "E": {6: 78, 7: 133, 8: 248}.get(n, 0),
            "F": 52,
            "G": 14,
        }[self.family]


def _diagram(t: LieType) -> Tuple[List[Fraction], List[Tuple[int, int]]]:
    """Square lengths of the simple roots and the edges of the Dynkin diagram."""
    n, fam = t.rank, t.family
    chain = [(i, i + 1) for i in range(n - 1)]
    two, one = Fraction(2), Fraction(1)
    if fam == "A":
        return [two] * n, chain
    if fam == "B":
        return [two] * (n - 1) + [one], chain
    if fam == "C":
        return [one] * (n - 1) + [two], chain
    if fam == "D":
        return [two] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if fam == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
        return [two] * n, edges
    if fam == "F":
        return [two, two, one, one], chain
    if fam == "G":
        return [Fraction(2, 3), two], chain
    raise AssertionError(fam)


def _invert(m: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


class RootDatum:
    """Root/weight combinatorics of one simple Lie algebra.

    Roots are integer tuples of simple-root coefficients; weights are integer
    (or Fraction) tuples of Dynkin labels.  Instances are immutable after
    construction and cached by :func:`build_root_datum`.
    """

    def __init__(self, lie_type: LieType):
        self.lie_type = lie_type
        n = lie_type.rank
        self.rank = n
        lengths, edges = _diagram(lie_type)
        gram = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            gram[i][i] = lengths[i]
        for i, j in edges:
            gram[i][j] = gram[j][i] = -max(lengths[i], lengths[j]) / 2
        self.gram: Tuple[Tuple[Fraction, ...], ...] = tuple(tuple(r) for r in gram)
        # cartan[i][j] = <alpha_i, alpha_j^vee>: row i holds the Dynkin labels of alpha_i
        self.cartan: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(n)) for i in range(n)
        )
        self.root_lengths: Tuple[Fraction, ...] = tuple(lengths)
        self.edges = tuple(edges)
        # omega_i = sum_k inv[i][k] alpha_k
        self._omega_in_roots = _invert([[Fraction(x) for x in row] for row in self.cartan])
        # (omega_i, omega_j) = (omega_j coefficient on alpha_i) * |alpha_i|^2 / 2
        fw = [[self._omega_in_roots[j][i] * lengths[i] / 2 for j in range(n)] for i in range(n)]
        self.fundamental_gram: Tuple[Tuple[Fraction, ...], ...] = tuple(tuple(r) for r in fw)
        den = 1
        for row in fw:
            for x in row:
                den = den * x.denominator // _gcd(den, x.denominator)
        self._fw_den = den
        self._fw_int = tuple(tuple(int(x * den) for x in row) for row in fw)
        self._build_roots()

    def __repr__(self):
        return f"RootDatum({self.lie_type})"

    # -- roots -----------------------------------------------------------

    def _build_roots(self):
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(simple)
        layer = list(simple)
        ordered = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                labels = self.root_to_weight(beta)
                for i in range(n):
                    # alpha_i-string through beta: beta - p alpha_i ... beta + q alpha_i, p - q = <beta, alpha_i^vee>
                    p = 0
                    probe = list(beta)
                    while True:
                        probe[i] -= 1
                        if tuple(probe) in found:
                            p += 1
                        else:
                            break
                    q = p - labels[i]
                    if q > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
                            ordered.append(up)
            layer = nxt
        ordered.sort(key=lambda r: (sum(r), r))
        self.positive_roots: Tuple[Root, ...] = tuple(ordered)
        self._positive_set: FrozenSet[Root] = frozenset(ordered)
        self.theta: Root = max(ordered, key=lambda r: (sum(r), self.root_inner(r, r)))
        self.marks: Tuple[int, ...] = self.theta

    @property
    def simple_roots(self) -> Tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @cached_property
    def roots(self) -> Tuple[Root, ...]:
        neg = tuple(tuple(-c for c in r) for r in self.positive_roots)
        return self.positive_roots + neg

    @cached_property
    def root_set(self) -> FrozenSet[Root]:
        return frozenset(self.roots)

    def is_root(self, r: Sequence[int]) -> bool:
        return tuple(r) in self.root_set

    def root_inner(self, x: Sequence, y: Sequence) -> Fraction:
        """Form on vectors given in simple-root coordinates."""
        g = self.gram
        return sum((x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank) if x[i] and y[j]),
                   Fraction(0))

    def root_to_weight(self, r: Sequence) -> Weight:
        """Dynkin labels of a vector given in simple-root coordinates."""
        c = self.cartan
        n = self.rank
        return tuple(sum(r[i] * c[i][j] for i in range(n)) for j in range(n))

    def weight_to_root_coords(self, w: Sequence) -> Tuple[Fraction, ...]:
        inv = self._omega_in_roots
        n = self.rank
        return tuple(sum((w[i] * inv[i][k] for i in range(n)), Fraction(0)) for k in range(n))

    def coroot_labels(self, r: Root) -> Tuple[Fraction, ...]:
        """Coefficients of r^vee = 2r/(r,r) on the simple coroots."""
        norm = self.root_inner(r, r)
        return tuple(Fraction(r[i]) * self.root_lengths[i] / norm for i in range(self.rank))

    def is_long(self, r: Root) -> bool:
        return self.root_inner(r, r) == 2

    # -- weights ---------------------------------------------------------

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def theta_weight(self) -> Weight:
        return self.root_to_weight(self.theta)

    @cached_property
    def dual_coxeter(self) -> int:
        # h^vee = 1 + (rho, theta^vee), theta long so theta^vee = theta
        val = 1 + self.inner(self.rho, self.theta_weight)
        assert val.denominator == 1
        return int(val)

    @cached_property
    def comarks(self) -> Tuple[int, ...]:
        """Coefficients of theta^vee on the simple coroots."""
        return tuple(int(c) for c in self.coroot_labels(self.theta))

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        """Normalized form on weights given in Dynkin labels."""
        g = self._fw_int
        n = self.rank
        s = 0
        for i in range(n):
            xi = x[i]
            if xi:
                row = g[i]
                for j in range(n):
                    if y[j]:
                        s += xi * row[j] * y[j]
        return Fraction(s) / self._fw_den

    def inner_scaled(self, x: Sequence[int], y: Sequence[int]) -> int:
        """``inner(x, y) * inner_den`` as an integer, for integral weights."""
        g = self._fw_int
        n = self.rank
        s = 0
        for i in range(n):
            xi = x[i]
            if xi:
                row = g[i]
                for j in range(n):
                    s += xi * row[j] * y[j]
        return s

    @property
    def inner_den(self) -> int:
        return self._fw_den

    def simple_reflection(self, w: Sequence, i: int) -> Weight:
        c = self.cartan[i]
        wi = w[i]
        return tuple(w[j] - wi * c[j] for j in range(self.rank))

    def dominant_representative(self, x: Sequence) -> Tuple[Weight, int, int]:
        """Dominant weight in the dot-orbit of ``x``.

        Returns ``(weight, sign, parity)`` with ``sign = (-1)**parity``, or
        ``sign = 0`` if ``x + rho`` lies on a wall (then ``weight`` is the
        dominant representative of the ordinary orbit of ``x + rho`` minus rho).
        """
        for c in x:
            if Fraction(c).denominator != 1:
                raise ValueError(f"dominant_representative needs an integral weight, got {tuple(x)}")
        v = [int(c) + 1 for c in x]
        n = self.rank
        cart = self.cartan
        parity = 0
        while True:
            for i in range(n):
                if v[i] < 0:
                    vi = v[i]
                    row = cart[i]
                    for j in range(n):
                        v[j] -= vi * row[j]
                    parity ^= 1
                    break
            else:
                break
        w = tuple(c - 1 for c in v)
        if 0 in v:
            return w, 0, parity
        return w, (-1 if parity else 1), parity

    def dominant_conjugate(self, x: Sequence[int]) -> Weight:
        """Dominant weight in the ordinary Weyl orbit of ``x``."""
        v = list(x)
        n = self.rank
        cart = self.cartan
        while True:
            for i in range(n):
                if v[i] < 0:
                    vi = v[i]
                    row = cart[i]
                    for j in range(n):
                        v[j] -= vi * row[j]
                    break
            else:
                return tuple(v)

    def orbit(self, dominant: Weight) -> List[Weight]:
        """Full Weyl orbit of a dominant weight."""
        return list(_orbit(self.lie_type, tuple(dominant)))

    def is_dominant(self, w: Sequence) -> bool:
        return all(c >= 0 for c in w)

    def is_integral(self, w: Sequence) -> bool:
        return all(Fraction(c).denominator == 1 for c in w)

    def height(self, r: Root) -> int:
        return sum(r)


@lru_cache(maxsize=None)
def _orbit(t: LieType, dominant: Weight) -> Tuple[Weight, ...]:
    d = build_root_datum(t)
    seen = {dominant}
    stack = [dominant]
    out = [dominant]
    while stack:
        w = stack.pop()
        for i in range(d.rank):
            if w[i] > 0:
                s = d.simple_reflection(w, i)
                if s not in seen:
                    seen.add(s)
                    stack.append(s)
                    out.append(s)
    return tuple(out)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def build_root_datum(t) -> RootDatum:
    """Root datum of a simple Lie algebra, from a :class:`LieType` or a string like ``"E8"``."""
    if isinstance(t, str):
        t = LieType.parse(t)
    return RootDatum(t)


def inner(d: RootDatum, x: Sequence, y: Sequence) -> Fraction:
    return d.inner(x, y)


def dominant_representative(d: RootDatum, x: Sequence) -> Tuple[Weight, int, int]:
    return d.dominant_representative(x)


def fundamental_weight(d: RootDatum, i: int) -> Weight:
    """Dynkin labels of omega_i (1-based, Bourbaki)."""
    return tuple(int(j == i - 1) for j in range(d.rank))
