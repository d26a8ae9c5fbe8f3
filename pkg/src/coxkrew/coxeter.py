"""Concrete coincidental Coxeter groups, absolute order and noncrossing chains.

Every group is enumerated once into a numpy multiplication table; elements
are then plain integer indices (0 is the identity).  The realizations are
permutations (A), signed permutations (BC), exact 3x3 matrices over Q(sqrt 5)
(H3) and the dihedral normal form (I2).
"""
from __future__ import annotations

import math
import os
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Hashable, Sequence

import numpy as np

from .partitions import Partition
from .types import BCParabolic, CoxeterType, ParabolicType

__all__ = [
    "SizeLimit",
    "InvalidDelta",
    "QuadExt",
    "Group",
    "build_group",
    "absolute_length",
    "leq_absolute",
    "enumerate_nc_chains",
    "delta_of",
    "chain_of",
    "cyclic_step",
    "fixed_space_class",
    "count_fixed_chains",
    "H3_REFLECTION_WORDS",
    "H3_ROTATION_WORDS",
    "DEFAULT_MAX_ORDER",
    "DEFAULT_CHAIN_BUDGET",
]

DEFAULT_MAX_ORDER = 5000
DEFAULT_CHAIN_BUDGET = 10 ** 6


class SizeLimit(RuntimeError):
    """A group or chain enumeration would exceed its configured budget."""


class InvalidDelta(ValueError):
    pass


# -- Q(sqrt 5) -----------------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadExt:
    """``a + b*sqrt(5)`` with rational ``a``, ``b``.

    >>> phi = QuadExt(Fraction(1, 2), Fraction(1, 2))
    >>> phi * phi == phi + 1
    True
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @staticmethod
    def _c(x) -> "QuadExt":
        return x if isinstance(x, QuadExt) else QuadExt(Fraction(x))

    def __add__(self, o):
        o = self._c(o)
        return QuadExt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-self._c(o))

    def __rsub__(self, o):
        return self._c(o) - self

    def __mul__(self, o):
        o = self._c(o)
        return QuadExt(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        norm = self.a * self.a - 5 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("zero in Q(sqrt 5)")
        return QuadExt(self.a / norm, -self.b / norm)

    def __truediv__(self, o):
        return self * self._c(o).inverse()

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, o) -> bool:
        if not isinstance(o, QuadExt):
            try:
                o = QuadExt(Fraction(o))
            except TypeError:
                return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(5)

    def __repr__(self) -> str:
        return f"QuadExt({self.a}, {self.b})"


Matrix = tuple  # row-major tuple of tuples of QuadExt


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    n = len(x)
    return tuple(tuple(sum((x[i][k] * y[k][j] for k in range(n)), QuadExt()) for j in range(n))
                 for i in range(n))


def kernel(m: Matrix) -> list[list[QuadExt]]:
    """Basis of the null space by exact Gaussian elimination."""
    rows = [list(r) for r in m]
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [QuadExt() for _ in range(ncols)]
        v[free] = QuadExt(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        basis.append(v)
    return basis


def _h3_generators() -> list[Matrix]:
    # Cartan realization on the simple-root basis; s_i(a_j) = a_j + 2cos(pi/m_ij) a_i.
    # m_12 = 3, m_23 = 5: the ordering under which the labelled r_i / o_i words
    # below are 30 distinct elements rotated by conjugation with c.
    golden = QuadExt(Fraction(1, 2), Fraction(1, 2))  # 2cos(pi/5)
    bond = {(0, 1): QuadExt(1), (1, 2): golden, (0, 2): QuadExt(0)}
    gens = []
    for i in range(3):
        cols = []
        for j in range(3):
            col = [QuadExt(1) if k == j else QuadExt(0) for k in range(3)]
            if i == j:
                col[i] = QuadExt(-1)
            else:
                col[i] = col[i] + bond[tuple(sorted((i, j)))]
            cols.append(col)
        gens.append(tuple(tuple(cols[j][k] for j in range(3)) for k in range(3)))
    return gens


# -- generic group ------------------------------------------------------------------------------

@dataclass(eq=False)
class Group:
    """A finite Coxeter group enumerated from its simple reflections."""

    ctype: CoxeterType
    elements: list
    mul: np.ndarray
    inv: np.ndarray
    gens: list[int]
    words: list[tuple[int, ...]]
    reflections: list[int] = field(default_factory=list)
    abs_len: np.ndarray | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    @property
    def coxeter_element(self) -> int:
        return self.word(range(1, len(self.gens) + 1))

    @property
    def h(self) -> int:
        return self.ctype.coxeter_number

    def word(self, letters: Sequence[int]) -> int:
        """``s_{a} s_{b} ...`` for 1-indexed generator letters."""
        w = 0
        for a in letters:
            w = int(self.mul[w, self.gens[a - 1]])
        return w

    def m(self, *xs: int) -> int:
        w = 0
        for x in xs:
            w = int(self.mul[w, x])
        return w

    def conj(self, x: int, y: int) -> int:
        """``x y x^-1``."""
        return int(self.mul[self.mul[x, y], self.inv[x]])


def _enumerate(ctype: CoxeterType, gens: list[Hashable], op: Callable, identity: Hashable,
               max_order: int) -> Group:
    index = {identity: 0}
    elements = [identity]
    words: list[tuple[int, ...]] = [()]
    parent: list[tuple[int, int]] = [(-1, -1)]
    right: list[list[int]] = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        row = []
        for g_idx, g in enumerate(gens):
            x = op(elements[i], g)
            j = index.get(x)
            if j is None:
                j = len(elements)
                if j >= max_order:
                    raise SizeLimit(f"{ctype} has more than {max_order} elements")
                index[x] = j
                elements.append(x)
                words.append(words[i] + (g_idx + 1,))
                parent.append((i, g_idx))
                queue.append(j)
            row.append(j)
        right.append(row)
    N = len(elements)
    R = np.array(right, dtype=np.int32)
    mul = np.empty((N, N), dtype=np.int32)
    mul[:, 0] = np.arange(N)
    for v in range(1, N):  # BFS order: parents come first
        p, g = parent[v]
        mul[:, v] = R[mul[:, p], g]
    inv = np.argmax(mul == 0, axis=1).astype(np.int32)
    gen_idx = [index[g] for g in gens]
    G = Group(ctype, elements, mul, inv, gen_idx, words)
    G.reflections = sorted({G.conj(w, s) for w in range(N) for s in gen_idx})
    G.abs_len = _abs_lengths(G)
    return G


def _abs_lengths(G: Group) -> np.ndarray:
    dist = np.full(G.order, -1, dtype=np.int32)
    dist[0] = 0
    frontier = np.array([0])
    refl = np.array(G.reflections)
    k = 0
    while frontier.size:
        k += 1
        nxt = np.unique(G.mul[np.ix_(frontier, refl)].ravel())
        nxt = nxt[dist[nxt] < 0]
        dist[nxt] = k
        frontier = nxt
    return dist


def _expected_order(T: CoxeterType) -> int:
    if T.family == "A":
        return math.factorial(T.n)
    if T.family == "BC":
        return 2 ** T.n * math.factorial(T.n)
    if T.family == "H3":
        return 120
    return 2 * T.n


@lru_cache(maxsize=None)
def build_group(T: CoxeterType, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Enumerate ``W`` with standard simple reflections ``s_1, ..., s_n``; ``c = s_1 ... s_n``."""
    if _expected_order(T) > max_order:
        raise SizeLimit(f"|{T}| = {_expected_order(T)} exceeds {max_order}")
    if T.family == "A":
        n = T.n
        gens = []
        for i in range(n - 1):
            p = list(range(n))
            p[i], p[i + 1] = p[i + 1], p[i]
            gens.append(tuple(p))
        G = _enumerate(T, gens, lambda x, y: tuple(x[j] for j in y), tuple(range(n)), max_order)
    elif T.family == "BC":
        n = T.n
        # signed permutation as images of 1..n; s_1 flips the sign of 1, s_{i+1} = (i, i+1)
        gens = [tuple([-1] + list(range(2, n + 1)))]
        for i in range(1, n):
            p = list(range(1, n + 1))
            p[i - 1], p[i] = p[i], p[i - 1]
            gens.append(tuple(p))

        def op(x, y):
            return tuple(x[abs(j) - 1] * (1 if j > 0 else -1) for j in y)

        G = _enumerate(T, gens, op, tuple(range(1, n + 1)), max_order)
    elif T.family == "H3":
        one = tuple(tuple(QuadExt(int(i == j)) for j in range(3)) for i in range(3))
        G = _enumerate(T, _h3_generators(), mat_mul, one, max_order)
    else:
        m = T.m

        def op(x, y):
            (k1, f1), (k2, f2) = x, y
            return ((k1 + (-k2 if f1 else k2)) % m, f1 ^ f2)

        # rho^k sigma^f; s_1 = sigma, s_2 = sigma rho so that s_1 s_2 = rho
        G = _enumerate(T, [(0, 1), (m - 1, 1)], op, (0, 0), max_order)
    assert G.order == _expected_order(T), (T, G.order)
    return G


# -- absolute order -------------------------------------------------------------------------

def absolute_length(G: Group, w: int) -> int:
    return int(G.abs_len[w])


def leq_absolute(G: Group, u: int, w: int) -> bool:
    """``u <=_a w`` via additivity of reflection length."""
    return G.abs_len[u] + G.abs_len[G.mul[G.inv[u], w]] == G.abs_len[w]


@lru_cache(maxsize=None)
def _interval(G: Group) -> tuple[tuple[int, ...], dict[int, tuple[int, ...]]]:
    c = G.coxeter_element
    inv_c = G.mul[G.inv, c]
    below = tuple(int(u) for u in np.nonzero(G.abs_len + G.abs_len[inv_c] == G.abs_len[c])[0])
    above = {u: tuple(v for v in below if leq_absolute(G, u, v)) for u in below}
    return below, above


def enumerate_nc_chains(G: Group, s: int, budget: int | None = None) -> list[tuple[int, ...]]:
    """All multichains ``w_1 <=_a ... <=_a w_s <=_a c``."""
    if s < 1:
        raise ValueError("s >= 1")
    if budget is None:
        budget = int(os.environ.get("COXKREW_BUDGET", DEFAULT_CHAIN_BUDGET))
    below, above = _interval(G)

    # count first so the budget check does not need to materialize anything
    @lru_cache(maxsize=None)
    def count(u: int, k: int) -> int:
        return 1 if k == 1 else sum(count(v, k - 1) for v in above[u])

    total = sum(count(u, s) for u in below)
    if total > budget:
        raise SizeLimit(f"{total} chains exceed the budget {budget}")
    chains: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...]):
        if len(prefix) == s:
            chains.append(prefix)
            return
        for v in above[prefix[-1]]:
            extend(prefix + (v,))

    for u in below:
        extend((u,))
    return chains


def delta_of(G: Group, chain: Sequence[int]) -> tuple[int, ...]:
    c = G.coxeter_element
    nxt = list(chain[1:]) + [c]
    return tuple(G.m(int(G.inv[w]), v) for w, v in zip(chain, nxt))


def chain_of(G: Group, deltas: Sequence[int]) -> tuple[int, ...]:
    c = G.coxeter_element
    prod = G.m(*deltas) if deltas else 0
    w = G.m(c, int(G.inv[prod]))
    chain = [w]
    for d in deltas[:-1]:
        w = G.m(w, d)
        chain.append(w)
    seq = chain + [c]
    if not all(leq_absolute(G, a, b) for a, b in zip(seq, seq[1:])):
        raise InvalidDelta(f"{tuple(deltas)} is not a delta-sequence")
    return tuple(chain)


def cyclic_step(G: Group, deltas: Sequence[int]) -> tuple[int, ...]:
    """``(d_1, ..., d_s) -> (c d_s c^-1, d_1, ..., d_{s-1})``."""
    return (G.conj(G.coxeter_element, deltas[-1]),) + tuple(deltas[:-1])


# -- fixed spaces ----------------------------------------------------------------------------

def _cycles(perm: Sequence[int]) -> list[list[int]]:
    """Cycles of a (signed) permutation given as 1- or 0-based images, keyed by absolute value."""
    n = len(perm)
    base = 1 if all(abs(x) >= 1 for x in perm) and min(map(abs, perm)) == 1 else 0
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = abs(perm[j]) - base
        out.append(cyc)
    return out


def _h3_fixed_class(G: Group, w: int) -> str:
    M = G.elements[w]
    one = QuadExt(1)
    diff = tuple(tuple(M[i][j] - (one if i == j else 0) for j in range(3)) for i in range(3))
    ker = kernel(diff)
    if len(ker) == 3:
        return "triv"
    if len(ker) == 0:
        return "H3"
    if len(ker) == 2:
        return "A1"
    v = ker[0]
    fixing = 0
    for r in G.reflections:
        R = G.elements[r]
        if all(sum((R[i][k] * v[k] for k in range(3)), QuadExt()) == v[i] for i in range(3)):
            fixing += 1
    return {5: "I2(5)", 3: "A2", 2: "A1xA1"}[fixing]


def fixed_space_class(G: Group, w: int) -> ParabolicType:
    """The parabolic class ``P`` with ``V^w`` in ``W . V^P``."""
    T = G.ctype
    x = G.elements[w]
    if T.family == "A":
        return Partition(sorted((len(c) for c in _cycles(x)), reverse=True))
    if T.family == "BC":
        b, parts = 0, []
        for cyc in _cycles(x):
            sign = 1
            for i in cyc:
                sign *= 1 if x[i] > 0 else -1
            if sign < 0:
                b += len(cyc)
            else:
                parts.append(len(cyc))
        return BCParabolic(b, Partition(sorted(parts, reverse=True)))
    if T.family == "H3":
        return _h3_fixed_class(G, w)
    k, f = x
    m = T.m
    if not f:
        return "triv" if k == 0 else f"I2({m})"
    if m % 2:
        return "A1"
    return "A1'" if k % 2 == 0 else "A1''"


@lru_cache(maxsize=None)
def _class_table(G: Group) -> dict[int, ParabolicType]:
    below, _ = _interval(G)
    return {w: fixed_space_class(G, w) for w in below}


def count_fixed_chains(G: Group, s: int, d: int, cls: ParabolicType,
                       chains: list[tuple[int, ...]] | None = None) -> int:
    """Chains with ``V^{w_1}`` in the class of ``cls`` fixed by the order-``d`` element of ``Z/sh``."""
    sh = s * G.h
    if sh % d:
        raise ValueError(f"{d} does not divide {sh}")
    power = sh // d
    if chains is None:
        chains = enumerate_nc_chains(G, s)
    classes = _class_table(G)
    total = 0
    for ch in chains:
        if classes[ch[0]] != cls:
            continue
        delta = delta_of(G, ch)
        x = delta
        for _ in range(power):
            x = cyclic_step(G, x)
        total += x == delta
    return total


# -- H3 labels -------------------------------------------------------------------------------

H3_REFLECTION_WORDS = ("1", "2", "1232321", "232", "31231",
                       "121", "123123121", "2312312312312", "323123123", "323",
                       "3", "12321", "2312312", "31231231231", "23232")
H3_ROTATION_WORDS = ("12", "12312321", "1232312312", "23231231", "3123",
                     "23", "1231", "1232", "231231", "123232",
                     "31", "123121", "123123123121", "323123123123", "323123")


def h3_labelled(G: Group) -> tuple[list[int], list[int]]:
    """``([r_1..r_15], [o_1..o_15])`` as element indices."""
    r = [G.word([int(ch) for ch in wd]) for wd in H3_REFLECTION_WORDS]
    o = [G.word([int(ch) for ch in wd]) for wd in H3_ROTATION_WORDS]
    return r, o
