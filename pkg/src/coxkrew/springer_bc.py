"""Type BC Springer combinatorics.

Nilpotent orbits of ``Lie Sp_2n`` in characteristic 2 are labelled by pairs
``(lambda, kappa)``; :func:`iota` sends them to bipartitions of ``n``.  The
module also carries the exotic orbit counts, which give a second route to the
type BC Kreweras numbers (valid for every ``t``, not only odd ones).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .partitions import Bipartition, Partition, enumerate_bipartitions, enumerate_partitions, pair_stats
from .qlaurent import ONE, IntLaurentPoly, QRational, monomial, q_number

__all__ = [
    "InvalidOmega",
    "OmegaPair",
    "enumerate_omega",
    "iota",
    "iota_inverse",
    "iota_inverse_search",
    "critical_values",
    "split",
    "phi_C",
    "collapse_C",
    "orbit_count_exotic",
    "orbit_count_sun",
    "level_stratum_closed_form",
    "level_stratum_sum_check",
    "exterior_gen_poly",
    "exterior_gen_poly_complement",
    "kreweras_via_orbit",
]


class InvalidOmega(ValueError):
    pass


@dataclass(frozen=True)
class OmegaPair:
    """``(lambda, kappa)``; ``kappa`` is stored as ``((r, kappa(r)), ...)`` over distinct parts, descending."""

    lam: Partition
    kappa: tuple[tuple[int, int], ...]

    def __init__(self, lam, kappa: Mapping[int, int] | tuple = ()):
        lam = Partition(lam)
        kap = dict(kappa)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "kappa", tuple(sorted(kap.items(), reverse=True)))
        self.validate()

    def k(self, r: int) -> int:
        """``kappa(r)``, with ``kappa(0) = 0``."""
        if r == 0:
            return 0
        return dict(self.kappa)[r]

    def validate(self) -> None:
        lam, kap = self.lam, dict(self.kappa)
        if lam.size % 2:
            raise InvalidOmega(f"|lambda| = {lam.size} is odd")
        if set(kap) != set(lam):
            raise InvalidOmega(f"kappa must be defined exactly on the parts of {lam}")
        mult = Counter(lam)
        for r, k in kap.items():
            if r % 2 and mult[r] % 2:
                raise InvalidOmega(f"odd part {r} has odd multiplicity")
            if not 0 <= 2 * k <= r:
                raise InvalidOmega(f"kappa({r}) = {k} out of range")
            if mult[r] % 2 and 2 * k != r:
                raise InvalidOmega(f"kappa({r}) must be {r}/2 since m({r}) is odd")
        vals = sorted(kap)
        for lo, hi in zip(vals, vals[1:]):
            if kap[lo] > kap[hi] or lo - kap[lo] > hi - kap[hi]:
                raise InvalidOmega(f"kappa not monotone between {lo} and {hi}")

    @property
    def n(self) -> int:
        return self.lam.size // 2

    def __str__(self) -> str:
        ks = ",".join(f"{r}:{k}" for r, k in self.kappa)
        return f"({self.lam}, {{{ks}}})"


def _kappa_choices(values: list[int], mult: Counter, i: int, prev: tuple[int, int] | None) -> Iterator[list[int]]:
    if i == len(values):
        yield []
        return
    r = values[i]
    if mult[r] % 2:
        options = [r // 2] if r % 2 == 0 else []
    else:
        options = range(r // 2 + 1)
    for k in options:
        if prev is not None:
            pr, pk = prev
            if k > pk or r - k > pr - pk:
                continue
        for rest in _kappa_choices(values, mult, i + 1, (r, k)):
            yield [k] + rest


def enumerate_omega(n: int) -> list[OmegaPair]:
    """All valid ``(lambda, kappa)`` with ``|lambda| = 2n``."""
    out = []
    for lam in enumerate_partitions(2 * n):
        mult = Counter(lam)
        if any(r % 2 and m % 2 for r, m in mult.items()):
            continue
        values = sorted(mult, reverse=True)
        for ks in _kappa_choices(values, mult, 0, None):
            out.append(OmegaPair(lam, dict(zip(values, ks))))
    return out


# -- iota ------------------------------------------------------------------------------------

def _c_sequence(w: OmegaPair, s: int) -> list[int]:
    lam = w.lam
    if 2 * s < lam.length:
        raise ValueError("need 2s >= l(lambda)")
    c: list[int] = []
    i = 1
    while i <= 2 * s + 1:
        r = lam.part(i)
        k = w.k(r)
        if 2 * k == r:
            c.append(r // 2)
            i += 1
            continue
        if i == 2 * s + 1 or lam.part(i + 1) != r:
            raise InvalidOmega(f"{w}: position {i} cannot be paired")
        c += [k, r - k]
        i += 2
    return c


def _iota_at(w: OmegaPair, s: int) -> Bipartition:
    c = _c_sequence(w, s)
    return Bipartition(Partition(c[0::2]), Partition(c[1::2]))


def iota(w: OmegaPair) -> Bipartition:
    """The bijection onto bipartitions of ``n``.

    >>> str(iota(OmegaPair((1, 1, 1, 1), {1: 0})))
    '((),(1,1))'
    """
    s = (w.lam.length + 1) // 2
    b = _iota_at(w, s)
    assert b == _iota_at(w, s + 1), w
    return b


def iota_inverse(b: Bipartition) -> OmegaPair:
    """Rebuild ``(lambda, kappa)``: pair blocks sit exactly at the strict ascents of the c-sequence."""
    c = b.interleaved(2 * max(b.mu.length, b.nu.length) + 3)
    lam: list[int] = []
    kap: dict[int, int] = {}
    i = 0
    while i < len(c):
        if i + 1 < len(c) and c[i] < c[i + 1]:
            r = c[i] + c[i + 1]
            lam += [r, r]
            kap[r] = c[i]
            i += 2
        else:
            if c[i]:
                lam.append(2 * c[i])
                kap[2 * c[i]] = c[i]
            i += 1
    w = OmegaPair(Partition(sorted(lam, reverse=True)), kap)
    if iota(w) != b:
        raise AssertionError(f"reconstruction failed for {b}")
    return w


@lru_cache(maxsize=None)
def _iota_table(n: int) -> dict[Bipartition, OmegaPair]:
    table: dict[Bipartition, OmegaPair] = {}
    for w in enumerate_omega(n):
        b = iota(w)
        if b in table:
            raise AssertionError(f"iota not injective: {table[b]} and {w}")
        table[b] = w
    return table


def iota_inverse_search(b: Bipartition) -> OmegaPair:
    """Inverse by exhaustive search over Omega (small n only)."""
    return _iota_table(b.size)[b]


# -- critical values -------------------------------------------------------------------------

def critical_values(w: OmegaPair) -> set[int]:
    vals = sorted(set(w.lam))
    out = set()
    for r in vals:
        k = w.k(r)
        if k == 0:
            continue
        if any(w.k(x) >= k for x in vals if x < r):
            continue
        # strict increase of r - kappa(r) upward; makes odd multiplicity imply critical
        if any(x - w.k(x) <= r - k for x in vals if x > r):
            continue
        out.add(r)
    return out


def split(w: OmegaPair) -> tuple[OmegaPair, OmegaPair]:
    """``(distinguished, induced)`` parts with ``lambda~ + lambda' = lambda`` as multisets."""
    crit = critical_values(w)
    mult = Counter(w.lam)
    tilde = {r: (1 if mult[r] % 2 else 2) if r in crit else 0 for r in mult}
    lt = Partition(sorted([r for r, m in tilde.items() for _ in range(m)], reverse=True))
    lp = Partition(sorted([r for r in mult for _ in range(mult[r] - tilde[r])], reverse=True))
    dist = OmegaPair(lt, {r: w.k(r) for r in set(lt)})
    induced = OmegaPair(lp, {r: 0 for r in set(lp)})
    return dist, induced


# -- Phi^C and collapse -----------------------------------------------------------------------

def _interleave(b: Bipartition) -> list[int]:
    return b.interleaved(2 * max(b.mu.length, b.nu.length) + 2)


def phi_C(b: Bipartition) -> Partition:
    """Average every strict ascent of ``(2mu_1, 2nu_1, 2mu_2, ...)``.

    >>> phi_C(Bipartition((), (2,)))
    Partition((2, 2))
    """
    a = [2 * x for x in _interleave(b)]
    out = list(a)
    last = -2
    for i in range(len(a) - 1):
        if a[i] < a[i + 1]:
            assert i > last + 1, ("overlapping ascents", b)
            out[i] = out[i + 1] = (a[i] + a[i + 1]) // 2
            last = i
    return Partition(out)


def collapse_C(b: Bipartition) -> Bipartition:
    """Replace ``mu_i < nu_i - 1`` and ``nu_i < mu_{i+1} + 1`` pairs by their floor/ceil means."""
    a = _interleave(b)
    out = list(a)
    fired = -2
    for i in range(len(a) - 1):
        # i even <-> (mu_j, nu_j); i odd <-> (nu_j, mu_{j+1})
        fire = a[i] < a[i + 1] - 1 if i % 2 == 0 else a[i] < a[i + 1] + 1
        if not fire:
            continue
        lo, hi = (a[i] + a[i + 1]) // 2, (a[i] + a[i + 1] + 1) // 2
        if (lo, hi) == (a[i], a[i + 1]):
            continue
        assert i > fired + 1, ("overlapping substitutions", b)
        out[i], out[i + 1] = lo, hi
        fired = i
    return Bipartition(Partition(out[0::2]), Partition(out[1::2]))


# -- orbit counts -----------------------------------------------------------------------------

def _qm1_prod(rng) -> IntLaurentPoly:
    res = ONE
    for i in rng:
        res = res * (monomial(2 * i) - ONE)
    return res


def orbit_count_exotic(b: Bipartition) -> IntLaurentPoly:
    """``|O_{mu,nu}(F_q)|`` as an integer polynomial.

    >>> str(orbit_count_exotic(Bipartition((1,), ())))
    '-1 + q^2'
    """
    n = b.size
    st = pair_stats(b)
    num = _qm1_prod(range(1, n + 1))
    den = ONE
    for m in st.m.values():
        den = den * _qm1_prod(range(1, m + 1))
    return num.exact_div(den).shift(n * n - 2 * st.z + st.d - n)


def orbit_count_sun(b: Bipartition) -> IntLaurentPoly:
    """Same count in the form that uses multiplicities in ``mu + nu`` and the set J."""
    n = b.size
    st = pair_stats(b)
    mult = Counter(b.mu + b.nu)
    J = {r for r, case in st.hm_case.items() if case == 3}

    def inv_prod(top: int) -> IntLaurentPoly:
        res = ONE
        for i in range(1, top + 1):
            res = res * (ONE - monomial(-2 * i))
        return res

    num = inv_prod(n)
    den = ONE
    for r in set(mult) | J:
        den = den * inv_prod(mult[r] - 1 if r in J else mult[r])
    return num.exact_div(den).shift(2 * n * n - 2 * st.z)


def level_stratum_closed_form(n: int, k: int) -> IntLaurentPoly:
    """``q^{(n-k)(n-k-1)} (q^2-1)^{n-k} [[n]]!^2 / ([[n-k]]! [[k]]!^2)`` with ``[[m]] = [m]_{q^2}``."""
    def fact(m: int) -> IntLaurentPoly:
        res = ONE
        for i in range(1, m + 1):
            res = res * q_number(i, 2)
        return res

    num = fact(n) * fact(n) * (monomial(2) - ONE) ** (n - k)
    return num.exact_div(fact(n - k) * fact(k) * fact(k)).shift((n - k) * (n - k - 1))


def level_stratum_sum_check(n: int, k: int) -> bool:
    total = IntLaurentPoly()
    for b in enumerate_bipartitions(n):
        if pair_stats(b).l == k:
            total = total + orbit_count_exotic(b)
    return total == level_stratum_closed_form(n, k)


# -- exterior powers ------------------------------------------------------------------------

def exterior_gen_poly(b: Bipartition) -> list[IntLaurentPoly]:
    """``[<Q, wedge^0 V>, ..., <Q, wedge^n V>]``: coefficients of ``prod_{j<=l} (1 + y q^{2j-1})``."""
    n, l = b.size, pair_stats(b).l
    coeffs = [ONE] + [IntLaurentPoly() for _ in range(n)]
    for j in range(1, l + 1):
        term = monomial(2 * j - 1)
        for i in range(n, 0, -1):
            coeffs[i] = coeffs[i] + coeffs[i - 1] * term
    return coeffs


def exterior_gen_poly_complement(b: Bipartition) -> list[IntLaurentPoly]:
    """The same multiplicities indexed by ``wedge^{n-i}``, i.e. ``y^{n-l} prod (y + q^{2j-1})``."""
    return exterior_gen_poly(b)[::-1]


def kreweras_via_orbit(b: Bipartition, t: int) -> QRational:
    """Kreweras number from the orbit count; works for every ``t``."""
    n, l = b.size, pair_stats(b).l
    num = orbit_count_exotic(b).shift(t * (n - l) + l * l - n * n)
    for j in range(1, l + 1):
        num = num * (monomial(t - 2 * j + 1) - ONE)
    return QRational(num, _qm1_prod(range(1, n + 1)))
