"""q-Catalan, q-Narayana and q-Kreweras numbers for the coincidental types."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .partitions import Bipartition, Partition, c_stat, pair_stats
from .qlaurent import (ONE, ZERO, IntLaurentPoly, QRational, monomial, q_binomial,
                       q_multinomial, q_number, specialize_at_root)
from .springer_bc import kreweras_via_orbit
from .symbolic import Formula, QVColumn
from .types import (BCParabolic, CoxeterType, InvalidLabel, IrrLabel, ParabolicType, Phi,
                    irreducible_labels, parabolic_classes, validate_label)

__all__ = [
    "OddTRequired",
    "TableRow",
    "H3_TABLE",
    "i2_table",
    "catalan",
    "narayana",
    "kreweras",
    "kreweras_poly",
    "is_very_good",
    "phi",
    "in_image_phi",
    "level",
    "qv_multiplicity",
    "refinement_failures",
    "refinement_check",
    "catalan_sum_check",
    "specialize",
]


class OddTRequired(ValueError):
    """The closed type BC formula has ``(t-1)/2`` in it."""


# -- symbolic tables ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    label_tex: str
    formula: Formula
    qv: QVColumn
    parabolic_tex: str = ""


H3_TABLE: dict[Phi, TableRow] = {
    Phi(1, 15): TableRow(r"\phi_{1,15}", Formula.build(None, ("[t-1]", "[t-5]", "[t-9]"), ("[2]", "[6]", "[10]")),
                         QVColumn.build("9", "5", "1"), "triv"),
    Phi(1, 0): TableRow(r"\phi_{1,0}", Formula.build("3t-3"), QVColumn.build(), "H_3"),
    Phi(5, 5): TableRow(r"\phi_{5,5}", Formula.build("2t-10", ("[t-1]",), ("[2]",)),
                        QVColumn.build("1"), r"A_1\times A_1"),
    Phi(5, 2): TableRow(r"\phi_{5,2}", Formula.build("2t-6", ("(q-1)", "[t-1]")), QVColumn.build("1")),
    Phi(3, 6): TableRow(r"\phi_{3,6}", Formula.build("t-7", ("(q-1)", "[t-1]", "[t-5]"), ("[2]",)),
                        QVColumn.build("5", "1")),
    Phi(3, 8): TableRow(r"\phi_{3,8}", Formula.build("t-9", ("[t-1]", "[t-5]"), ("[2]", "[2]")),
                        QVColumn.build("5", "1"), "A_1"),
    Phi(3, 1): TableRow(r"\phi_{3,1}", Formula.build("2t-4", ("(q-1)", "[t-1]")), QVColumn.build("1")),
    Phi(3, 3): TableRow(r"\phi_{3,3}", Formula.build("2t-6", ("[t-1]",), ("[2]",)),
                        QVColumn.build("1"), "I_{2}(5)"),
    Phi(4, 3): TableRow(r"\phi_{4,3}", Formula.build("2t-8", ("(q-1)", "[t-1]")), QVColumn.build("1")),
    Phi(4, 4): TableRow(r"\phi_{4,4}", Formula.build("2t-8", ("[t-1]",), ("[2]",)),
                        QVColumn.build("1"), "A_2"),
}

_I2_TRIV = Formula.build(None, ("[t-1]", "[t-m+1]"), ("[2]", "[m]"))
_I2_TOP = Formula.build("2t-2")
_I2_HALF = Formula.build("t-m+1", ("[t-1]",), ("[2]",))
_I2_GENERIC = Formula.build("t-2r-1", ("(q^{t-1}-1)",))
_I2_EDGE = Formula.build("t-m+1", ("[t-1]",))


def i2_table(m: int, symbolic: bool = False) -> list[tuple[object, TableRow]]:
    """Rows of the I2(m) table, in display order.

    With ``symbolic=True`` the ``phi_{2,r}`` family is a single row keyed by
    ``"r"``; otherwise it is expanded over the admissible ``r``.
    """
    if m < 3:
        raise ValueError("m >= 3")
    rows: list[tuple[object, TableRow]] = [
        (Phi(1, 0), TableRow(r"\phi_{1,0}", _I2_TOP, QVColumn.build(), "I_{2}(m)"))]
    if m % 2 == 0:
        rows += [
            (Phi(1, m // 2, "'"), TableRow(r"\phi_{1,m/2}'", _I2_HALF, QVColumn.build("1"), "A_1'")),
            (Phi(1, m // 2, "''"), TableRow(r"\phi_{1,m/2}''", _I2_HALF, QVColumn.build("1"), "A_1''")),
            (Phi(1, m), TableRow(r"\phi_{1,m}", _I2_TRIV, QVColumn.build("m-1", "1"), "triv")),
        ]
        generic_tex, top_r = r"\phi_{2,r}, r\in [1,m/2-1]", m // 2 - 1
    else:
        rows.append((Phi(1, m), TableRow(r"\phi_{1,m}", _I2_TRIV, QVColumn.build("m-1", "1"), "triv")))
        generic_tex, top_r = r"\phi_{2,r}, r\in [1,(m-3)/2]", (m - 3) // 2
    generic = TableRow(generic_tex, _I2_GENERIC, QVColumn.build("1"))
    if symbolic:
        rows.append(("r", generic))
    else:
        rows += [(Phi(2, r), generic) for r in range(1, top_r + 1)]
    if m % 2:
        rows.append((Phi(2, (m - 1) // 2),
                     TableRow(r"\phi_{2,(m-1)/2}", _I2_EDGE, QVColumn.build("1"), "A_1")))
    return rows


def _table_row(T: CoxeterType, chi: Phi) -> TableRow:
    if T.family == "H3":
        return H3_TABLE[chi]
    for key, row in i2_table(T.m):
        if key == chi:
            return row
    raise InvalidLabel(f"{chi} is not a label of {T}")


# -- Catalan and Narayana -----------------------------------------------------------------------

def catalan(T: CoxeterType, t: int) -> QRational:
    """``prod [t-1+d_i] / [d_i]`` over the degrees."""
    num, den = ONE, ONE
    for d in T.degrees:
        num = num * q_number(t - 1 + d)
        den = den * q_number(d)
    return QRational(num, den)


def narayana(T: CoxeterType, k: int, t: int) -> QRational:
    n, a, e = T.rank, T.step, T.offset
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}]")
    num = monomial((t - a * k - 1) * (n - k)) * q_binomial(n, k, a)
    den = ONE
    for i in range(k):
        num = num * (ONE - monomial(t - 1 - a * i))
        den = den * (ONE - monomial(e + 1 + a * i))
    return QRational(num, den)


# -- Kreweras ---------------------------------------------------------------------------------

def _kreweras_A(lam: Partition, t: int) -> QRational:
    n, l = lam.size, lam.length
    if t - l < 0:
        return QRational(ZERO)
    top = q_multinomial([t - l] + list(lam.multiplicities().values()))
    return QRational(top.shift(t * (n - l) - c_stat(lam)), q_number(t))


def _kreweras_BC(b: Bipartition, t: int) -> QRational:
    if t % 2 == 0:
        raise OddTRequired(f"t = {t} is even")
    n, st = b.size, pair_stats(b)
    half = (t - 1) // 2
    if half - st.l < 0:
        return QRational(ZERO)
    res = monomial(t * (n - st.l) + st.l ** 2 - 2 * st.z + st.d - n)
    for j in range(1, st.L + 1):
        res = res * (monomial(t - 2 * j + 1) - ONE)
    res = res * q_multinomial([half - st.l] + list(st.m.values()), 2)
    return QRational(res)


def kreweras(T: CoxeterType, chi: IrrLabel, t: int) -> QRational:
    """``Krew(W, chi, t; q)`` as an exact rational function.

    Type BC uses the closed form, which needs odd ``t``; use
    :func:`kreweras_poly` (or the orbit-count route) for even ``t``.
    """
    chi = validate_label(T, chi)
    if T.family == "A":
        return _kreweras_A(chi, t)
    if T.family == "BC":
        return _kreweras_BC(chi, t)
    env = {"t": t}
    if T.family == "I2":
        env["m"] = T.m
        env["r"] = chi.b
    return _table_row(T, chi).formula.evaluate(env)


def kreweras_any_t(T: CoxeterType, chi: IrrLabel, t: int) -> QRational:
    """Like :func:`kreweras` but routes even ``t`` in type BC through the orbit counts."""
    if T.family == "BC" and t % 2 == 0:
        return kreweras_via_orbit(validate_label(T, chi), t)
    return kreweras(T, chi, t)


def kreweras_poly(T: CoxeterType, chi: IrrLabel, t: int) -> IntLaurentPoly:
    """Normalized Kreweras number; raises ``NotDivisible`` if it is not a Laurent polynomial."""
    return kreweras_any_t(T, chi, t).normalize()


# -- very good, Phi, level ------------------------------------------------------------------

def is_very_good(T: CoxeterType, t: int) -> bool:
    if T.family == "A":
        return gcd(t, T.n) == 1
    if T.family == "BC":
        return t % 2 == 1
    if T.family == "H3":
        return t % 10 in (1, 5, 9)
    return t % T.m in (1, T.m - 1)


_H3_PHI = {"triv": Phi(1, 15), "A1": Phi(3, 8), "A1xA1": Phi(5, 5),
           "A2": Phi(4, 4), "I2(5)": Phi(3, 3), "H3": Phi(1, 0)}


def phi(T: CoxeterType, P: ParabolicType) -> IrrLabel:
    """The map from parabolic classes to irreducible labels."""
    if P not in parabolic_classes(T) and not (T.family == "BC" and isinstance(P, BCParabolic)):
        raise InvalidLabel(f"{P} is not a parabolic class of {T}")
    if T.family == "A":
        return Partition(sorted(P, reverse=True))
    if T.family == "BC":
        b, parts = P
        if b + sum(parts) != T.n:
            raise InvalidLabel(f"{P} does not have size {T.n}")
        a = sorted(parts, reverse=True)
        m = sum(1 for x in a if x > b)
        return Bipartition(Partition([b] * (m + 1) + a[m:]), Partition(x - b for x in a[:m]))
    if T.family == "H3":
        return _H3_PHI[P]
    m = T.m
    if P == "triv":
        return Phi(1, m)
    if P == f"I2({m})":
        return Phi(1, 0)
    if P == "A1":
        return Phi(2, (m - 1) // 2)
    return Phi(1, m // 2, P[2:])


def in_image_phi(T: CoxeterType, chi: IrrLabel) -> bool:
    chi = validate_label(T, chi)
    if T.family == "A":
        return True
    if T.family == "BC":
        mu, nu = chi.mu, chi.nu
        return all(mu.part(i) == mu.part(1) for i in range(1, nu.length + 2)) or not mu
    return any(phi(T, P) == chi for P in parabolic_classes(T))


def qv_multiplicity(T: CoxeterType, chi: IrrLabel) -> IntLaurentPoly:
    """``<Q_chi, V>`` as a polynomial in q."""
    chi = validate_label(T, chi)
    if T.family == "A":
        return sum((monomial(i) for i in range(1, chi.length)), IntLaurentPoly())
    if T.family == "BC":
        return sum((monomial(2 * i - 1) for i in range(1, pair_stats(chi).l + 1)), IntLaurentPoly())
    env = {"m": T.m} if T.family == "I2" else {}
    return _table_row(T, chi).qv.evaluate(env)


def level(T: CoxeterType, chi: IrrLabel) -> int:
    chi = validate_label(T, chi)
    if T.family == "A":
        return chi.length - 1
    if T.family == "BC":
        return pair_stats(chi).l
    return _table_row(T, chi).qv.at_one()


# -- checks --------------------------------------------------------------------------------

def refinement_failures(T: CoxeterType, t: int) -> list[int]:
    """Levels ``k`` at which the Kreweras numbers of level ``k`` do not sum to the Narayana number.

    ``-1`` in the list flags ``sum_k Nar != Cat``.
    """
    sums = {k: QRational(ZERO) for k in range(T.rank + 1)}
    for chi in irreducible_labels(T):
        k = level(T, chi)
        sums[k] = sums[k] + kreweras_any_t(T, chi, t)
    bad = [k for k, s in sums.items() if s != narayana(T, k, t)]
    total = QRational(ZERO)
    for k in range(T.rank + 1):
        total = total + narayana(T, k, t)
    if total != catalan(T, t):
        bad.append(-1)
    return bad


def refinement_check(T: CoxeterType, t: int) -> bool:
    return not refinement_failures(T, t)


def catalan_sum_check(T: CoxeterType, t: int) -> bool:
    total = QRational(ZERO)
    for chi in irreducible_labels(T):
        total = total + kreweras_any_t(T, chi, t)
    return total == catalan(T, t)


def specialize(T: CoxeterType, chi: IrrLabel, t: int, d: int) -> int:
    """Value at a primitive d-th root of unity; raises ``NonConstant`` when not an integer."""
    return specialize_at_root(kreweras_poly(T, chi, t), d)
