"""Coincidental Coxeter types, irreducible labels and parabolic classes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .partitions import Bipartition, Partition, enumerate_bipartitions, enumerate_partitions

__all__ = [
    "CoxeterType",
    "Phi",
    "BCParabolic",
    "IrrLabel",
    "ParabolicType",
    "InvalidLabel",
    "irreducible_labels",
    "parabolic_classes",
    "validate_label",
    "H3_LABELS",
    "H3_PARABOLICS",
]


class InvalidLabel(ValueError):
    pass


@dataclass(frozen=True)
class CoxeterType:
    """One of ``A`` (on ``n`` letters, rank ``n-1``), ``BC`` (rank n), ``H3``, ``I2`` (``n = m``).

    Exponents are ``e, e+a, ..., e+(rank-1)a``.
    """

    family: str
    n: int = 3

    def __post_init__(self):
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam == "A" and self.n < 2:
            raise ValueError("type A needs at least 2 letters")
        elif fam == "BC" and self.n < 1:
            raise ValueError("type BC needs rank >= 1")
        elif fam == "H3":
            object.__setattr__(self, "n", 3)
        elif fam == "I2" and self.n < 3:
            raise ValueError("I2(m) needs m >= 3")
        elif fam not in ("A", "BC", "H3", "I2"):
            raise ValueError(f"unknown family {self.family!r}")

    @classmethod
    def A(cls, letters: int) -> "CoxeterType":
        return cls("A", letters)

    @classmethod
    def BC(cls, rank: int) -> "CoxeterType":
        return cls("BC", rank)

    @classmethod
    def H3(cls) -> "CoxeterType":
        return cls("H3", 3)

    @classmethod
    def I2(cls, m: int) -> "CoxeterType":
        return cls("I2", m)

    @property
    def rank(self) -> int:
        if self.family == "A":
            return self.n - 1
        if self.family == "I2":
            return 2
        return self.n

    @property
    def step(self) -> int:
        """Common difference ``a`` of the exponents."""
        return {"A": 1, "BC": 2, "H3": 4}.get(self.family, self.n - 2)

    @property
    def offset(self) -> int:
        """Smallest exponent ``e``."""
        return 1

    @property
    def exponents(self) -> list[int]:
        return [self.offset + i * self.step for i in range(self.rank)]

    @property
    def degrees(self) -> list[int]:
        return [e + 1 for e in self.exponents]

    @property
    def coxeter_number(self) -> int:
        return max(self.degrees)

    @property
    def m(self) -> int:
        if self.family != "I2":
            raise AttributeError("only I2(m) has m")
        return self.n

    def __str__(self) -> str:
        if self.family == "A":
            return f"A{self.n - 1}"
        if self.family == "BC":
            return f"BC{self.n}"
        if self.family == "H3":
            return "H3"
        return f"I2({self.n})"


@dataclass(frozen=True, order=True)
class Phi:
    """``phi_{dim, b}`` in Carter's notation; ``prime`` separates the two even-m characters."""

    dim: int
    b: int
    prime: str = ""

    def __str__(self) -> str:
        return f"phi_{{{self.dim},{self.b}}}{self.prime}"

    def latex(self) -> str:
        return f"\\phi_{{{self.dim},{self.b}}}{self.prime}"


class BCParabolic(NamedTuple):
    """``H_b x S_{a_1} x ... x S_{a_k}`` with ``b + sum a = n``."""

    b: int
    parts: Partition

    def __str__(self) -> str:
        return f"B{self.b}x{self.parts}"


IrrLabel = Union[Partition, Bipartition, Phi]
ParabolicType = Union[Partition, BCParabolic, str]

H3_LABELS = (Phi(1, 0), Phi(3, 1), Phi(5, 2), Phi(4, 3), Phi(3, 3),
             Phi(4, 4), Phi(5, 5), Phi(3, 6), Phi(3, 8), Phi(1, 15))
H3_PARABOLICS = ("triv", "A1", "A1xA1", "A2", "I2(5)", "H3")


def irreducible_labels(T: CoxeterType) -> list[IrrLabel]:
    if T.family == "A":
        return enumerate_partitions(T.n)
    if T.family == "BC":
        return enumerate_bipartitions(T.n)
    if T.family == "H3":
        return list(H3_LABELS)
    m = T.n
    if m % 2:
        return [Phi(1, 0), Phi(1, m)] + [Phi(2, r) for r in range(1, (m - 1) // 2 + 1)]
    return ([Phi(1, 0), Phi(1, m // 2, "'"), Phi(1, m // 2, "''"), Phi(1, m)]
            + [Phi(2, r) for r in range(1, m // 2)])


def validate_label(T: CoxeterType, chi) -> IrrLabel:
    if T.family == "A":
        if not isinstance(chi, Partition) or chi.size != T.n:
            raise InvalidLabel(f"{chi!s} is not a partition of {T.n}")
    elif T.family == "BC":
        if not isinstance(chi, Bipartition) or chi.size != T.n:
            raise InvalidLabel(f"{chi!s} is not a bipartition of {T.n}")
    elif chi not in irreducible_labels(T):
        raise InvalidLabel(f"{chi!s} is not an irreducible label of {T}")
    return chi


def parabolic_classes(T: CoxeterType) -> list[ParabolicType]:
    """Conjugacy classes of parabolic subgroups."""
    if T.family == "A":
        return enumerate_partitions(T.n)
    if T.family == "BC":
        return [BCParabolic(b, p) for b in range(T.n, -1, -1)
                for p in enumerate_partitions(T.n - b)]
    if T.family == "H3":
        return list(H3_PARABOLICS)
    if T.n % 2:
        return ["triv", "A1", f"I2({T.n})"]
    return ["triv", "A1'", "A1''", f"I2({T.n})"]
