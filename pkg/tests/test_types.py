import pytest
import sympy as sp

from coxkrew.types import CoxeterType, InvalidLabel, Phi, irreducible_labels, parabolic_classes, validate_label


@pytest.mark.parametrize("T, degrees, h", [
    (CoxeterType.A(4), [2, 3, 4], 4),
    (CoxeterType.BC(3), [2, 4, 6], 6),
    (CoxeterType.H3(), [2, 6, 10], 10),
    (CoxeterType.I2(7), [2, 7], 7),
])
def test_degrees(T, degrees, h):
    assert T.degrees == degrees
    assert T.coxeter_number == h
    assert T.exponents == [d - 1 for d in degrees]


def test_names():
    assert [str(T) for T in (CoxeterType.A(4), CoxeterType.BC(2), CoxeterType.H3(), CoxeterType.I2(5))] == \
        ["A3", "BC2", "H3", "I2(5)"]
    assert str(Phi(3, 8)) == "phi_{3,8}"


def _class_count(T):
    if T.family == "A":
        return sp.partition(T.n)
    if T.family == "BC":
        return sum(sp.partition(k) * sp.partition(T.n - k) for k in range(T.n + 1))
    if T.family == "H3":
        return 10
    m = T.m
    return (m + 6) // 2 if m % 2 == 0 else (m + 3) // 2


@pytest.mark.parametrize("T", [CoxeterType.A(n) for n in range(2, 8)] + [CoxeterType.BC(n) for n in range(1, 6)]
                         + [CoxeterType.H3()] + [CoxeterType.I2(m) for m in range(3, 13)], ids=str)
def test_label_counts(T):
    labels = irreducible_labels(T)
    assert len(labels) == len(set(labels)) == _class_count(T)
    assert all(validate_label(T, chi) == chi for chi in labels)


def test_invalid_label():
    with pytest.raises(InvalidLabel):
        validate_label(CoxeterType.H3(), Phi(2, 2))


def test_dihedral_parabolics():
    assert [str(p) for p in parabolic_classes(CoxeterType.I2(5))] == ["triv", "A1", "I2(5)"]
    assert [str(p) for p in parabolic_classes(CoxeterType.I2(6))] == ["triv", "A1'", "A1''", "I2(6)"]
