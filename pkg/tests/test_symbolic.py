import pytest

from coxkrew.qlaurent import q_number
from coxkrew.symbolic import Affine, Formula, QVColumn


def test_affine_parse_and_render():
    a = Affine.parse("2t-10")
    assert a({"t": 11}) == 12
    assert a.render() == "2t-10"
    assert Affine.parse("t-2r-1")({"t": 9, "r": 2}) == 4
    assert Affine.parse("t-m+1").bind({"m": 5}).render() == "t-4"


def test_formula_render_and_evaluate():
    f = Formula.build("t-9", ("[t-1]", "[t-5]"), ("[2]", "[2]"))
    assert f.render() == "q^{t-9}[t-1][t-5]/[2]^2"
    value = f.evaluate({"t": 11}).normalize()
    expected = (q_number(10) * q_number(6)).exact_div(q_number(2) * q_number(2)).shift(2)
    assert value == expected


def test_qv_column():
    col = QVColumn.build("m-1", "1")
    assert col.render() == "q^{m-1} + q"
    assert col.render({"m": 6}) == "q^5 + q"
    assert col.at_one() == 2
    assert QVColumn.build().render() == "0"


@pytest.mark.parametrize("t", [3, 7, 11])
def test_formula_with_factor(t):
    f = Formula.build("2t-6", ("(q-1)", "[t-1]"))
    assert f.render() == "q^{2t-6}(q-1)[t-1]"
    assert f.evaluate({"t": t}).normalize().eval_at_one() == 0
