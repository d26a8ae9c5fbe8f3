import sympy as sp

from coxkrew.qlaurent import IntLaurentPoly

q = sp.Symbol("q")


def to_sympy(p: IntLaurentPoly) -> sp.Expr:
    return sum((c * q**e for e, c in p.items()), sp.Integer(0))


def from_sympy(expr) -> IntLaurentPoly:
    expr = sp.expand(sp.cancel(sp.together(expr)))
    num, den = sp.fraction(expr)
    den_poly = sp.Poly(den, q)
    assert len(den_poly.terms()) == 1, f"not a Laurent polynomial: {expr}"
    (shift,), c0 = den_poly.terms()[0]
    out = {}
    for (e,), c in sp.Poly(num, q).terms():
        assert c % c0 == 0
        out[e - shift] = int(c // c0)
    return IntLaurentPoly(out)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
