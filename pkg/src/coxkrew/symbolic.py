"""Kreweras closed forms whose exponents and bracket arguments are affine in t (and m, r).

The H3 and I2(m) values are stored as :class:`Formula` objects rather than per-t
tables, so they can be both evaluated at a concrete parameter and rendered in
the bracket notation ``q^{2t-10}[t-1]/[2]``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .qlaurent import ONE, IntLaurentPoly, QRational, monomial, q_number

__all__ = ["Affine", "Formula", "QVColumn", "aff"]

_VARS = ("t", "m", "r")
_AFF_TERM = re.compile(r"([+-]?)(\d*)([tmr]?)")


@dataclass(frozen=True)
class Affine:
    """``c_t*t + c_m*m + c_r*r + const``."""

    t: int = 0
    m: int = 0
    r: int = 0
    const: int = 0

    @classmethod
    def parse(cls, text: str) -> "Affine":
        """``Affine.parse("t-2r-1")`` etc.  Integer literals are accepted."""
        s = text.replace(" ", "")
        coef = dict.fromkeys(_VARS, 0)
        const = 0
        pos = 0
        while pos < len(s):
            mt = _AFF_TERM.match(s, pos)
            if not mt or mt.end() == pos:
                raise ValueError(f"bad affine expression {text!r}")
            sign = -1 if mt.group(1) == "-" else 1
            digits, var = mt.group(2), mt.group(3)
            if var:
                coef[var] += sign * (int(digits) if digits else 1)
            elif digits:
                const += sign * int(digits)
            else:
                raise ValueError(f"bad affine expression {text!r}")
            pos = mt.end()
        return cls(coef["t"], coef["m"], coef["r"], const)

    def __call__(self, env: Mapping[str, int]) -> int:
        return sum(getattr(self, v) * env[v] for v in _VARS if getattr(self, v)) + self.const

    def bind(self, env: Mapping[str, int]) -> "Affine":
        """Substitute the variables present in ``env``."""
        const = self.const
        kept = {}
        for v in _VARS:
            c = getattr(self, v)
            if v in env:
                const += c * env[v]
            else:
                kept[v] = c
        return Affine(kept.get("t", 0), kept.get("m", 0), kept.get("r", 0), const)

    def is_constant(self) -> bool:
        return self.t == self.m == self.r == 0

    def render(self) -> str:
        out = ""
        for v in _VARS:
            c = getattr(self, v)
            if not c:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            if out:
                out += ("+" if c > 0 else "-") + mag + v
            else:
                out = ("-" if c < 0 else "") + mag + v
        if self.const or not out:
            if out:
                out += ("+" if self.const > 0 else "-") + str(abs(self.const))
            else:
                out = str(self.const)
        return out

    def __str__(self) -> str:
        return self.render()


def aff(text: str) -> Affine:
    return Affine.parse(text)


def _sup(x: Affine) -> str:
    s = x.render()
    return f"^{s}" if len(s) == 1 else f"^{{{s}}}"


@dataclass(frozen=True)
class Formula:
    """``q^{prefix} * prod(numerator) / prod(denominator)``.

    ``numerator`` holds ``("br", x)`` for ``[x]`` and ``("qm1", x)`` for
    ``(q^x - 1)``; ``denominator`` holds ``(x, power)`` for ``[x]^power``.
    """

    prefix: Affine | None = None
    numerator: tuple[tuple[str, Affine], ...] = ()
    denominator: tuple[tuple[Affine, int], ...] = ()

    @classmethod
    def build(cls, prefix: str | None = None, num: tuple[str, ...] = (), den: tuple[str, ...] = ()) -> "Formula":
        """Compact constructor: ``num`` entries ``"[t-1]"`` or ``"(q^t-1)"``; ``den`` entries ``"[2]"``."""
        numerator = []
        for item in num:
            if item.startswith("["):
                numerator.append(("br", aff(item[1:-1])))
            elif item.startswith("(q"):
                body = item[1:-1]
                expo = body[2:-2] if body.startswith("q^") else "1"
                numerator.append(("qm1", aff(expo.strip("{}"))))
            else:
                raise ValueError(item)
        counts: dict[Affine, int] = {}
        for item in den:
            x = aff(item[1:-1])
            counts[x] = counts.get(x, 0) + 1
        return cls(aff(prefix) if prefix is not None else None, tuple(numerator), tuple(counts.items()))

    def bind(self, env: Mapping[str, int]) -> "Formula":
        return Formula(
            self.prefix.bind(env) if self.prefix is not None else None,
            tuple((k, x.bind(env)) for k, x in self.numerator),
            tuple((x.bind(env), p) for x, p in self.denominator),
        )

    def evaluate(self, env: Mapping[str, int]) -> QRational:
        num = ONE
        if self.prefix is not None:
            num = monomial(self.prefix(env))
        for kind, x in self.numerator:
            v = x(env)
            num = num * (q_number(v) if kind == "br" else IntLaurentPoly({v: 1}) - ONE)
        den = ONE
        for x, p in self.denominator:
            den = den * q_number(x(env)) ** p
        return QRational(num, den)

    def render(self, env: Mapping[str, int] | None = None) -> str:
        """Bracket notation, after substituting whatever ``env`` binds."""
        f = self.bind(env or {})
        out = ""
        if f.prefix is not None:
            if f.prefix.is_constant() and f.prefix.const == 0:
                pass
            elif f.prefix.is_constant() and f.prefix.const == 1:
                out += "q"
            else:
                out += "q" + _sup(f.prefix)
        for kind, x in f.numerator:
            if kind == "br":
                out += f"[{x.render()}]"
            elif x.is_constant() and x.const == 1:
                out += "(q-1)"
            else:
                out += f"(q{_sup(x)}-1)"
        if not out:
            out = "1"
        if f.denominator:
            parts = [f"[{x.render()}]" + (f"^{p}" if p > 1 else "") for x, p in f.denominator]
            out += "/" + (parts[0] if len(parts) == 1 else "(" + "".join(parts) + ")")
        return out


@dataclass(frozen=True)
class QVColumn:
    """The reflection-representation multiplicity ``<Q_chi, V>`` as a sum of ``q^x``."""

    exponents: tuple[Affine, ...] = ()

    @classmethod
    def build(cls, *exps: str) -> "QVColumn":
        return cls(tuple(aff(e) for e in exps))

    def evaluate(self, env: Mapping[str, int]) -> IntLaurentPoly:
        out = IntLaurentPoly()
        for x in self.exponents:
            out = out + monomial(x(env))
        return out

    def at_one(self) -> int:
        return len(self.exponents)

    def render(self, env: Mapping[str, int] | None = None) -> str:
        if not self.exponents:
            return "0"
        terms = []
        for x in self.exponents:
            x = x.bind(env or {})
            if x.is_constant() and x.const == 1:
                terms.append("q")
            elif x.is_constant() and x.const == 0:
                terms.append("1")
            else:
                terms.append("q" + _sup(x))
        return " + ".join(terms)
