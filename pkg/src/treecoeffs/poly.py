"""Dense integer polynomials with exact (arbitrary-precision) coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction]


class IntPoly:
    """Polynomial ``sum(coeffs[k] * x**k)``; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def const(cls, a: int) -> "IntPoly":
        return cls((a,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly.const(other)
        return self + (-other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(a * other for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "IntPoly":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def dominated_by(self, other: "IntPoly") -> bool:
        """Coefficientwise ``self <= other``."""
        n = max(len(self), len(other))
        return all(self[k] <= other[k] for k in range(n))

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "IntPoly":
        return cls(int(s) for s in data)


def product(polys: Iterable[IntPoly]) -> IntPoly:
    out = IntPoly.const(1)
    for p in polys:
        out = out * p
    return out


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer literal; floats are refused to keep checks exact."""
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"rational {text!r} must be written as p/q, not a decimal")
    return Fraction(text)
