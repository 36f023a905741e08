"""Dense univariate polynomials with exact integer coefficients.

This is the carrier for total domination polynomials and for all reduction
arithmetic. Coefficients are Python ints (arbitrary precision, never
floats), stored by ascending degree with trailing zeros trimmed; the zero
polynomial is the empty tuple.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InternalConsistencyError


class IntPoly:
    """Immutable integer polynomial in one variable.

    ``IntPoly([0, 0, 1, 2, 1])`` is ``x^4 + 2x^3 + x^2``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be exact ints, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        """coeff * x**degree"""
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def coeff(self, i: int) -> int:
        """Coefficient of x**i; 0 beyond the stored length."""
        if i < 0:
            raise ValueError("coefficient index must be nonnegative")
        if i >= len(self._coeffs):
            return 0
        return self._coeffs[i]

    def degree(self) -> int | None:
        """Highest degree with nonzero coefficient, None for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def min_degree(self) -> int | None:
        """Lowest degree with nonzero coefficient, None for the zero polynomial."""
        for i, c in enumerate(self._coeffs):
            if c != 0:
                return i
        return None

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self._coeffs:
            return self
        return IntPoly((0,) * k + self._coeffs)

    def evaluate(self, point):
        """Horner evaluation.

        Exact (returns int) when the point is an int; otherwise evaluates in
        float/complex arithmetic.
        """
        if isinstance(point, bool):
            raise TypeError("evaluation point must be a number, not bool")
        acc = 0 if isinstance(point, int) else type(point)(0)
        for c in reversed(self._coeffs):
            acc = acc * point + c
        return acc

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPoly(out)

    def __repr__(self) -> str:
        return f"IntPoly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_coeff_strings(self) -> list[str]:
        """Coefficients as decimal strings, index = degree (exactness-preserving JSON form)."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_coeff_strings(cls, strings: Sequence[str]) -> "IntPoly":
        return cls(int(s) for s in strings)


def poly_arith(kind: str, p: IntPoly, q: IntPoly) -> IntPoly:
    """Dispatch form of +, -, * for callers that carry the operation as data."""
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def coeffwise_le(p: IntPoly, q: IntPoly) -> bool:
    """True when every coefficient of p is <= the matching coefficient of q."""
    top = max(len(p.coeffs), len(q.coeffs))
    return all(p.coeff(i) <= q.coeff(i) for i in range(top))


def ensure_valid_tdp(p: IntPoly, order: int | None = None) -> IntPoly:
    """Check that ``p`` is shaped like a total domination polynomial.

    All coefficients nonnegative, zero at degrees 0 and 1 (a one-element set
    cannot contain a neighbor of its own member), and degree at most the
    graph order when given. Raising here catches sign errors in reduction
    arithmetic before they propagate.
    """
    if any(c < 0 for c in p.coeffs):
        raise InternalConsistencyError(f"negative coefficient in claimed D_t: {p!r}")
    if p.coeff(0) != 0 or p.coeff(1) != 0:
        raise InternalConsistencyError(f"claimed D_t has support below degree 2: {p!r}")
    d = p.degree()
    if order is not None and d is not None and d > order:
        raise InternalConsistencyError(f"claimed D_t exceeds graph order {order}: {p!r}")
    return p
