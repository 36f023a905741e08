"""Closed-form evaluation for paths and cycles, and exact values at -1.

Both closed forms ride on the quartic L^4 - x*L^3 - x^2*L - x^2, which
factors as (L^2 + x)(L^2 - x*L - x): the path value is a weighted sum of
n-th powers of its four roots, the cycle value is the plain power sum. The
quartic has a double root at x = 0 and the weights blow up at x = -4, so
those two points are rejected rather than patched around.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .errors import InternalConsistencyError
from .graph import Graph, random_forest
from .polynomial import IntPoly
from .reduction import cycle_tdp, path_tdp, tree_tdp
from .reports import VerificationReport

SINGULAR_POINTS = (0.0, -4.0)

_IMAG_REL_TOL = 1e-7
_ROOT_RESIDUAL_TOL = 1e-9

#: D_t(P_n, -1) depends only on n mod 6: residues 1 and 4 give 0, the rest 1.
_PATH_MINUS_ONE = {0: 1, 1: 0, 2: 1, 3: 1, 4: 0, 5: 1}


@dataclass(frozen=True)
class RootQuad:
    """The four characteristic roots at a point x, with combination weights.

    value_at(n) returns sum(alpha_i * lambda_i**n); the weights encode the
    initial conditions (path or cycle), the roots are shared.
    """

    x: complex
    lambdas: tuple[complex, complex, complex, complex]
    alphas: tuple[complex, complex, complex, complex]

    @classmethod
    def for_path(cls, x: complex) -> "RootQuad":
        xc, s, t, lambdas = _characteristic_roots(x)
        d = 2 * (xc + 4)
        alphas = (
            (2 + (xc + 3) * s) / d,
            (2 - (xc + 3) * s) / d,
            (xc + 2 + t) / d,
            (xc + 2 - t) / d,
        )
        return cls(xc, lambdas, alphas)

    @classmethod
    def for_cycle(cls, x: complex) -> "RootQuad":
        xc, _, _, lambdas = _characteristic_roots(x)
        return cls(xc, lambdas, (1, 1, 1, 1))

    def residuals(self) -> tuple[float, ...]:
        """|L^4 - x*L^3 - x^2*L - x^2| at each root; should be ~0."""
        x = self.x
        return tuple(
            abs(lam**4 - x * lam**3 - x * x * lam - x * x) for lam in self.lambdas
        )

    def value_at(self, n: int) -> complex:
        return sum(a * lam**n for a, lam in zip(self.alphas, self.lambdas))


def _characteristic_roots(x: complex) -> tuple[complex, complex, complex, tuple]:
    xc = complex(x)
    if xc == 0 or xc == -4:
        raise ValueError(f"closed form is singular at x = {x}")
    s = cmath.sqrt(-xc)
    t = cmath.sqrt(xc * (xc + 4))
    lambdas = (s, -s, (xc + t) / 2, (xc - t) / 2)
    return xc, s, t, lambdas


def _finalize(value: complex, x: complex | float, quad: RootQuad) -> complex | float:
    for res, lam in zip(quad.residuals(), quad.lambdas):
        if res > _ROOT_RESIDUAL_TOL * (1 + abs(lam) ** 4):
            raise InternalConsistencyError(
                f"characteristic root {lam} has residual {res} at x = {x}"
            )
    if isinstance(x, complex) and x.imag != 0:
        return value
    # real input: the answer is a real polynomial value, so any imaginary
    # part is roundoff and must be small
    if abs(value.imag) > _IMAG_REL_TOL * (1 + abs(value)):
        raise InternalConsistencyError(
            f"closed form at real x = {x} produced imaginary part {value.imag}"
        )
    return value.real


def path_closed_eval(n: int, x: complex | float) -> complex | float:
    """D_t(P_n, x) from the root expansion; real for real x, x not in {0, -4}."""
    if n < 1:
        raise ValueError("path order must be positive")
    quad = RootQuad.for_path(x)
    return _finalize(quad.value_at(n), x, quad)


def cycle_closed_eval(n: int, x: complex | float) -> complex | float:
    """D_t(C_n, x) as the power sum of the four roots; x not in {0, -4}."""
    if n < 3:
        raise ValueError("cycle order must be at least 3")
    quad = RootQuad.for_cycle(x)
    return _finalize(quad.value_at(n), x, quad)


def path_at_minus_one(n: int) -> int:
    """Exact D_t(P_n, -1) in {0, 1} by the period-6 residue rule.

    Cross-checked against the equivalent trigonometric expression
    (2 + cos(2n*pi/3) - sqrt(3)*sin(2n*pi/3)) / 3 on every call.
    """
    if n < 1:
        raise ValueError("path order must be positive")
    value = _PATH_MINUS_ONE[n % 6]
    angle = 2 * math.pi * n / 3
    trig = (2 + math.cos(angle) - math.sqrt(3) * math.sin(angle)) / 3
    if abs(trig - value) > 1e-9:
        raise InternalConsistencyError(
            f"residue rule gives {value} but trigonometric form gives {trig} at n = {n}"
        )
    return value


def star_tdp(n: int) -> IntPoly:
    """D_t(S_n, x) = sum over i >= 2 of C(n-1, i-1) x^i.

    Every totally dominating set of a star contains the center plus any
    nonempty leaf subset, hence the shifted binomial coefficients.
    """
    if n < 2:
        raise ValueError("a star needs at least 2 vertices")
    coeffs = [0] * (n + 1)
    for i in range(2, n + 1):
        coeffs[i] = math.comb(n - 1, i - 1)
    return IntPoly(coeffs)


def star_at_minus_one(n: int) -> int:
    """D_t(S_n, -1) = 1 for every n >= 2 (alternating binomial sum)."""
    value = star_tdp(n).evaluate(-1)
    if value != 1:
        raise InternalConsistencyError(f"star value at -1 came out {value} for n = {n}")
    return value


def forest_at_minus_one(g: Graph) -> int:
    """Exact D_t(F, -1), always 0 or 1 for forests.

    Raises InternalConsistencyError if the evaluation lands outside {0, 1},
    since that would contradict the product-of-paths-and-stars structure
    the value inherits.
    """
    value = tree_tdp(g).evaluate(-1)
    if value not in (0, 1):
        raise InternalConsistencyError(
            f"forest value at -1 came out {value}, expected 0 or 1"
        )
    return value


# -- verification suites ------------------------------------------------------


def verify_closed_forms(
    n_max: int = 30,
    points: tuple = (1.0, 2.0, -2.0, 0.5, -1.0, -0.5),
    rel_tol: float = 1e-6,
) -> VerificationReport:
    """Closed forms against exact recurrence values on a grid of points.

    The exact polynomial is evaluated with integer/float Horner; the closed
    form must land within rel_tol relative error at every (n, x).
    """
    report = VerificationReport(
        "closedform", {"n_max": n_max, "points": list(points), "rel_tol": rel_tol}
    )
    for n in range(1, n_max + 1):
        exact_p = path_tdp(n)
        exact_c = cycle_tdp(n) if n >= 3 else None
        for x in points:
            if complex(x) in (0j, complex(-4)):
                continue
            exact = exact_p.evaluate(x)
            approx = path_closed_eval(n, x)
            ok = abs(approx - exact) <= rel_tol * (1 + abs(exact))
            report.record_check("", f"path n={n} x={x}", ok, exact, approx)
            if exact_c is not None:
                exact = exact_c.evaluate(x)
                approx = cycle_closed_eval(n, x)
                ok = abs(approx - exact) <= rel_tol * (1 + abs(exact))
                report.record_check("", f"cycle n={n} x={x}", ok, exact, approx)
    return report


def verify_minus_one(
    path_n_max: int = 60,
    star_n_max: int = 20,
    forest_trials: int = 500,
    forest_order_max: int = 16,
    seed: int = 42,
) -> VerificationReport:
    """Exact values at -1: path residue rule, star constancy, forest range."""
    report = VerificationReport(
        "minus-one",
        {
            "path_n_max": path_n_max,
            "star_n_max": star_n_max,
            "forest_trials": forest_trials,
            "forest_order_max": forest_order_max,
            "seed": seed,
        },
    )
    for n in range(1, path_n_max + 1):
        exact = path_tdp(n).evaluate(-1)
        report.record_check("", f"path n={n}", exact == path_at_minus_one(n), exact, path_at_minus_one(n))
    for n in range(2, star_n_max + 1):
        report.record_check("", f"star n={n}", star_at_minus_one(n) == 1, 1, star_at_minus_one(n))
    master = random.Random(seed)
    for trial in range(forest_trials):
        n = master.randint(1, forest_order_max)
        g = random_forest(n, master.randrange(2**32))
        value = forest_at_minus_one(g)
        report.record_check("", f"forest trial={trial} n={n}", value in (0, 1), "0 or 1", value)
    return report
