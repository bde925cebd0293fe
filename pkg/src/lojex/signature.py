"""Non-degeneracy, the containment condition and case classification.

Both partials of a weighted homogeneous ``p`` are weighted homogeneous, so
their zero sets are unions of orbits of ``t.x = (t^w1 x1, t^w2 x2)``, t > 0.
Every orbit off the line ``x2 = 0`` meets one of the slices ``x2 = +1`` or
``x2 = -1``, which turns each question about real zero sets into exact
gcd and Sturm computations on univariate slice polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bipoly import BiPoly, sturm_real_root_count, uni_gcd
from .wfilter import WeightError, WeightSystem, validate_weights

__all__ = [
    "Diagnostic",
    "CaseClassification",
    "orient",
    "is_nondegenerate",
    "containment_condition",
    "classify",
]

SIGMAS = (1, -1)


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str

    def as_dict(self) -> dict:
        return {"code": self.code, "message": self.message}


@dataclass(frozen=True)
class CaseClassification:
    nondegenerate: bool
    containment_holds: bool
    homogeneous: bool
    swapped: bool
    weights: WeightSystem  # heavy-first
    diagnostics: tuple[Diagnostic, ...] = field(default_factory=tuple)


def orient(p: BiPoly, ws: WeightSystem) -> tuple[BiPoly, WeightSystem, bool]:
    """Put the larger weight on axis 1.  Returns ``(p, ws, swapped)``."""
    if ws.w1 >= ws.w2:
        return p, ws, False
    return p.swap(), ws.swapped(), True


def _check_pre(p: BiPoly, ws: WeightSystem) -> None:
    if p.is_zero():
        raise WeightError("the zero polynomial is not a valid input")
    if p.constant_term():
        raise WeightError("polynomial must vanish at the origin")
    if not validate_weights(p, ws):
        raise WeightError(f"polynomial is not weighted homogeneous of type {ws}")


def _sign(s: int) -> str:
    return "+1" if s > 0 else "-1"


def is_nondegenerate(
    p: BiPoly, ws: WeightSystem, variables: tuple[str, str] = ("x1", "x2")
) -> tuple[bool, list[Diagnostic]]:
    """Whether the origin is the only common real zero of both partials."""
    _check_pre(p, ws)
    x, y = variables
    d1, d2 = p.derivative(1), p.derivative(2)
    diags: list[Diagnostic] = []
    for axis, dp in ((1, d1), (2, d2)):
        if dp.is_zero():
            other = y if axis == 1 else x
            diags.append(Diagnostic(
                "partial-identically-zero",
                f"d/d{variables[axis - 1]} vanishes identically: p depends on {other} only",
            ))

    # zeros with x2 != 0, slice by slice
    for sigma in SIGMAS:
        s1, s2 = d1.specialize(2, sigma), d2.specialize(2, sigma)
        if s1.is_zero() and s2.is_zero():
            diags.append(Diagnostic(
                "common-zero-slice",
                f"both partials vanish on the whole slice {y}={_sign(sigma)}",
            ))
            continue
        g = uni_gcd(s1, s2)
        if g.degree >= 1:
            n = sturm_real_root_count(g)
            if n:
                diags.append(Diagnostic(
                    "common-zero-slice",
                    f"on {y}={_sign(sigma)} the partials share {g.format()}, "
                    f"which has {n} real root{'s' if n != 1 else ''}",
                ))

    # the axes: each restricted partial is a single monomial or zero
    for fixed, free_name, fixed_name in ((2, x, y), (1, y, x)):
        r1, r2 = d1.specialize(fixed, 0), d2.specialize(fixed, 0)
        if r1.is_zero() and r2.is_zero():
            diags.append(Diagnostic(
                "common-zero-axis",
                f"the gradient vanishes along the {free_name}-axis ({fixed_name}=0)",
            ))

    degenerate = any(dg.code.startswith("common-zero") for dg in diags)
    return not degenerate, diags


def containment_condition(
    p: BiPoly, ws: WeightSystem, variables: tuple[str, str] = ("x1", "x2")
) -> tuple[bool, list[Diagnostic]]:
    """Whether ``{dp/dx1 = 0}`` lies inside ``{x2 = 0}``; axis 1 must be heavy."""
    _check_pre(p, ws)
    if ws.w1 < ws.w2:
        raise ValueError("containment needs the heavier weight on axis 1; orient first")
    x, y = variables
    d1 = p.derivative(1)
    if d1.is_zero():
        return False, [Diagnostic(
            "containment-inapplicable",
            f"d/d{x} vanishes identically, so its zero set is the whole plane",
        )]
    diags = []
    for sigma in SIGMAS:
        s = d1.specialize(2, sigma)
        n = sturm_real_root_count(s)
        if n:
            diags.append(Diagnostic(
                "containment-witness",
                f"slice d/d{x} at {y}={_sign(sigma)}: {s.format()} has {n} real root"
                f"{'s' if n != 1 else ''}",
            ))
    return not diags, diags


def classify(
    p: BiPoly, ws: WeightSystem, variables: tuple[str, str] = ("x1", "x2")
) -> CaseClassification:
    """Orient heavy-first, then run both checks."""
    _check_pre(p, ws)
    q, ows, swapped = orient(p, ws)
    names = (variables[1], variables[0]) if swapped else tuple(variables)
    nondeg, diags = is_nondegenerate(q, ows, names)
    contained, cdiags = containment_condition(q, ows, names)
    return CaseClassification(
        nondegenerate=nondeg,
        containment_holds=contained,
        homogeneous=ows.homogeneous,
        swapped=swapped,
        weights=ows,
        diagnostics=tuple(diags + cdiags),
    )

