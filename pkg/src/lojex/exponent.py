"""The Lojasiewicz exponent of a weighted homogeneous plane polynomial.

Two routes to the same number:

* :func:`lojasiewicz_exponent` reads the answer off the classification
  (heavy axis 1, ``w1 >= w2``)::

      L = (d - w1) / w2   if {dp/dx1 = 0} is contained in {x2 = 0}
      L = d / w2 - 1      otherwise

* :func:`path_oracle` never looks at the classification.  It enumerates the
  orbit classes ``phi(t) = (t^w1 a1, t^w2 a2)`` of the weighted action and
  computes ``ord grad p(phi(t)) / ord phi(t)`` for each one exactly.  Along
  such a path ``dp/dxi(phi(t)) = t^(d - wi) * dp/dxi(a)``, so the orders only
  depend on which partials vanish at the anchor ``a``.  Root classes of the
  slice polynomials are handled through gcds and Sturm counts, never through
  floating roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Union

from .bipoly import BiPoly, UniPoly, sturm_real_root_count, uni_gcd
from .signature import CaseClassification, Diagnostic, classify, orient
from .wfilter import WeightSystem, infer_weights, validate_weights, weights_from_override

__all__ = [
    "INF",
    "RootClass",
    "PathCandidate",
    "OracleResult",
    "ExponentResult",
    "Analysis",
    "path_oracle",
    "lojasiewicz_exponent",
    "complex_exponent",
    "sufficiency_degree",
    "analyze",
    "resolve_weights",
    "format_exponent",
]

INF = math.inf

Exponent = Union[Fraction, float]  # float only for INF


@dataclass(frozen=True)
class RootClass:
    """The real roots of ``poly`` (all of them, as one orbit family)."""

    poly: UniPoly
    real_roots: int

    def __str__(self) -> str:
        return f"root of {self.poly.format()}"


Coordinate = Union[Fraction, RootClass]


@dataclass(frozen=True)
class PathCandidate:
    kind: str  # generic, root, axis
    anchor: tuple[Coordinate, Coordinate]
    weights: tuple[int, int]
    ord_phi: int
    ord_grad: int | float
    note: str = ""

    @property
    def ratio(self) -> Exponent:
        if self.ord_grad == INF:
            return INF
        return Fraction(self.ord_grad, self.ord_phi)

    def swapped(self) -> PathCandidate:
        return replace(self, anchor=self.anchor[::-1], weights=self.weights[::-1])

    def path_text(self, variables: tuple[str, str] = ("x1", "x2")) -> str:
        comps = []
        for a, w in zip(self.anchor, self.weights):
            if isinstance(a, RootClass):
                coeff = "a"
            elif a == 0:
                comps.append("0")
                continue
            else:
                coeff = str(a)
            tw = "t" if w == 1 else f"t^{w}"
            if coeff == "1":
                comps.append(tw)
            elif coeff == "-1":
                comps.append(f"-{tw}")
            else:
                comps.append(f"{coeff}*{tw}")
        text = f"({comps[0]}, {comps[1]})"
        roots = [a for a in self.anchor if isinstance(a, RootClass)]
        if roots:
            text += f" where a is a real {roots[0]}"
        return text

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "anchor": [str(a) for a in self.anchor],
            "path": self.path_text(),
            "ord_phi": self.ord_phi,
            "ord_grad": "inf" if self.ord_grad == INF else self.ord_grad,
            "ratio": format_exponent(self.ratio),
            "note": self.note,
        }


@dataclass(frozen=True)
class OracleResult:
    candidates: tuple[PathCandidate, ...]
    max_ratio: Exponent

    @property
    def degenerate(self) -> bool:
        return self.max_ratio == INF

    def best(self) -> PathCandidate:
        return next(c for c in self.candidates if c.ratio == self.max_ratio)


@dataclass(frozen=True)
class ExponentResult:
    value: Exponent
    case_tag: str  # contained, not_contained, homogeneous, degenerate
    witness_path: PathCandidate | None = None
    sufficiency_degree: int | None = None

    @property
    def finite(self) -> bool:
        return self.value != INF


def format_exponent(value: Exponent) -> str:
    if value == INF:
        return "inf"
    return f"{value.numerator}/{value.denominator}"


def _order_at(d1: BiPoly, d2: BiPoly, ws: WeightSystem, a1: Fraction, a2: Fraction):
    """(ord_phi, ord_grad) of the orbit through the rational point (a1, a2)."""
    ord_phi = min(w for w, a in zip(ws.weights, (a1, a2)) if a)
    nonvanishing = [ws.d - w for w, dp in zip(ws.weights, (d1, d2)) if dp.evaluate(a1, a2)]
    return ord_phi, min(nonvanishing) if nonvanishing else INF


def _strip_common(q: UniPoly, g: UniPoly) -> UniPoly:
    """Divide out of ``q`` every factor it shares with ``g``."""
    while True:
        h = uni_gcd(q, g)
        if h.degree < 1:
            return q
        q = q // h


def path_oracle(p: BiPoly, ws: WeightSystem) -> OracleResult:
    """Exact orbit-path enumeration; axis 1 must carry the larger weight."""
    if ws.w1 < ws.w2:
        raise ValueError("path_oracle needs the heavier weight on axis 1; orient first")
    if not validate_weights(p, ws):
        raise ValueError(f"polynomial is not weighted homogeneous of type {ws}")
    d1, d2 = p.derivative(1), p.derivative(2)
    w = ws.weights
    out: list[PathCandidate] = []

    def rational(kind: str, a1, a2, note: str = "") -> None:
        a1, a2 = Fraction(a1), Fraction(a2)
        ord_phi, ord_grad = _order_at(d1, d2, ws, a1, a2)
        out.append(PathCandidate(kind, (a1, a2), w, ord_phi, ord_grad, note))

    for sigma in (1, -1):
        s1, s2 = d1.specialize(2, sigma), d2.specialize(2, sigma)
        if s1.is_zero():
            rational("generic", 1, sigma, "the heavy-axis partial vanishes identically")
            continue
        if s1.degree >= 1 and sturm_real_root_count(s1):
            g = uni_gcd(s1, s2)
            if g.degree >= 1:
                n = sturm_real_root_count(g)
                if n:
                    out.append(PathCandidate(
                        "root", (RootClass(g, n), Fraction(sigma)), w, w[1], INF,
                        "both partials vanish on this class",
                    ))
                rest = _strip_common(s1 // g, g)
            else:
                rest = s1
            if rest.degree >= 1:
                n = sturm_real_root_count(rest)
                if n:
                    out.append(PathCandidate(
                        "root", (RootClass(rest.monic(), n), Fraction(sigma)), w, w[1],
                        ws.d - ws.w2, "the heavy-axis partial vanishes, the other does not",
                    ))
        u0 = 1
        while not s1(u0):
            u0 += 1
        rational("generic", u0, sigma)

    for a1, a2 in ((1, 0), (-1, 0), (0, 1), (0, -1)):
        rational("axis", a1, a2)

    return OracleResult(tuple(out), max(c.ratio for c in out))


def lojasiewicz_exponent(p: BiPoly, ws: WeightSystem, cls: CaseClassification) -> ExponentResult:
    """Closed-form exponent for ``p`` of type ``ws`` (any axis order)."""
    q, ows, swapped = orient(p, ws)
    if cls.weights != ows or cls.swapped != swapped or not validate_weights(q, ows):
        raise ValueError("classification does not belong to this polynomial and weight system")
    oracle = path_oracle(q, ows)

    if not cls.nondegenerate:
        value, tag = INF, "degenerate"
    elif cls.homogeneous:
        value, tag = Fraction(ows.d, ows.w2) - 1, "homogeneous"
    elif cls.containment_holds:
        value, tag = Fraction(ows.d - ows.w1, ows.w2), "contained"
    else:
        value, tag = Fraction(ows.d, ows.w2) - 1, "not_contained"

    witness = next((c for c in oracle.candidates if c.ratio == value), None)
    if witness is not None and swapped:
        witness = witness.swapped()
    suff = sufficiency_degree(value) if value != INF else None
    return ExponentResult(value, tag, witness, suff)


def complex_exponent(weights, d: int) -> Fraction:
    """``max_i (d / w_i - 1)`` for a complex weighted homogeneous isolated singularity."""
    weights = list(weights)
    if not weights:
        raise ValueError("empty weight list")
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive integers")
    if d < max(weights):
        raise ValueError("degree must be at least the largest weight")
    return max(Fraction(d, w) - 1 for w in weights)


def sufficiency_degree(L: Exponent) -> int:
    """``floor(L) + 1``: the C^0-sufficiency degree of the jet."""
    if L == INF:
        raise ValueError("sufficiency degree is undefined for an infinite exponent")
    if L < 0:
        raise ValueError("exponent must be nonnegative")
    return math.floor(L) + 1


@dataclass(frozen=True)
class Analysis:
    poly: BiPoly
    weights: WeightSystem  # in the caller's axis order
    classification: CaseClassification
    result: ExponentResult
    oracle: OracleResult = field(repr=False, default=None)


def resolve_weights(
    p: BiPoly, weights: tuple[int, int] | None = None
) -> tuple[WeightSystem, list[Diagnostic]]:
    """Validated override, inferred type, or the (1, 1) grading for a lone monomial."""
    if weights is not None:
        return weights_from_override(p, *weights), []
    if len(p) == 1 and not p.constant_term():
        # whether a monomial is degenerate, and its exponent, do not depend on the weights
        return weights_from_override(p, 1, 1), [Diagnostic(
            "weights-underdetermined",
            "a single monomial fits any positive weights; reporting the standard grading (1, 1)",
        )]
    return infer_weights(p), []


def analyze(
    p: BiPoly,
    weights: tuple[int, int] | None = None,
    variables: tuple[str, str] = ("x1", "x2"),
) -> Analysis:
    """Infer or validate the type, classify, and compute the exponent."""
    ws, notes = resolve_weights(p, weights)
    cls = classify(p, ws, variables)
    if notes:
        cls = replace(cls, diagnostics=tuple(notes) + cls.diagnostics)
    result = lojasiewicz_exponent(p, ws, cls)
    q, ows, _ = orient(p, ws)
    return Analysis(p, ws, cls, result, path_oracle(q, ows))
