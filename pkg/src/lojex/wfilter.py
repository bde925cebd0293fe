"""Weighted-homogeneous structure of bivariate polynomials.

With positive integer weights ``w1, w2`` the monomial ``x1^a x2^b`` has
weighted degree ``a*w1 + b*w2``.  A polynomial is weighted homogeneous of
type ``(d; w1, w2)`` when every monomial in its support has weighted degree
``d``, i.e. the support lies on one line with a strictly positive normal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .bipoly import BiPoly

__all__ = [
    "WeightError",
    "NotWeightedHomogeneous",
    "UnderdeterminedWeights",
    "WeightSystem",
    "WeightedParts",
    "infer_weights",
    "weights_from_override",
    "validate_weights",
    "weighted_degree",
    "weighted_parts",
    "check_euler_identity",
]


class WeightError(ValueError):
    pass


class NotWeightedHomogeneous(WeightError):
    def __init__(self, detail: str = ""):
        msg = "not weighted homogeneous"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class UnderdeterminedWeights(WeightError):
    def __init__(self, detail: str = ""):
        msg = "underdetermined"
        super().__init__(f"{msg}: {detail}" if detail else msg)


@dataclass(frozen=True)
class WeightSystem:
    """Type ``(d; w1, w2)``."""

    w1: int
    w2: int
    d: int

    def __post_init__(self):
        for name in ("w1", "w2", "d"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise WeightError(f"{name} must be a positive integer, got {v!r}")

    @property
    def weights(self) -> tuple[int, int]:
        return (self.w1, self.w2)

    @property
    def heavy_axis(self) -> int:
        # ties go to axis 1
        return 1 if self.w1 >= self.w2 else 2

    @property
    def homogeneous(self) -> bool:
        return self.w1 == self.w2

    @property
    def primitive(self) -> bool:
        return gcd(self.w1, self.w2, self.d) == 1

    def normalized(self) -> WeightSystem:
        g = gcd(self.w1, self.w2, self.d)
        return WeightSystem(self.w1 // g, self.w2 // g, self.d // g)

    def swapped(self) -> WeightSystem:
        return WeightSystem(self.w2, self.w1, self.d)

    def scaled(self, k: int) -> WeightSystem:
        return WeightSystem(k * self.w1, k * self.w2, k * self.d)

    def degree_of(self, a: int, b: int) -> int:
        return a * self.w1 + b * self.w2

    def __str__(self) -> str:
        return f"({self.d}; {self.w1}, {self.w2})"


def _require_nonzero(p: BiPoly) -> None:
    if p.is_zero():
        raise WeightError("the zero polynomial has no weighted type")


def infer_weights(p: BiPoly) -> WeightSystem:
    """Unique primitive type ``(d; w1, w2)`` fitting the support of ``p``."""
    _require_nonzero(p)
    if p.constant_term():
        raise WeightError("polynomial must vanish at the origin")
    support = p.support()
    if len(support) == 1:
        raise UnderdeterminedWeights(
            "a single monomial fits any positive weights; pass the weights explicitly"
        )
    (a0, b0), (a1, b1) = support[0], support[-1]
    # direction (da, db) along the support line; the normal is (db, -da) up to sign
    n1, n2 = b1 - b0, a0 - a1
    g = gcd(n1, n2)
    n1, n2 = n1 // g, n2 // g
    if n1 < 0 or (n1 == 0 and n2 < 0):
        n1, n2 = -n1, -n2
    d = n1 * a0 + n2 * b0
    for a, b in support:
        if n1 * a + n2 * b != d:
            raise NotWeightedHomogeneous(
                f"monomials {(a0, b0)}, {(a1, b1)} and {(a, b)} are not collinear"
            )
    if n1 <= 0 or n2 <= 0:
        raise NotWeightedHomogeneous(
            f"the support line has normal {(n1, n2)}, so no positive weights fit"
        )
    return WeightSystem(n1, n2, d)


def weights_from_override(p: BiPoly, w1: int, w2: int) -> WeightSystem:
    """Type of ``p`` under user-supplied weights, which must make it homogeneous."""
    _require_nonzero(p)
    probe = WeightSystem(w1, w2, 1)
    degrees = {probe.degree_of(a, b) for a, b in p.support()}
    if len(degrees) != 1:
        raise NotWeightedHomogeneous(
            f"weights ({w1}, {w2}) give weighted degrees {sorted(degrees)}"
        )
    (d,) = degrees
    if d == 0:
        raise WeightError("polynomial must vanish at the origin")
    return WeightSystem(w1, w2, d)


def validate_weights(p: BiPoly, ws: WeightSystem) -> bool:
    _require_nonzero(p)
    return all(ws.degree_of(a, b) == ws.d for a, b in p.support())


@dataclass(frozen=True)
class WeightedParts:
    """Decomposition ``p = sum_j H_j`` by weighted degree."""

    weights: tuple[int, int]
    parts: dict[int, BiPoly]

    @property
    def degree(self) -> int:
        """Smallest weighted degree present."""
        return min(self.parts)

    @property
    def initial_form(self) -> BiPoly:
        return self.parts[self.degree]

    def total(self) -> BiPoly:
        out = BiPoly.zero()
        for h in self.parts.values():
            out = out + h
        return out


def weighted_parts(p: BiPoly, weights: tuple[int, int]) -> WeightedParts:
    _require_nonzero(p)
    w1, w2 = weights
    buckets: dict[int, dict] = {}
    for (a, b), c in p.items():
        buckets.setdefault(a * w1 + b * w2, {})[(a, b)] = c
    parts = {j: BiPoly(terms) for j, terms in sorted(buckets.items())}
    return WeightedParts((w1, w2), parts)


def weighted_degree(p: BiPoly, weights: tuple[int, int]) -> int:
    """Lowest weighted degree of a monomial of ``p``."""
    _require_nonzero(p)
    w1, w2 = weights
    return min(a * w1 + b * w2 for a, b in p.support())


def check_euler_identity(p: BiPoly, ws: WeightSystem) -> bool:
    """``d*p == w1*x1*dp/dx1 + w2*x2*dp/dx2`` as polynomials."""
    x1, x2 = BiPoly.var(1), BiPoly.var(2)
    rhs = x1 * p.derivative(1) * ws.w1 + x2 * p.derivative(2) * ws.w2
    return p.scale(ws.d) == rhs
