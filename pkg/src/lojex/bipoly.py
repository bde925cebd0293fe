"""Exact sparse bivariate and dense univariate polynomials over Q.

Coefficients are :class:`fractions.Fraction` everywhere.  A :class:`BiPoly`
is a map ``(a, b) -> c`` standing for ``sum c * x1**a * x2**b``; a
:class:`UniPoly` is a coefficient tuple, lowest degree first.  Both types are
immutable and hashable.

Axes are numbered 1 and 2, matching the usual ``x1, x2`` naming.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

__all__ = [
    "BiPoly",
    "UniPoly",
    "as_rational",
    "partial_derivative",
    "specialize",
    "uni_gcd",
    "sturm_chain",
    "sturm_real_root_count",
]

Monomial = tuple[int, int]


def as_rational(value) -> Fraction:
    """Convert ``value`` to an exact Fraction.

    Strings go through ``Fraction(str)`` so ``"0.5"`` becomes ``1/2``.
    Floats are refused: the binary expansion is almost never what was meant.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _check_axis(axis: int) -> None:
    if axis not in (1, 2):
        raise ValueError(f"axis must be 1 or 2, got {axis!r}")


class BiPoly:
    """Sparse polynomial in two variables with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in monomial {(a, b)}")
            key = (int(a), int(b))
            acc[key] = acc.get(key, Fraction(0)) + as_rational(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> BiPoly:
        # caller guarantees: Fraction values, no zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls) -> BiPoly:
        return cls._raw({})

    @classmethod
    def constant(cls, c) -> BiPoly:
        c = as_rational(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> BiPoly:
        return cls({(a, b): c})

    @classmethod
    def var(cls, axis: int) -> BiPoly:
        _check_axis(axis)
        return cls._raw({(1, 0) if axis == 1 else (0, 1): Fraction(1)})

    # inspection

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        """A copy of the term map."""
        return dict(self._terms)

    def support(self) -> list[Monomial]:
        return sorted(self._terms)

    def coeff(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(a + b for a, b in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0), Fraction(0))

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def canonical_items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in lexicographic order, x1 exponent then x2 exponent, descending."""
        return sorted(self._terms.items(), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == BiPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        from .parse import format_polynomial

        return f"BiPoly({format_polynomial(self)!r})"

    # ring operations

    @staticmethod
    def _coerce(other) -> BiPoly | None:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Rational)):
            return BiPoly.constant(other)
        return None

    def __add__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> BiPoly:
        c = as_rational(c)
        if not c:
            return BiPoly.zero()
        return BiPoly._raw({k: c * v for k, v in self._terms.items()})

    def __pow__(self, n: int) -> BiPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # calculus and substitution

    def derivative(self, axis: int) -> BiPoly:
        _check_axis(axis)
        out = {}
        for (a, b), c in self._terms.items():
            if axis == 1 and a:
                out[(a - 1, b)] = c * a
            elif axis == 2 and b:
                out[(a, b - 1)] = c * b
        return BiPoly._raw(out)

    def specialize(self, axis: int, value) -> UniPoly:
        """Substitute ``value`` for variable ``axis``; result is in the other variable."""
        _check_axis(axis)
        value = as_rational(value)
        acc: dict[int, Fraction] = {}
        for (a, b), c in self._terms.items():
            fixed, free = (a, b) if axis == 1 else (b, a)
            if fixed and not value:
                continue
            acc[free] = acc.get(free, 0) + c * value**fixed
        if not acc:
            return UniPoly(())
        coeffs = [Fraction(0)] * (max(acc) + 1)
        for k, c in acc.items():
            coeffs[k] = c
        return UniPoly(coeffs)

    def evaluate(self, x1, x2) -> Fraction:
        x1 = as_rational(x1)
        x2 = as_rational(x2)
        return sum((c * x1**a * x2**b for (a, b), c in self._terms.items()), Fraction(0))

    def swap(self) -> BiPoly:
        """Exchange the two variables: p(x1, x2) -> p(x2, x1)."""
        return BiPoly._raw({(b, a): c for (a, b), c in self._terms.items()})


class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[object] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def from_roots(cls, roots: Iterable[object], lead=1) -> UniPoly:
        p = cls([lead])
        for r in roots:
            p = p * cls([-as_rational(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self == UniPoly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({self.format()!r})"

    def __str__(self) -> str:
        return self.format()

    def __add__(self, other: UniPoly) -> UniPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other) -> UniPoly:
        if isinstance(other, (int, Rational)):
            return UniPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        if len(rem) - 1 < dq:
            return UniPoly(()), self
        quo = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quo[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return UniPoly(quo), UniPoly(rem[:dq])

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[1]

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        lead = self.leading
        return UniPoly(c / lead for c in self.coeffs)

    def derivative(self) -> UniPoly:
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, u) -> Fraction:
        u = as_rational(u)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def sign_at_infinity(self, direction: int) -> int:
        """Sign of p(u) as u -> +inf (direction=+1) or -inf (direction=-1)."""
        if not self.coeffs:
            return 0
        s = 1 if self.leading > 0 else -1
        if direction < 0 and self.degree % 2:
            s = -s
        return s

    def format(self, var: str = "u") -> str:
        """Compact human form, e.g. ``3u^2 - 1``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag}{mono}"
                else:
                    body = f"({mag}){mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def partial_derivative(p: BiPoly, axis: int) -> BiPoly:
    return p.derivative(axis)


def specialize(p: BiPoly, axis: int, value) -> UniPoly:
    return p.specialize(axis, value)


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm over Q."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd undefined for two zero polynomials")
    a, b = p, q
    while b:
        a, b = b, a % b
    return a.monic()


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    """Sturm sequence p, p', -rem(p, p'), ... stopping before the first zero remainder."""
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [p, p.derivative()]
    if chain[-1].is_zero():
        return chain[:1]
    while True:
        r = -(chain[-2] % chain[-1])
        if r.is_zero():
            return chain
        # a positive rescale keeps every sign and stops coefficient growth
        chain.append(r * (1 / abs(r.leading)))


def _variations(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for s, t in zip(nz, nz[1:]) if s != t)


def sturm_real_root_count(p: UniPoly) -> int:
    """Number of distinct real roots of ``p`` on the whole real line."""
    if p.is_zero():
        raise ValueError("root count of the zero polynomial is undefined")
    chain = sturm_chain(p)
    at_neg = _variations(q.sign_at_infinity(-1) for q in chain)
    at_pos = _variations(q.sign_at_infinity(+1) for q in chain)
    return at_neg - at_pos
