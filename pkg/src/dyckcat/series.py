"""Truncated formal power series with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Series",
    "series_add",
    "series_sub",
    "series_mul",
    "series_div",
    "series_sqrt",
    "series_compose_geom",
    "gf",
    "GF_NAMES",
    "IdentityResult",
    "check_identities",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 64

Number = Union[int, Fraction]


class Series:
    """Power series known modulo ``x**order``.

    ``coeffs[k]`` is the coefficient of ``x**k`` for ``k < order``. Binary
    operations keep the smaller of the two orders.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        c = [Fraction(v) for v in coeffs]
        if order is None:
            order = len(c)
        if order < 0:
            raise ValueError("order must be nonnegative")
        c = c[:order]
        c.extend([Fraction(0)] * (order - len(c)))
        self.coeffs: tuple[Fraction, ...] = tuple(c)
        self.order = order

    @classmethod
    def constant(cls, value: Number, order: int = DEFAULT_ORDER) -> Series:
        return cls([value], order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> Series:
        return cls([0, 1], order)

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient {k} unknown at order {self.order}")
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[:order], order)

    def shift(self, k: int) -> Series:
        """Multiply by ``x**k`` (``k >= 0``) or divide by ``x**-k`` when exact."""
        if k >= 0:
            return Series((0,) * k + self.coeffs, self.order + k)
        k = -k
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by x^{k}")
        return Series(self.coeffs[k:], self.order - k)

    def in_square(self, order: int) -> Series:
        """Substitute ``x -> x**2``, known up to ``order``."""
        if order > 2 * self.order:
            raise ValueError("not enough coefficients for the substitution")
        out = [Fraction(0)] * order
        for k in range(0, order, 2):
            out[k] = self.coeffs[k // 2]
        return Series(out, order)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integers(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def first_difference(self, other: Series) -> int | None:
        """Lowest exponent where the two series differ, up to the shared order."""
        for k in range(min(self.order, other.order)):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: Series | Number) -> Series:
        return series_add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other: Series | Number) -> Series:
        return series_sub(self, _coerce(other, self.order))

    def __rsub__(self, other: Number) -> Series:
        return series_sub(_coerce(other, self.order), self)

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs], self.order)

    def __mul__(self, other: Series | Number) -> Series:
        if isinstance(other, Series):
            return series_mul(self, other)
        v = Fraction(other)
        return Series([c * v for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def __truediv__(self, other: Series | Number) -> Series:
        if isinstance(other, Series):
            return series_div(self, other)
        v = Fraction(other)
        return Series([c / v for c in self.coeffs], self.order)

    def __rtruediv__(self, other: Number) -> Series:
        return series_div(_coerce(other, self.order), self)

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs[:10])
        more = ", ..." if self.order > 10 else ""
        return f"Series([{terms}{more}], order={self.order})"


def _coerce(v: Series | Number, order: int) -> Series:
    return v if isinstance(v, Series) else Series([v], order)


def series_add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series([a.coeffs[k] + b.coeffs[k] for k in range(n)], n)


def series_sub(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series([a.coeffs[k] - b.coeffs[k] for k in range(n)], n)


def series_mul(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * n
    for i in range(n):
        ai = ac[i]
        if ai:
            for j in range(n - i):
                out[i + j] += ai * bc[j]
    return Series(out, n)


def series_div(a: Series, b: Series) -> Series:
    if b.order == 0 or b.coeffs[0] == 0:
        raise ZeroDivisionError("divisor has zero constant term")
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    inv0 = 1 / bc[0]
    out: list[Fraction] = []
    for k in range(n):
        acc = ac[k] - sum((bc[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out.append(acc * inv0)
    return Series(out, n)


def series_sqrt(a: Series) -> Series:
    """Square root with constant term 1, by Newton steps ``s <- (s + a/s) / 2``."""
    if a.order == 0 or a.coeffs[0] != 1:
        raise ValueError("series_sqrt needs constant term 1")
    s = Series([1], 1)
    prec = 1
    while prec < a.order:
        prec = min(2 * prec, a.order)
        s = Series(s.coeffs, prec)
        s = (s + series_div(a.truncate(prec), s)) / 2
    return Series(s.coeffs, a.order)


def series_compose_geom(a: Series) -> Series:
    """``a(x/(1-x)) / (1-x)`` to the order of ``a``, by Horner's rule."""
    n = a.order
    acc = [Fraction(0)] * n
    for c in reversed(a.coeffs):
        # acc <- acc * x/(1-x) + c: shifted prefix sums
        running = Fraction(0)
        nxt = [Fraction(0)] * n
        for m in range(1, n):
            running += acc[m - 1]
            nxt[m] = running
        if n:
            nxt[0] = c
        acc = nxt
    return series_div(Series(acc, n), Series([1, -1], n))


def _astar(order: int) -> Series:
    # Root of x^2 T^2 - T + 1 = 0 with T(0) = 1: T = (1 - sqrt(1 - 4x^2)) / (2x^2).
    r = series_sqrt(Series([1, 0, -4], order + 2))
    return ((1 - r) / 2).shift(-2)


def _m(order: int) -> Series:
    # M = 2x / (2x + (x+1)(sqrt(1-4x^2) - 1)); cancel the common factor x.
    work = order + 1
    r = series_sqrt(Series([1, 0, -4], work))
    den = Series([0, 2], work) + Series([1, 1], work) * (r - 1)
    return series_div(Series([2], order), den.shift(-1))


def _aprime(order: int) -> Series:
    r = series_sqrt(Series([1, 0, -4], order))
    num = Series([2, -3, -2], order) + Series.x(order) * r
    return series_div(num, Series([2, -2, -4, -2], order))


def _catalan(order: int) -> Series:
    c = [1]
    for n in range(1, order):
        c.append(c[-1] * 2 * (2 * n - 1) // (n + 1))
    return Series(c, order)


def _motzkin(order: int) -> Series:
    m = [1, 1]
    for n in range(2, order):
        m.append(((2 * n + 1) * m[-1] + (3 * n - 3) * m[-2]) // (n + 2))
    return Series(m[:order], order)


def _mprime(order: int) -> Series:
    return series_compose_geom(_m(order))


def _eprime(order: int) -> Series:
    return (1 + _mprime(order).shift(1)).truncate(order)


_GF = {
    "M": _m,
    "Mprime": _mprime,
    "Eprime": _eprime,
    "Astar": _astar,
    "Aprime": _aprime,
    "catalan": _catalan,
    "motzkin": _motzkin,
}

GF_NAMES: tuple[str, ...] = tuple(_GF)


def gf(name: str, order: int = DEFAULT_ORDER) -> Series:
    """Expand a named generating function to ``order`` coefficients.

    ``M`` counts Dyck meanders with catastrophes (and A), ``Aprime`` their
    excursions (and A'), ``Astar`` is in powers of ``x**2``, ``Mprime`` and
    ``Eprime`` count the Motzkin meanders and excursions with catastrophes.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    try:
        build = _GF[name]
    except KeyError:
        raise ValueError(f"unknown generating function {name!r}; choose from {', '.join(GF_NAMES)}") from None
    return build(order)


@dataclass(frozen=True)
class IdentityResult:
    name: str
    passed: bool
    first_failure: int | None


def check_identities(order: int = 32, a_counts: Sequence[int] | None = None) -> list[IdentityResult]:
    """Check the functional equations behind the A' generating function.

    ``a_counts`` optionally supplies ``|A_n|`` for small ``n`` (from
    enumeration) to confirm ``A(x) = M(x)`` coefficientwise.
    """
    if order < 8:
        raise ValueError("order must be at least 8")
    x = Series.x(order)
    astar = _astar(order)
    m = _m(order)
    aprime = _aprime(order)

    results = []

    def record(name: str, lhs: Series, rhs: Series) -> None:
        k = lhs.first_difference(rhs)
        results.append(IdentityResult(name, k is None, k))

    y = x * x * astar
    record("Astar functional equation", astar, 1 + y / (1 - y))
    record("Astar is Catalan in x^2", astar, _catalan(order // 2 + 1).in_square(order))
    k_series = 1 / (1 - x * (astar - 1 + x * astar))
    record("K functional equation", k_series, 1 + x * (astar - 1 + x * astar) * k_series)
    r = k_series - astar
    kbar = m * x * r
    record("Kbar has zero constant term", Series([kbar[0]], 1), Series([0], 1))
    record("K + Kbar = A'", k_series + kbar, aprime)
    sq = series_sqrt(Series([1, 0, -4], order))
    record("sqrt(1-4x^2)^2 = 1-4x^2", sq * sq, Series([1, 0, -4], order))
    if a_counts is not None:
        n = min(len(a_counts), order)
        record("A(x) = M(x)", Series(a_counts[:n], n), m.truncate(n))
    return results

