"""Exact rationals and truncated power series in one variable.

Rationals are :class:`fractions.Fraction`. A :class:`TruncatedSeries` holds
coefficients of ``t^0 .. t^N`` and never looks past ``t^N``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainError

RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string; floats are refused."""
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an exact value")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"malformed rational {value!r}") from exc


def rational_to_json(q: Fraction) -> dict[str, str]:
    return {"numerator": str(q.numerator), "denominator": str(q.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    try:
        return Fraction(int(obj["numerator"]), int(obj["denominator"]))
    except (KeyError, ValueError, ZeroDivisionError, TypeError) as exc:
        raise DomainError(f"malformed rational record {obj!r}") from exc


class TruncatedSeries:
    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[RationalLike], order: int | None = None):
        coeffs = [to_rational(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise DomainError("truncation order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.coefficients: list[Fraction] = coeffs

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coefficients)
        return f"TruncatedSeries([{terms}])"

    def _check(self, other: TruncatedSeries) -> None:
        if other.order != self.order:
            raise DomainError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coefficients, other.coefficients)])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coefficients, other.coefficients)])

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        a, b = self.coefficients, other.coefficients
        n = self.order
        return TruncatedSeries([sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0))
                                for k in range(n + 1)])


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """``exp(s)`` for ``s`` with zero constant term.

    Uses ``g' = s' g``, i.e. ``n g_n = sum_{j=1}^n j s_j g_{n-j}``.
    """
    if s[0] != 0:
        raise DomainError("series_exp needs a zero constant term")
    f = s.coefficients
    g = [Fraction(1)]
    for n in range(1, s.order + 1):
        g.append(sum((j * f[j] * g[n - j] for j in range(1, n + 1)), Fraction(0)) / n)
    return TruncatedSeries(g)


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """``log(s)`` for ``s`` with constant term 1 (inverse of :func:`series_exp`)."""
    if s[0] != 1:
        raise DomainError("series_log needs constant term 1")
    g = s.coefficients
    f = [Fraction(0)]
    for n in range(1, s.order + 1):
        acc = n * g[n] - sum((j * f[j] * g[n - j] for j in range(1, n)), Fraction(0))
        f.append(acc / n)
    return TruncatedSeries(f)


def disconnected_from_connected(gw: Sequence[RationalLike]) -> list[Fraction]:
    """Degree-indexed coefficients of ``exp(sum GW_d t^d) - 1``, starting at ``d = 1``.

    >>> disconnected_from_connected([1, Fraction(1, 2), Fraction(4, 3)])
    [Fraction(1, 1), Fraction(1, 1), Fraction(2, 1)]
    """
    if not gw:
        return []
    return series_exp(TruncatedSeries([0, *gw])).coefficients[1:]


def connected_from_disconnected(h: Sequence[RationalLike]) -> list[Fraction]:
    if not h:
        return []
    return series_log(TruncatedSeries([1, *h])).coefficients[1:]
