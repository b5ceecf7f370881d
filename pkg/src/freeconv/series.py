"""Exact truncated power series and the moment transforms built on them.

Every coefficient is a :class:`fractions.Fraction`.  A series carries its
truncation order ``N``: coefficients ``c_0 .. c_N`` are known exactly and
everything above ``z^N`` is unknown.  Binary operations truncate to the
smaller order of their operands.

The transforms follow the usual dictionary of noncommutative probability::

    psi(z) = sum_{n>=1} m_n z^n          moment generating series
    eta(z) = psi / (1 + psi)             first-return series, coefficients N(n)
    rho(z) = eta(z) / z
    S(z)   = (1 + z) psi^{-1}(z) / z     psi^{-1} the compositional inverse
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

__all__ = [
    "Scalar",
    "SeriesError",
    "as_fraction",
    "FormalSeries",
    "Dist",
    "JacobiParams",
    "psi_from_moments",
    "eta_from_moments",
    "moments_from_eta",
    "rho_from_eta",
    "compose",
    "compositional_inverse",
    "s_transform",
]

Scalar = Union[int, Fraction, str]


class SeriesError(ValueError):
    """Raised when a series operation is undefined for its arguments."""


def as_fraction(x) -> Fraction:
    """Coerce ``x`` to an exact rational.

    Accepts ints, Fractions, other exact rationals and strings such as
    ``"3/4"``.  Floats are rejected outright.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


@dataclass(frozen=True)
class FormalSeries:
    """Truncated power series ``c_0 + c_1 z + ... + c_N z^N``.

    ``coeffs`` always has length ``order + 1``.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [as_fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise SeriesError("empty series needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise SeriesError(f"order must be nonnegative, got {order}")
        cs = (cs + [Fraction(0)] * (order + 1 - len(cs)))[: order + 1]
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction -------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "FormalSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "FormalSeries":
        return cls([1], order)

    @classmethod
    def z(cls, order: int) -> "FormalSeries":
        """The indeterminate itself."""
        return cls([0, 1], order)

    @classmethod
    def from_tail(cls, tail: Sequence, order: int | None = None) -> "FormalSeries":
        """Series with zero constant term and ``c_1, c_2, ...`` = ``tail``."""
        if order is None:
            order = len(tail)
        return cls([0, *tail], order)

    # -- inspection ---------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        """Degree of the lowest nonzero retained coefficient (``order + 1`` if none)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order + 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"coefficient {n} lies beyond truncation order {self.order}")
        return self.coeffs[n]

    def tail(self) -> tuple[Fraction, ...]:
        """Coefficients ``c_1 .. c_N``."""
        return self.coeffs[1:]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> "FormalSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} series to {order}")
        return FormalSeries(self.coeffs[: order + 1], order)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"FormalSeries({body} + O(z^{self.order + 1}))"

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "FormalSeries":
        if isinstance(other, FormalSeries):
            return other
        return FormalSeries([as_fraction(other)], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return FormalSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, FormalSeries):
            a = as_fraction(other)
            return FormalSeries([a * c for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                for j in range(n + 1 - i):
                    out[i + j] += a[i] * b[j]
        return FormalSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return FormalSeries.one(self.order) / self ** (-k)
        result = FormalSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "FormalSeries":
        """Multiply by ``z^k`` (k > 0) or divide by ``z^-k`` (k < 0).

        Dividing drops the low coefficients, which must vanish, and lowers the
        order accordingly.
        """
        if k >= 0:
            return FormalSeries([0] * k + list(self.coeffs), self.order + k)
        k = -k
        if any(self.coeffs[:k]):
            raise SeriesError(f"series is not divisible by z^{k}")
        if k > self.order:
            raise SeriesError(f"dividing by z^{k} leaves nothing of an order {self.order} series")
        return FormalSeries(self.coeffs[k:], self.order - k)

    def __truediv__(self, other):
        if not isinstance(other, FormalSeries):
            a = as_fraction(other)
            if a == 0:
                raise ZeroDivisionError("division of a series by zero")
            return FormalSeries([c / a for c in self.coeffs], self.order)
        num, den = self, other
        k = den.low_degree
        if k > den.order:
            raise SeriesError("division by a series with no nonzero retained coefficient")
        if k:
            if num.low_degree < k:
                raise SeriesError(
                    f"divisor vanishes to order {k} but dividend only to order {num.low_degree}"
                )
            num, den = num.shift(-k), den.shift(-k)
        n = min(num.order, den.order)
        d0 = den.coeffs[0]
        q = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            s = num.coeffs[i]
            for j in range(1, i + 1):
                s -= den.coeffs[j] * q[i - j]
            q[i] = s / d0
        return FormalSeries(q, n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def scale_argument(self, a) -> "FormalSeries":
        """Return ``f(a z)``."""
        a = as_fraction(a)
        return FormalSeries([c * a**i for i, c in enumerate(self.coeffs)], self.order)

    def __call__(self, g: "FormalSeries") -> "FormalSeries":
        return compose(self, g)


@dataclass(frozen=True)
class Dist:
    """A distribution known through its moments ``m_1 .. m_N`` (``m_0 = 1``)."""

    moments: tuple[Fraction, ...]

    def __init__(self, moments: Iterable):
        ms = tuple(as_fraction(m) for m in moments)
        if not ms:
            raise SeriesError("a Dist needs at least one moment")
        object.__setattr__(self, "moments", ms)

    @property
    def order(self) -> int:
        return len(self.moments)

    def moment(self, n: int) -> Fraction:
        """``m_n``; ``m_0`` is 1."""
        if n == 0:
            return Fraction(1)
        return self.moments[n - 1]

    def truncate(self, order: int) -> "Dist":
        if order > self.order:
            raise SeriesError(f"Dist of order {self.order} cannot supply order {order}")
        return Dist(self.moments[:order])

    def agrees(self, other: "Dist", order: int | None = None) -> bool:
        """Coefficientwise equality up to ``order`` (default: the smaller order)."""
        n = min(self.order, other.order) if order is None else order
        return self.moments[:n] == other.moments[:n]

    def is_delta_zero(self) -> bool:
        return not any(self.moments)

    @classmethod
    def delta(cls, a: Scalar, order: int) -> "Dist":
        """Point mass at ``a``."""
        a = as_fraction(a)
        return cls([a**n for n in range(1, order + 1)])

    @classmethod
    def bernoulli(cls, p: Scalar, order: int) -> "Dist":
        """``(1-p) delta_0 + p delta_1``; every moment equals ``p``."""
        return cls([as_fraction(p)] * order)

    @classmethod
    def from_first_return(cls, values: Sequence[Scalar]) -> "Dist":
        """The Dist whose eta-series has coefficients ``values``."""
        return moments_from_eta(FormalSeries.from_tail(values), len(values))

    def first_return(self) -> tuple[Fraction, ...]:
        return eta_from_moments(self).tail()


@dataclass(frozen=True)
class JacobiParams:
    """Continued-fraction coefficients: ``alpha_0..alpha_K`` and ``omega_0..``."""

    alpha: tuple[Fraction, ...]
    omega: tuple[Fraction, ...]

    def __init__(self, alpha: Iterable = (), omega: Iterable = ()):
        object.__setattr__(self, "alpha", tuple(as_fraction(a) for a in alpha))
        object.__setattr__(self, "omega", tuple(as_fraction(w) for w in omega))

    def a(self, k: int) -> Fraction:
        return self.alpha[k] if k < len(self.alpha) else Fraction(0)

    def w(self, k: int) -> Fraction:
        return self.omega[k] if k < len(self.omega) else Fraction(0)

    def canonical(self) -> "JacobiParams":
        """Zero out everything past the first vanishing omega."""
        alpha, omega = list(self.alpha), list(self.omega)
        for k, w in enumerate(omega):
            if w == 0:
                alpha[k + 1 :] = [Fraction(0)] * len(alpha[k + 1 :])
                omega[k + 1 :] = [Fraction(0)] * len(omega[k + 1 :])
                break
        return JacobiParams(alpha, omega)


def psi_from_moments(d: Dist) -> FormalSeries:
    return FormalSeries.from_tail(d.moments, d.order)


def eta_from_moments(d: Dist) -> FormalSeries:
    psi = psi_from_moments(d)
    return psi / (1 + psi)


def moments_from_eta(e: FormalSeries, order: int | None = None) -> Dist:
    """Inverse of :func:`eta_from_moments`: ``psi = eta / (1 - eta)``."""
    if e[0] != 0:
        raise SeriesError("eta must have zero constant term")
    if order is None:
        order = e.order
    if order < 1:
        raise SeriesError("order must be at least 1")
    e = e.truncate(order)
    psi = e / (1 - e)
    return Dist(psi.tail())


def rho_from_eta(e: FormalSeries) -> FormalSeries:
    """``eta(z) / z``; the result has order one less than ``e``."""
    if e[0] != 0:
        raise SeriesError("eta must have zero constant term")
    return e.shift(-1)


def compose(f: FormalSeries, g: FormalSeries) -> FormalSeries:
    """Truncated ``f(g(z))``.  ``g`` must have zero constant term."""
    if g[0] != 0:
        raise SeriesError("inner series of a composition must have zero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n)
    # Horner: f_0 + g (f_1 + g (f_2 + ...))
    acc = FormalSeries([f.coeffs[n]], n)
    for i in range(n - 1, -1, -1):
        acc = acc * g + f.coeffs[i]
    return acc


def compositional_inverse(f: FormalSeries, order: int | None = None) -> FormalSeries:
    """The series ``g`` with ``f(g(z)) = z + O(z^{N+1})``.

    Solved one coefficient at a time: with ``g_1 .. g_{n-1}`` fixed, the
    coefficient of ``z^n`` in ``f(g)`` is ``f_1 g_n`` plus terms already known.
    """
    if order is None:
        order = f.order
    if f[0] != 0:
        raise SeriesError("compositional inverse needs zero constant term")
    if order > f.order:
        raise SeriesError(f"series of order {f.order} cannot be inverted to order {order}")
    f1 = f[1] if f.order >= 1 else Fraction(0)
    if f1 == 0:
        raise SeriesError("S-transform undefined: first moment vanishes")
    f = f.truncate(order)
    g = [Fraction(0)] * (order + 1)
    g[1] = 1 / f1
    for n in range(2, order + 1):
        # slice to order n so the partial inverse costs O(n^3), not O(N^3)
        partial = compose(f.truncate(n), FormalSeries(g[: n + 1], n))
        g[n] = -partial[n] / f1
    return FormalSeries(g, order)


def s_transform(d: Dist) -> FormalSeries:
    """Voiculescu's S-transform, exact to order ``N - 1``."""
    if d.moment(1) == 0:
        raise SeriesError("S-transform undefined: first moment vanishes")
    inv = compositional_inverse(psi_from_moments(d), d.order)
    return ((1 + FormalSeries.z(d.order)) * inv).shift(-1)
