"""The five multiplicative convolutions on truncated moment data.

Each convolution has two computation paths selected by ``method``:

``"transform"``
    series algebra on eta / rho (composition, products);
``"combinatorial"``
    explicit sums over compositions of ``n`` of products of first-return
    moments, without building any series.

Both paths are exact and must agree coefficient for coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Callable, Iterator, Sequence

from .series import (
    Dist,
    FormalSeries,
    Scalar,
    SeriesError,
    as_fraction,
    compose,
    eta_from_moments,
    moments_from_eta,
    rho_from_eta,
)

__all__ = [
    "METHODS",
    "ConvResult",
    "monotone_mult",
    "boolean_mult",
    "orthogonal_mult",
    "orthogonal_iterate",
    "sfree_mult",
    "free_mult",
    "dilate",
    "s_a_transform",
    "CONVOLUTIONS",
]

METHODS = ("transform", "combinatorial")


@dataclass(frozen=True)
class ConvResult:
    dist: Dist
    first_return: tuple[Fraction, ...]
    method: str

    @property
    def order(self) -> int:
        return self.dist.order

    @property
    def moments(self) -> tuple[Fraction, ...]:
        return self.dist.moments


def _result(eta: FormalSeries, order: int, method: str) -> ConvResult:
    eta = eta.truncate(order)
    return ConvResult(moments_from_eta(eta, order), eta.tail(), method)


def _from_first_return(values: Sequence[Fraction], method: str) -> ConvResult:
    return _result(FormalSeries.from_tail(values), len(values), method)


def _prepare(mu1: Dist, mu2: Dist, order: int | None) -> tuple[Dist, Dist, int]:
    if order is None:
        order = min(mu1.order, mu2.order)
    if order < 1:
        raise SeriesError("order must be at least 1")
    for name, mu in (("mu1", mu1), ("mu2", mu2)):
        if mu.order < order:
            raise SeriesError(f"{name} has order {mu.order} < requested order {order}")
    return mu1.truncate(order), mu2.truncate(order), order


def _check_method(method: str) -> None:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``n``."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for cuts in combinations(range(1, n), parts - 1):
        bounds = (0, *cuts, n)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def _fr(values: Sequence[Fraction], k: int) -> Fraction:
    # 1-based access into a first-return sequence
    return values[k - 1]


# -- monotone ---------------------------------------------------------------

def _monotone_sum(n1: Sequence[Fraction], n2: Sequence[Fraction]) -> list[Fraction]:
    order = len(n1)
    out = []
    for n in range(1, order + 1):
        total = Fraction(0)
        for r in range(1, n + 1):
            a = _fr(n1, r)
            if a:
                total += a * sum(
                    (prod(_fr(n2, k) for k in ks) for ks in _compositions(n, r)), Fraction(0)
                )
        out.append(total)
    return out


def monotone_mult(mu1: Dist, mu2: Dist, N: int | None = None, method: str = "transform") -> ConvResult:
    """Monotone multiplicative convolution: ``eta = eta_1 o eta_2``."""
    _check_method(method)
    mu1, mu2, N = _prepare(mu1, mu2, N)
    if method == "transform":
        return _result(compose(eta_from_moments(mu1), eta_from_moments(mu2)), N, method)
    return _from_first_return(_monotone_sum(mu1.first_return(), mu2.first_return()), method)


# -- boolean ----------------------------------------------------------------

def _boolean_sum(n1: Sequence[Fraction], n2: Sequence[Fraction]) -> list[Fraction]:
    order = len(n1)
    return [
        sum((_fr(n1, j) * _fr(n2, n + 1 - j) for j in range(1, n + 1)), Fraction(0))
        for n in range(1, order + 1)
    ]


def boolean_mult(mu1: Dist, mu2: Dist, N: int | None = None, method: str = "transform") -> ConvResult:
    """Boolean multiplicative convolution: ``rho = rho_1 * rho_2``."""
    _check_method(method)
    mu1, mu2, N = _prepare(mu1, mu2, N)
    if method == "transform":
        rho = rho_from_eta(eta_from_moments(mu1)) * rho_from_eta(eta_from_moments(mu2))
        return _result(rho.shift(1), N, method)
    return _from_first_return(_boolean_sum(mu1.first_return(), mu2.first_return()), method)


# -- orthogonal -------------------------------------------------------------

def _orthogonal_sum(n1: Sequence[Fraction], n2: Sequence[Fraction]) -> list[Fraction]:
    order = len(n1)
    out = []
    for n in range(1, order + 1):
        total = Fraction(0)
        for m in range(1, n + 1):
            a = _fr(n1, m)
            if a:
                total += a * sum(
                    (prod(_fr(n2, k) for k in ks) for ks in _compositions(n - 1, m - 1)),
                    Fraction(0),
                )
        out.append(total)
    return out


def _orthogonal_eta(eta1: FormalSeries, eta2: FormalSeries) -> FormalSeries:
    # rho_1(eta_2) is defined even when eta_2 vanishes identically
    return compose(rho_from_eta(eta1), eta2).shift(1)


def orthogonal_mult(mu1: Dist, mu2: Dist, N: int | None = None, method: str = "transform") -> ConvResult:
    """Orthogonal multiplicative convolution: ``rho = rho_1 o eta_2``.

    The composed form covers ``mu2 = delta_0`` without a special case: it gives
    ``eta = m_1(mu1) z``, the point mass at the mean of ``mu1``.
    """
    _check_method(method)
    mu1, mu2, N = _prepare(mu1, mu2, N)
    if method == "transform":
        return _result(_orthogonal_eta(eta_from_moments(mu1), eta_from_moments(mu2)), N, method)
    return _from_first_return(_orthogonal_sum(mu1.first_return(), mu2.first_return()), method)


def _iterate_first_return(n1, n2, n: int, step: Callable) -> list[Fraction]:
    # mu1 <_n mu2 = mu1 < (mu2 <_{n-1} mu1), unrolled from the inside out
    inner_left, inner_right = (n1, n2) if n % 2 == 1 else (n2, n1)
    acc = step(inner_left, inner_right)
    for k in range(n - 1, 0, -1):
        outer = n1 if k % 2 == 1 else n2
        acc = step(outer, acc)
    return acc


def orthogonal_iterate(
    mu1: Dist, mu2: Dist, n: int, N: int | None = None, method: str = "transform"
) -> ConvResult:
    """The alternating iteration ``mu1 < (mu2 < (mu1 < ...))`` with ``n`` factors of ``<``."""
    _check_method(method)
    if n < 1:
        raise ValueError(f"iteration count must be positive, got {n}")
    mu1, mu2, N = _prepare(mu1, mu2, N)
    if method == "transform":
        e1, e2 = eta_from_moments(mu1), eta_from_moments(mu2)
        values = _iterate_first_return(e1, e2, n, _orthogonal_eta)
        return _result(values, N, method)
    values = _iterate_first_return(mu1.first_return(), mu2.first_return(), n, _orthogonal_sum)
    return _from_first_return(values, method)


# -- s-free and free --------------------------------------------------------

def sfree_mult(mu1: Dist, mu2: Dist, N: int | None = None, method: str = "transform") -> ConvResult:
    """s-free multiplicative convolution, the stabilized alternating iteration.

    Coefficient ``m`` of the iteration is final after ``m`` steps, so ``N``
    steps give the exact result to order ``N``.
    """
    _check_method(method)
    mu1, mu2, N = _prepare(mu1, mu2, N)
    if mu1.is_delta_zero():
        return _result(FormalSeries.zero(N), N, method)
    if mu2.is_delta_zero():
        return _result(FormalSeries([0, mu1.moment(1)], N), N, method)
    return orthogonal_iterate(mu1, mu2, N, N, method)


def free_mult(mu1: Dist, mu2: Dist, N: int | None = None, method: str = "transform") -> ConvResult:
    """Free multiplicative convolution as ``mu1 monotone (mu2 s-free mu1)``."""
    _check_method(method)
    mu1, mu2, N = _prepare(mu1, mu2, N)
    if mu1.is_delta_zero() or mu2.is_delta_zero():
        return _result(FormalSeries.zero(N), N, method)
    sigma2 = sfree_mult(mu2, mu1, N, method).dist
    return monotone_mult(mu1, sigma2, N, method)


CONVOLUTIONS: dict[str, Callable[..., ConvResult]] = {
    "monotone": monotone_mult,
    "boolean": boolean_mult,
    "orthogonal": orthogonal_mult,
    "sfree": sfree_mult,
    "free": free_mult,
}


# -- measure transformations ------------------------------------------------

def dilate(mu: Dist, a: Scalar) -> Dist:
    """``D_a mu``: the moments scale as ``m_n -> a^n m_n``."""
    a = as_fraction(a)
    return Dist(a**n * m for n, m in enumerate(mu.moments, start=1))


def s_a_transform(mu: Dist, a: Scalar) -> Dist:
    """``S_a mu``, defined by ``eta_{S_a mu}(z) = eta_mu(a z) / a``."""
    a = as_fraction(a)
    if a == 0:
        raise ValueError("S_a is undefined for a = 0")
    return moments_from_eta(eta_from_moments(mu).scale_argument(a) / a, mu.order)
