"""Jacobi parameters and the continued fraction for the eta-transform.

::

    eta(z) = alpha_0 z + omega_0 z^2 / (1 - alpha_1 z - omega_1 z^2 / (1 - alpha_2 z - ...))

Coefficient ``n`` of eta depends on ``alpha_k`` only for ``2k + 1 <= n`` and on
``omega_k`` only for ``2k + 2 <= n``.
"""

from __future__ import annotations

from fractions import Fraction

from .series import (
    Dist,
    FormalSeries,
    JacobiParams,
    Scalar,
    SeriesError,
    as_fraction,
)

__all__ = [
    "NotQuasiDefiniteError",
    "eta_from_jacobi",
    "jacobi_from_moments",
    "jacobi_from_eta",
    "s_a_jacobi",
]


class NotQuasiDefiniteError(SeriesError):
    """The moment functional has no three-term recursion at this order."""


def eta_from_jacobi(J: JacobiParams, N: int) -> FormalSeries:
    """Expand the continued fraction to order ``N``, evaluated bottom-up.

    Levels beyond those supplied are taken to be zero.
    """
    if N < 1:
        raise SeriesError("order must be at least 1")
    z = FormalSeries.z(N)
    depth = (N + 1) // 2
    # K_k = 1 / (1 - alpha_k z - omega_k z^2 K_{k+1}); below the last level K = 1
    K = FormalSeries.one(N)
    for k in range(depth, 0, -1):
        K = 1 / (1 - J.a(k) * z - J.w(k) * z * z * K)
    return J.a(0) * z + J.w(0) * z * z * K


def _levels(N: int) -> tuple[int, int]:
    # alpha_k needs m_{2k+1}; omega_k needs m_{2k+2}
    return (N + 1) // 2, N // 2


def jacobi_from_moments(mu: Dist, N: int | None = None) -> JacobiParams:
    """Jacobi parameters via the Chebyshev algorithm on the moment functional.

    Works with ``sigma[k][l] = L(p_k(x) x^l)`` where ``p_k`` are the monic
    orthogonal polynomials.  When some ``omega_k`` vanishes the recursion
    stops and the remaining entries are stored as zeros; a functional whose
    row does not vanish identically at that point is rejected.

    Returns ``ceil(N/2)`` alphas and ``floor(N/2)`` omegas.
    """
    if N is None:
        N = mu.order
    if N < 1 or N > mu.order:
        raise SeriesError(f"order {N} not available from a Dist of order {mu.order}")
    n_alpha, n_omega = _levels(N)
    alpha = [Fraction(0)] * n_alpha
    omega = [Fraction(0)] * n_omega

    prev = [Fraction(0)] * (N + 1)                  # sigma_{-1}
    cur = [mu.moment(l) for l in range(N + 1)]      # sigma_0
    alpha[0] = cur[1]
    for k in range(1, n_omega + 1):
        # sigma_k is known for l <= N - k
        w = omega[k - 2] if k >= 2 else Fraction(0)
        nxt = [cur[l + 1] - alpha[k - 1] * cur[l] - w * prev[l] for l in range(N - k + 1)]
        omega[k - 1] = nxt[k] / cur[k - 1]
        if omega[k - 1] == 0:
            if any(nxt[k:]):
                raise NotQuasiDefiniteError(
                    f"non-quasi-definite moment sequence: omega_{k - 1} = 0 "
                    "but the functional does not terminate"
                )
            break
        if k >= n_alpha:
            break
        alpha[k] = nxt[k + 1] / nxt[k] - cur[k] / cur[k - 1]
        prev, cur = cur, nxt
    return JacobiParams(alpha, omega).canonical()


def jacobi_from_eta(eta: FormalSeries) -> JacobiParams:
    """Peel the continued fraction off an eta-series level by level.

    Independent of :func:`jacobi_from_moments`; each level consumes two
    orders of the series.
    """
    N = eta.order
    if eta[0] != 0:
        raise SeriesError("eta must have zero constant term")
    n_alpha, n_omega = _levels(N)
    alpha = [Fraction(0)] * n_alpha
    omega = [Fraction(0)] * n_omega
    alpha[0] = eta[1]
    rest = (eta - FormalSeries([0, alpha[0]], N)).shift(-1)   # omega_0 z K_1
    k = 0
    while k < n_omega:
        rest = rest.shift(-1)                                   # omega_k K_{k+1}
        omega[k] = rest[0]
        if omega[k] == 0:
            if not rest.is_zero():
                raise NotQuasiDefiniteError(
                    f"non-quasi-definite moment sequence: omega_{k} = 0 with a nonzero remainder"
                )
            break
        if k + 1 >= n_alpha:
            break
        inv = 1 / (rest / omega[k])                             # 1 - alpha z - omega z^2 K
        alpha[k + 1] = -inv[1]
        rest = -(inv - 1 + alpha[k + 1] * FormalSeries.z(inv.order)).shift(-1)
        k += 1
    return JacobiParams(alpha, omega).canonical()


def s_a_jacobi(J: JacobiParams, a: Scalar) -> JacobiParams:
    """Jacobi parameters of ``S_a mu`` from those of ``mu``.

    ``alpha_0`` is kept, ``omega_0`` scales by ``a``, and for ``k >= 1``
    ``alpha_k`` scales by ``a`` and ``omega_k`` by ``a^2``.
    """
    a = as_fraction(a)
    if a == 0:
        raise ValueError("S_a is undefined for a = 0")
    alpha = [x if k == 0 else x * a for k, x in enumerate(J.alpha)]
    omega = [x * a if k == 0 else x * a * a for k, x in enumerate(J.omega)]
    return JacobiParams(alpha, omega)

