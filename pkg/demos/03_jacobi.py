# # Jacobi parameters
#
# eta has a continued fraction
#
#     alpha_0 z + omega_0 z^2 / (1 - alpha_1 z - omega_1 z^2 / (1 - ...))
#
# whose coefficients are the recursion coefficients of the orthogonal
# polynomials.  Two extraction routes are available: the Chebyshev algorithm
# on the moments, and peeling the fraction off eta level by level.

# %%
from fractions import Fraction as F

from freeconv import Dist, JacobiParams
from freeconv.convolve import orthogonal_mult, s_a_transform
from freeconv.jacobi import (
    NotQuasiDefiniteError,
    eta_from_jacobi,
    jacobi_from_eta,
    jacobi_from_moments,
    s_a_jacobi,
)
from freeconv.series import eta_from_moments


def show(xs):
    return " ".join(str(x) for x in xs)

# %% [markdown]
# The orthogonal product of two Bernoulli laws has two atoms, so its fraction
# stops after two levels.

# %%
p, q = F(1, 2), F(1, 3)
mu = orthogonal_mult(Dist.bernoulli(p, 6), Dist.bernoulli(q, 6)).dist
J = jacobi_from_moments(mu)
peeled = jacobi_from_eta(eta_from_moments(mu))
print("Chebyshev: alpha", show(J.alpha), "| omega", show(J.omega))
print("peeled   : alpha", show(peeled.alpha), "| omega", show(peeled.omega))
print("closed form: alpha", show([p, 1 - p * q]), "| omega", (p - p * p) * q)

# %% [markdown]
# Expanding the fraction recovers eta.

# %%
print(show(eta_from_jacobi(J, 6).tail()))
print(show(eta_from_moments(mu).tail()))

# %% [markdown]
# alpha = 0 and omega = 1 at every level gives the Catalan numbers.

# %%
print(show(eta_from_jacobi(JacobiParams([0] * 5, [1] * 5), 10).coeffs))

# %% [markdown]
# S_a acts on the parameters directly: alpha_0 stays, omega_0 scales by a,
# deeper alphas by a and deeper omegas by a^2.

# %%
a = F(2, 3)
print(eta_from_jacobi(s_a_jacobi(J, a), 6) == eta_from_moments(s_a_transform(mu, a)))

# %% [markdown]
# A moment sequence with a vanishing omega but a nonzero remainder has no
# such fraction.

# %%
try:
    jacobi_from_moments(Dist([0, 0, 1, 0]))
except NotQuasiDefiniteError as exc:
    print("rejected:", exc)
