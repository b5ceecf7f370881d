# # Moment transforms
#
# A distribution is handled only through its first N moments, stored as exact
# fractions.  Everything else is a truncated power series derived from them:
# the moment series psi, the first-return series eta = psi / (1 + psi),
# rho = eta / z, and the S-transform.

# %%
from fractions import Fraction as F

from freeconv import Dist, FormalSeries
from freeconv.series import (
    compose,
    compositional_inverse,
    eta_from_moments,
    moments_from_eta,
    psi_from_moments,
    rho_from_eta,
    s_transform,
)


def show(xs):
    return " ".join(str(x) for x in xs)

# %% [markdown]
# A Bernoulli(1/2) law has every moment equal to 1/2.

# %%
bern = Dist.bernoulli(F(1, 2), 5)
print("moments", show(bern.moments))
print("psi    ", show(psi_from_moments(bern).coeffs))
eta = eta_from_moments(bern)
print("eta    ", show(eta.coeffs))
print("rho    ", show(rho_from_eta(eta).coeffs))

# %% [markdown]
# eta determines the moments again, coefficient by coefficient.

# %%
assert moments_from_eta(eta) == bern

# %% [markdown]
# For the rooted three-vertex path, the spectral moments are (0, 2, 0, 4) and
# eta counts the walks that return to the root for the first time.

# %%
path = Dist([0, 2, 0, 4])
print("first-return counts", show(eta_from_moments(path).tail()))

# %% [markdown]
# Composition and inversion work on truncated series.  Inverting z + z^2 gives
# the Catalan numbers with alternating signs.

# %%
f = FormalSeries([0, 1, 1, 0, 0, 0])
g = compositional_inverse(f)
print("inverse of z + z^2:", show(g.coeffs))
print("f(g(z))           :", show(compose(f, g).coeffs))

# %% [markdown]
# The S-transform needs a nonzero mean.  For a point mass at a it is the
# constant 1/a.

# %%
print("S of Bernoulli(1/2):", show(s_transform(bern).coeffs))
print("S of delta_3       :", show(s_transform(Dist.delta(3, 5)).coeffs))
