# # Multiplicative convolutions
#
# Five products of distributions, each available by series algebra
# (method="transform") and by an explicit sum over compositions
# (method="combinatorial").  Inputs are given here by their first-return
# moments, which is how they arise from rooted graphs.

# %%
from fractions import Fraction as F

from freeconv import Dist
from freeconv.convolve import (
    CONVOLUTIONS,
    dilate,
    free_mult,
    orthogonal_iterate,
    orthogonal_mult,
    s_a_transform,
    sfree_mult,
)
from freeconv.series import s_transform

g1 = Dist.from_first_return([1, 1, 0, 1])
g2 = Dist.from_first_return([1, 1, 0, 2])
h1 = Dist.from_first_return([1, 2, 0, 0])
h2 = Dist.from_first_return([0, 2, 0, 0])

# %% [markdown]
# All five convolutions, both paths side by side.

# %%
for name, conv in CONVOLUTIONS.items():
    a, b = (g1, g2) if name in ("monotone", "boolean", "orthogonal") else (h1, h2)
    t = conv(a, b, method="transform").first_return
    c = conv(a, b, method="combinatorial").first_return
    print(f"{name:10s} {[str(x) for x in t]}  paths agree: {t == c}")

# %% [markdown]
# The s-free convolution is the limit of alternating orthogonal products.
# Coefficient m stops moving after m rounds.

# %%
for n in range(1, 6):
    print(n, [str(x) for x in orthogonal_iterate(h1, h2, n).first_return])

# %% [markdown]
# The free product splits into the two s-free pieces: sigma1 = h1 sfree h2
# and sigma2 = h2 sfree h1.  Each is a fixed point of an orthogonal product.

# %%
s1, s2 = sfree_mult(h1, h2).dist, sfree_mult(h2, h1).dist
print("sigma1", [str(x) for x in s1.first_return()])
print("sigma2", [str(x) for x in s2.first_return()])
print("fixed points hold:", orthogonal_mult(h1, s2).dist == s1, orthogonal_mult(h2, s1).dist == s2)

# %% [markdown]
# Point masses act by dilation, and the S-transform turns the free product
# into an ordinary product.

# %%
a = F(3, 2)
mu = Dist([1, 3, 2, 5, 7])
print("delta_a free mu == D_a mu:", free_mult(Dist.delta(a, 5), mu).dist == dilate(mu, a))
print("mu sfree delta_a == S_a mu:", sfree_mult(mu, Dist.delta(a, 5)).dist == s_a_transform(mu, a))
nu = Dist([2, 1, 0, 4, 1])
print("S product law:", s_transform(free_mult(mu, nu).dist) == s_transform(mu) * s_transform(nu))
