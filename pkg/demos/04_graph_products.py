# # Products of rooted graphs
#
# Factors are rooted multigraphs.  In a product, edges from the first factor
# get color 1 and edges from the second get color 2.  The loop variants add
# single loops so that each color class behaves like a unitized factor.
# The s-free and free products are infinite, so they are cut to a ball
# around the root.

# %%
from freeconv import io
from freeconv.graph import (
    PRODUCT_KINDS,
    broom_with_root_loop,
    centered_path,
    cherry_with_root_loop,
    path_with_root_loop,
    product,
)
from freeconv.walks import first_return_moments

g1, g2 = path_with_root_loop(), broom_with_root_loop()
h1, h2 = cherry_with_root_loop(), centered_path()

# %% [markdown]
# The factors and their first-return counts.

# %%
for name, g in [("g1", g1), ("g2", g2), ("h1", h1), ("h2", h2)]:
    print(name, g.vertices, first_return_moments(g, 4))

# %% [markdown]
# Sizes of every product kind, with balls of radius 4.

# %%
for kind in PRODUCT_KINDS:
    a, b = (h1, h2) if kind in ("sfree_loop", "free") else (g1, g2)
    g = product(kind, a, b, radius=4)
    print(f"{kind:11s} vertices={len(g):3d} edges={len(g.edges):3d} loops={len(g.loops())}")

# %% [markdown]
# The orthogonal loop product, as JSON and DOT.  Output is deterministic, so
# it can be diffed across runs.

# %%
ortho = product("ortho_loop", g1, g2)
print(io.dumps(io.graph_to_json(ortho))[:300], "...")
print(io.to_dot(ortho, "ortho_loop"))

# %% [markdown]
# Word names in the s-free ball: "()" is the root and each letter "t:x"
# records a step into a copy of factor t.

# %%
ball = product("sfree_loop", h1, h2, radius=3)
print(ball.vertices)
