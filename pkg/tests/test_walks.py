import random

import pytest

from conftest import random_factor
from freeconv.graph import (
    PRODUCT_KINDS,
    ColoredRootedGraph,
    broom_with_root_loop,
    cherry_with_root_loop,
    centered_path,
    loop_point,
    path_with_root_loop,
    product,
)
from freeconv.series import Dist, eta_from_moments
from freeconv.walks import (
    dwalk_counts_bruteforce,
    dwalk_counts_matrix,
    even_fwalk_check,
    first_return_moments,
    spectral_moments,
    walk_table,
)


def all_walks(g: ColoredRootedGraph, length: int):
    """Every walk from the root as a list of (vertex, color) steps, with its weight."""
    arcs = []
    for e in g.edges:
        arcs.append((e.u, e.v, e.color, e.mult))
        if e.u != e.v:
            arcs.append((e.v, e.u, e.color, e.mult))
    walks = [([], g.root, 1)]
    for _ in range(length):
        walks = [
            (steps + [(v, c)], v, w * k)
            for steps, at, w in walks
            for u, v, c, k in arcs
            if u == at
        ]
    return [(steps, w) for steps, _, w in walks]


def dwalks_by_definition(g: ColoredRootedGraph, max_n: int) -> list[int]:
    out = []
    for n in range(1, max_n + 1):
        total = 0
        for steps, w in all_walks(g, 2 * n):
            colors = [c for _, c in steps]
            if colors != [1, 2] * n:
                continue
            returns = [i for i, (v, _) in enumerate(steps, 1) if v == g.root]
            if len(returns) == 2 and returns[-1] == 2 * n:
                total += w
        out.append(total)
    return out


def random_colored(rng: random.Random, max_vertices: int = 4) -> ColoredRootedGraph:
    g = random_factor(rng, max_vertices)
    return ColoredRootedGraph(
        g.vertices, g.root, [(e.u, e.v, rng.choice([1, 2]), e.mult) for e in g.edges]
    )


# -- spectral and first-return moments -------------------------------------

def test_spectral_examples():
    assert spectral_moments(loop_point(), 4) == [1, 1, 1, 1]
    two_path = ColoredRootedGraph(["e", "x"], "e", [("e", "x", 1)])
    assert spectral_moments(two_path, 4) == [0, 1, 0, 1]
    assert spectral_moments(centered_path(), 4) == [0, 2, 0, 4]


@pytest.mark.parametrize(
    "graph, expected",
    [
        (loop_point(), [1, 0, 0, 0]),
        (cherry_with_root_loop(), [1, 2, 0, 0]),
        (centered_path(), [0, 2, 0, 0]),
        (path_with_root_loop(), [1, 1, 0, 1]),
        (broom_with_root_loop(), [1, 1, 0, 2]),
    ],
)
def test_first_return_examples(graph, expected):
    assert first_return_moments(graph, 4) == expected


def test_first_return_matches_eta_of_spectral(rng):
    for _ in range(20):
        g = random_colored(rng)
        eta = eta_from_moments(Dist(spectral_moments(g, 6)))
        assert list(eta.tail()) == first_return_moments(g, 6)
        assert all(f <= s for f, s in zip(first_return_moments(g, 6), spectral_moments(g, 6)))


# -- d-walks ---------------------------------------------------------------

def test_two_colored_loops():
    g = ColoredRootedGraph(["e"], "e", [("e", "e", 1), ("e", "e", 2)])
    assert dwalk_counts_matrix(g, 4) == [1, 0, 0, 0]
    assert dwalk_counts_bruteforce(g, 4) == [1, 0, 0, 0]
    assert dwalks_by_definition(g, 4) == [1, 0, 0, 0]


def test_no_color_one_edge_at_root():
    g = ColoredRootedGraph(["e", "x"], "e", [("e", "x", 2), ("x", "x", 1)])
    assert dwalk_counts_matrix(g, 4) == [0, 0, 0, 0]
    assert dwalk_counts_bruteforce(g, 4) == [0, 0, 0, 0]


@pytest.mark.parametrize(
    "kind, g1, g2, expected",
    [
        ("comb_loop", path_with_root_loop(), broom_with_root_loop(), [1, 2, 2, 4]),
        ("ortho_loop", path_with_root_loop(), broom_with_root_loop(), [1, 1, 1, 1]),
        ("star_loop", path_with_root_loop(), broom_with_root_loop(), [1, 2, 1, 3]),
        ("sfree_loop", cherry_with_root_loop(), centered_path(), [1, 0, 4, 0]),
        ("free", cherry_with_root_loop(), centered_path(), [0, 2, 0, 16]),
    ],
)
def test_product_dwalks(kind, g1, g2, expected):
    g = product(kind, g1, g2, radius=4)
    assert dwalk_counts_matrix(g, 4) == expected
    assert dwalk_counts_bruteforce(g, 4) == expected


def test_bruteforce_matches_definition(rng):
    for _ in range(25):
        g = random_colored(rng, 3)
        assert dwalk_counts_bruteforce(g, 3) == dwalks_by_definition(g, 3)


def test_matrix_matches_brute_when_check_passes(rng):
    checked = 0
    for _ in range(200):
        g = random_colored(rng)
        if even_fwalk_check(g, 8):
            checked += 1
            assert dwalk_counts_matrix(g, 4) == dwalk_counts_bruteforce(g, 4)
    assert checked >= 20


@pytest.mark.parametrize("kind", PRODUCT_KINDS)
def test_products_pass_check_and_oracles_agree(kind, rng):
    for _ in range(5):
        g = product(kind, random_factor(rng), random_factor(rng), radius=4)
        assert even_fwalk_check(g, 8)
        assert dwalk_counts_matrix(g, 4) == dwalk_counts_bruteforce(g, 4)


def test_brute_cap(monkeypatch):
    g = loop_point()
    with pytest.raises(ValueError, match="cap"):
        dwalk_counts_bruteforce(g, 6)
    assert dwalk_counts_bruteforce(g, 6, max_steps=12) == [0] * 6
    monkeypatch.setenv("FREECONV_MAX_BRUTE", "12")
    assert dwalk_counts_bruteforce(g, 6) == [0] * 6


# -- even f-walk check -----------------------------------------------------

def test_check_examples():
    bicolored = ColoredRootedGraph(["e", "x"], "e", [("e", "x", 1), ("e", "x", 2)])
    assert not even_fwalk_check(bicolored, 4)
    assert even_fwalk_check(loop_point(), 8)


def test_check_respects_length_bound():
    # alternating 4-cycle e -1- a -2- b -1- c -2- e: first return after 4 steps
    g = ColoredRootedGraph(
        ["e", "a", "b", "c"], "e", [("e", "a", 1), ("a", "b", 2), ("b", "c", 1), ("c", "e", 2)]
    )
    assert even_fwalk_check(g, 3)
    assert not even_fwalk_check(g, 4)


# -- walk table ------------------------------------------------------------

def test_walk_table_both():
    g = product("ortho_loop", path_with_root_loop(), broom_with_root_loop())
    t = walk_table(g, 4, "both")
    assert t.dwalks == [1, 1, 1, 1]
    assert t.agreement is True
    assert t.even_fwalk_ok is True


def test_walk_table_methods():
    g = loop_point()
    assert walk_table(g, 4).agreement is None
    assert walk_table(g, 4, "brute").dwalks == [0, 0, 0, 0]
    with pytest.raises(ValueError):
        walk_table(g, 4, "spectral")
