"""Walk statistics on colored rooted graphs.

Three root-anchored counts, each for ``n = 1 .. max_n``:

* spectral moments ``<A^n e, e>``;
* first-return counts ``|F_n(e)|``, walks that meet the root only at the end;
* alternating double-return counts ``|D_2n(e)|``: alternating walks starting
  with color 1 that split into exactly two consecutive first-return walks.

The matrix counters apply the color-split adjacency matrices as exact
integer sparse operators; :func:`dwalk_counts_bruteforce` enumerates walks
directly and serves as the independent check.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .graph import ColoredRootedGraph, adjacency_split

__all__ = [
    "DEFAULT_MAX_BRUTE_STEPS",
    "WalkTable",
    "spectral_moments",
    "first_return_moments",
    "dwalk_counts_matrix",
    "dwalk_counts_bruteforce",
    "even_fwalk_check",
    "walk_table",
]

DEFAULT_MAX_BRUTE_STEPS = 10


class _SparseOp:
    """Exact integer linear map given by ``(row, col, weight)`` triples."""

    def __init__(self, n: int, entries: list[tuple[int, int, int]]):
        self.n = n
        self.entries = entries

    def __call__(self, v: list[int]) -> list[int]:
        out = [0] * self.n
        for i, j, k in self.entries:
            if v[j]:
                out[i] += k * v[j]
        return out


def _operators(g: ColoredRootedGraph) -> dict[int, _SparseOp]:
    a1, a2 = adjacency_split(g)
    ops = {}
    for c, mat in ((1, a1), (2, a2)):
        rows, cols = np.nonzero(mat)
        ops[c] = _SparseOp(len(g), [(int(i), int(j), int(mat[i, j])) for i, j in zip(rows, cols)])
    return ops


def _root_vector(g: ColoredRootedGraph) -> list[int]:
    v = [0] * len(g)
    v[g.index(g.root)] = 1
    return v


def spectral_moments(g: ColoredRootedGraph, max_n: int) -> list[int]:
    ops = _operators(g)
    r = g.index(g.root)
    v = _root_vector(g)
    out = []
    for _ in range(max_n):
        v = [x + y for x, y in zip(ops[1](v), ops[2](v))]
        out.append(v[r])
    return out


def _first_return(step, g: ColoredRootedGraph, max_n: int) -> list[int]:
    # <X (P' X)^{n-1} e, e> with P' the projection killing the root coordinate
    r = g.index(g.root)
    v = step(_root_vector(g))
    out = [v[r]]
    for _ in range(max_n - 1):
        v[r] = 0
        v = step(v)
        out.append(v[r])
    return out


def first_return_moments(g: ColoredRootedGraph, max_n: int) -> list[int]:
    ops = _operators(g)
    return _first_return(lambda v: [x + y for x, y in zip(ops[1](v), ops[2](v))], g, max_n)


def dwalk_counts_matrix(g: ColoredRootedGraph, max_n: int) -> list[int]:
    """First-return moments of ``Z = A2 A1`` at the root.

    ``Z`` acts on the root vector as one color-1 step followed by one color-2
    step.  Equal to the d-walk counts whenever :func:`even_fwalk_check` holds.
    """
    ops = _operators(g)
    return _first_return(lambda v: ops[2](ops[1](v)), g, max_n)


def _colored_steps(g: ColoredRootedGraph) -> dict[int, list[list[tuple[int, int]]]]:
    """Per color, per vertex index: ``[(target index, multiplicity), ...]``."""
    steps = {c: [[] for _ in g.vertices] for c in (1, 2)}
    for e in g.edges:
        i, j = g.index(e.u), g.index(e.v)
        steps[e.color][i].append((j, e.mult))
        if i != j:
            steps[e.color][j].append((i, e.mult))
    return steps


def _brute_cap() -> int:
    return int(os.environ.get("FREECONV_MAX_BRUTE", DEFAULT_MAX_BRUTE_STEPS))


def dwalk_counts_bruteforce(
    g: ColoredRootedGraph, max_n: int, max_steps: int | None = None
) -> list[int]:
    """Count d-walks of lengths ``2, 4, ..., 2 max_n`` by depth-first enumeration.

    A walk is counted when it alternates colors starting with color 1, and the
    root is revisited exactly twice: once strictly inside and once at the
    end.  Each step is weighted by the multiplicity of the edge taken.

    Raises
    ------
    ValueError
        If ``2 * max_n`` exceeds ``max_steps`` (default 10, or the
        ``FREECONV_MAX_BRUTE`` environment variable).
    """
    cap = _brute_cap() if max_steps is None else max_steps
    if 2 * max_n > cap:
        raise ValueError(
            f"brute-force enumeration of {2 * max_n}-step walks exceeds the cap of {cap} steps"
        )
    steps = _colored_steps(g)
    r = g.index(g.root)
    out = []
    for n in range(1, max_n + 1):
        length = 2 * n

        def dfs(v: int, taken: int, returns: int) -> int:
            color = 1 if taken % 2 == 0 else 2
            total = 0
            for w, k in steps[color][v]:
                t = taken + 1
                ret = returns + (w == r)
                if t == length:
                    if w == r and ret == 2:
                        total += k
                elif ret < 2:
                    total += k * dfs(w, t, ret)
            return total

        out.append(dfs(r, 0, 0))
    return out


def even_fwalk_check(g: ColoredRootedGraph, max_len: int) -> bool:
    """True iff the root has no alternating first-return walk of even length <= max_len.

    Walks may start with either color.  Counts are propagated over states
    ``(vertex, color of the last edge)`` with the root absorbing.
    """
    steps = _colored_steps(g)
    r = g.index(g.root)
    n = len(g)
    # frontier[c][v]: walks that left the root, now at v != root, last edge color c
    frontier = {c: [0] * n for c in (1, 2)}
    for c in (1, 2):
        for w, k in steps[c][r]:
            if w != r:
                frontier[c][w] += k
    for length in range(2, max_len + 1):
        nxt = {c: [0] * n for c in (1, 2)}
        back = 0
        for last in (1, 2):
            c = 3 - last
            for v, count in enumerate(frontier[last]):
                if not count:
                    continue
                for w, k in steps[c][v]:
                    if w == r:
                        back += count * k
                    else:
                        nxt[c][w] += count * k
        if back and length % 2 == 0:
            return False
        frontier = nxt
    return True


@dataclass
class WalkTable:
    max_n: int
    spectral: list[int]
    first_return: list[int]
    dwalks: list[int]
    dwalks_brute: list[int] | None = None
    even_fwalk_ok: bool | None = None

    @property
    def agreement(self) -> bool | None:
        if self.dwalks_brute is None:
            return None
        return self.dwalks == self.dwalks_brute


def walk_table(g: ColoredRootedGraph, max_n: int, method: str = "matrix") -> WalkTable:
    """Collect the walk statistics of ``g``; ``method`` is matrix, brute or both."""
    if method not in ("matrix", "brute", "both"):
        raise ValueError(f"unknown method {method!r}; expected matrix, brute or both")
    brute = dwalk_counts_bruteforce(g, max_n) if method in ("brute", "both") else None
    dwalks = dwalk_counts_matrix(g, max_n) if method != "brute" else list(brute)
    return WalkTable(
        max_n=max_n,
        spectral=spectral_moments(g, max_n),
        first_return=first_return_moments(g, max_n),
        dwalks=dwalks,
        dwalks_brute=brute if method == "both" else None,
        even_fwalk_ok=even_fwalk_check(g, 2 * max_n),
    )
