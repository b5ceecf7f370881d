"""Rooted two-colored multigraphs and their products.

A product graph is naturally colored: edges inherited from the first factor
get color 1 and edges from the second factor color 2, whatever colors the
factors carried.  The loop products then add single loops so that the
adjacency matrix of each color class is the "unitized" factor operator.

Vertex names are strings:

* comb / ortho products use pairs ``"(x,y)"``;
* star products use ``"(e1,e2)"`` for the glued root and ``"1:x"`` / ``"2:y"``
  for non-root vertices of each factor;
* s-free and free products use alternating words ``"(1:x,2:y,...)"`` with
  ``"()"`` the root.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Edge",
    "ColoredRootedGraph",
    "FINITE_KINDS",
    "BALL_KINDS",
    "PRODUCT_KINDS",
    "finite_product",
    "ball_product",
    "product",
    "adjacency_split",
    "path_with_root_loop",
    "broom_with_root_loop",
    "cherry_with_root_loop",
    "centered_path",
    "point",
    "loop_point",
]

FINITE_KINDS = ("comb", "comb_loop", "star", "star_loop", "ortho", "ortho_loop")
BALL_KINDS = ("sfree_loop", "free")
PRODUCT_KINDS = FINITE_KINDS + BALL_KINDS


@dataclass(frozen=True, order=True)
class Edge:
    u: str
    v: str
    color: int
    mult: int = 1

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


class ColoredRootedGraph:
    """Finite rooted multigraph with edge colors in ``{1, 2}``.

    Parallel entries with the same endpoints and color are merged by adding
    multiplicities.  Endpoints are stored in vertex order, and edges are kept
    sorted by ``(index(u), index(v), color)``.
    """

    __slots__ = ("vertices", "root", "edges", "_index")

    def __init__(self, vertices: Sequence[str], root: str, edges: Iterable = ()):
        vertices = tuple(str(v) for v in vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("duplicate vertex identifiers")
        root = str(root)
        if root not in index:
            raise ValueError(f"root {root!r} is not a vertex")
        merged: dict[tuple[int, int, int], int] = {}
        for e in edges:
            if isinstance(e, Edge):
                u, v, c, k = e.u, e.v, e.color, e.mult
            else:
                u, v, c, *rest = e
                k = rest[0] if rest else 1
            u, v, c, k = str(u), str(v), int(c), int(k)
            if c not in (1, 2):
                raise ValueError(f"edge color must be 1 or 2, got {c}")
            if k < 1:
                raise ValueError(f"edge multiplicity must be positive, got {k}")
            for x in (u, v):
                if x not in index:
                    raise ValueError(f"edge endpoint {x!r} is not a vertex")
            i, j = sorted((index[u], index[v]))
            merged[(i, j, c)] = merged.get((i, j, c), 0) + k
        self.vertices = vertices
        self.root = root
        self._index = index
        self.edges = tuple(
            Edge(vertices[i], vertices[j], c, k) for (i, j, c), k in sorted(merged.items())
        )

    def index(self, v: str) -> int:
        return self._index[v]

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredRootedGraph):
            return NotImplemented
        return (self.vertices, self.root, self.edges) == (other.vertices, other.root, other.edges)

    def __hash__(self) -> int:
        return hash((self.vertices, self.root, self.edges))

    def __repr__(self) -> str:
        return (
            f"ColoredRootedGraph({len(self.vertices)} vertices, root={self.root!r}, "
            f"{len(self.edges)} edges)"
        )

    def recolor(self, color: int) -> "ColoredRootedGraph":
        return ColoredRootedGraph(
            self.vertices, self.root, (Edge(e.u, e.v, color, e.mult) for e in self.edges)
        )

    def loops(self, color: int | None = None) -> list[Edge]:
        return [e for e in self.edges if e.is_loop and (color is None or e.color == color)]

    def neighbors(self) -> dict[str, list[tuple[str, int, int]]]:
        """``v -> [(w, color, mult), ...]``; a loop appears once at its vertex."""
        out: dict[str, list[tuple[str, int, int]]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.u].append((e.v, e.color, e.mult))
            if not e.is_loop:
                out[e.v].append((e.u, e.color, e.mult))
        return out

    def non_root(self) -> list[str]:
        return [v for v in self.vertices if v != self.root]


def adjacency_split(g: ColoredRootedGraph) -> tuple[np.ndarray, np.ndarray]:
    """Color-1 and color-2 adjacency matrices in vertex order.

    A loop of multiplicity ``k`` contributes ``k`` to its diagonal entry.
    """
    n = len(g)
    mats = {1: np.zeros((n, n), dtype=np.int64), 2: np.zeros((n, n), dtype=np.int64)}
    for e in g.edges:
        i, j = g.index(e.u), g.index(e.v)
        mats[e.color][i, j] += e.mult
        if i != j:
            mats[e.color][j, i] += e.mult
    return mats[1], mats[2]


# -- finite products --------------------------------------------------------

def _pair(x: str, y: str) -> str:
    return f"({x},{y})"


def _comb_like(g1, g2, skip_root: bool, loop_kind: bool) -> ColoredRootedGraph:
    base = [x for x in g1.vertices if not (skip_root and x == g1.root)]
    root = _pair(g1.root, g2.root)

    def at(x: str, y: str) -> str:
        # in the orthogonal product the copy of g2 at the root collapses to the root
        return root if x == g1.root and (skip_root or y == g2.root) else _pair(x, y)

    vertices = [root]
    for x in base:
        for y in g2.vertices:
            v = at(x, y)
            if v != root:
                vertices.append(v)
    edges = [Edge(at(e.u, g2.root), at(e.v, g2.root), 1, e.mult) for e in g1.edges]
    for x in base:
        for e in g2.edges:
            edges.append(Edge(at(x, e.u), at(x, e.v), 2, e.mult))
    if loop_kind:
        for x in base:
            for y in g2.non_root():
                v = at(x, y)
                edges.append(Edge(v, v, 1, 1))
        if skip_root:
            edges.append(Edge(root, root, 2, 1))
    return ColoredRootedGraph(vertices, root, edges)


def _star(g1, g2, loop_kind: bool) -> ColoredRootedGraph:
    root = _pair(g1.root, g2.root)

    def tag(i: int, g, x: str) -> str:
        return root if x == g.root else f"{i}:{x}"

    vertices = [root] + [tag(1, g1, x) for x in g1.non_root()] + [tag(2, g2, y) for y in g2.non_root()]
    edges = [Edge(tag(1, g1, e.u), tag(1, g1, e.v), 1, e.mult) for e in g1.edges]
    edges += [Edge(tag(2, g2, e.u), tag(2, g2, e.v), 2, e.mult) for e in g2.edges]
    if loop_kind:
        # unitization puts the opposite color on each factor's non-root vertices
        edges += [Edge(tag(1, g1, x), tag(1, g1, x), 2, 1) for x in g1.non_root()]
        edges += [Edge(tag(2, g2, y), tag(2, g2, y), 1, 1) for y in g2.non_root()]
    return ColoredRootedGraph(vertices, root, edges)


def finite_product(kind: str, g1: ColoredRootedGraph, g2: ColoredRootedGraph) -> ColoredRootedGraph:
    """Comb, star and orthogonal products, plain or with loops."""
    if kind == "comb":
        return _comb_like(g1, g2, skip_root=False, loop_kind=False)
    if kind == "comb_loop":
        return _comb_like(g1, g2, skip_root=False, loop_kind=True)
    if kind == "ortho":
        return _comb_like(g1, g2, skip_root=True, loop_kind=False)
    if kind == "ortho_loop":
        return _comb_like(g1, g2, skip_root=True, loop_kind=True)
    if kind == "star":
        return _star(g1, g2, loop_kind=False)
    if kind == "star_loop":
        return _star(g1, g2, loop_kind=True)
    raise ValueError(f"unknown finite product kind {kind!r}; expected one of {FINITE_KINDS}")


# -- word products (s-free, free), truncated to a ball ----------------------

Word = tuple[tuple[int, str], ...]


def _word_name(w: Word) -> str:
    return "(" + ",".join(f"{t}:{a}" for t, a in w) + ")"


class _WordProduct:
    """Implicit infinite product on alternating words.

    At a word ``w`` a copy of factor ``t`` is attached by its root for every
    type ``t`` allowed at ``w``; the copy's vertex ``a`` becomes ``w + (t, a)``
    and its root becomes ``w`` itself.
    """

    def __init__(self, g1, g2, free: bool):
        self.factors = {1: g1, 2: g2}
        self.free = free
        self.nbrs = {t: g.neighbors() for t, g in self.factors.items()}

    def types_at(self, w: Word) -> tuple[int, ...]:
        if not w:
            return (1, 2) if self.free else (1,)
        return (3 - w[-1][0],)

    def _place(self, w: Word, t: int, a: str) -> Word:
        return w if a == self.factors[t].root else w + ((t, a),)

    def copy_edges(self, w: Word, t: int) -> Iterator[tuple[Word, Word, int, int]]:
        for e in self.factors[t].edges:
            yield self._place(w, t, e.u), self._place(w, t, e.v), t, e.mult

    def neighbors(self, u: Word) -> Iterator[Word]:
        # copies hanging at u
        for t in self.types_at(u):
            g = self.factors[t]
            for b, _, _ in self.nbrs[t][g.root]:
                yield self._place(u, t, b)
        # the copy u itself belongs to
        if u:
            w, (t, a) = u[:-1], u[-1]
            for b, _, _ in self.nbrs[t][a]:
                yield self._place(w, t, b)

    def ball(self, radius: int) -> ColoredRootedGraph:
        dist: dict[Word, int] = {(): 0}
        queue = deque([()])
        while queue:
            u = queue.popleft()
            if dist[u] == radius:
                continue
            for v in self.neighbors(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        order = {t: {a: i for i, a in enumerate(g.vertices)} for t, g in self.factors.items()}

        def key(w: Word):
            return (len(w), [(t, order[t][a]) for t, a in w])

        words = sorted(dist, key=key)
        edges = []
        for w in words:
            for t in self.types_at(w):
                for u, v, c, k in self.copy_edges(w, t):
                    if u in dist and v in dist:
                        edges.append(Edge(_word_name(u), _word_name(v), c, k))
        return ColoredRootedGraph([_word_name(w) for w in words], _word_name(()), edges)


def ball_product(
    kind: str, g1: ColoredRootedGraph, g2: ColoredRootedGraph, radius: int
) -> ColoredRootedGraph:
    """Closed ball of the given graph distance around the root of an infinite product.

    ``sfree_loop`` is the s-free product of ``g1`` and ``g2`` plus one color-2
    loop at the root; ``free`` is the free product.
    """
    if kind not in BALL_KINDS:
        raise ValueError(f"unknown ball product kind {kind!r}; expected one of {BALL_KINDS}")
    if radius < 1:
        raise ValueError(f"radius must be positive, got {radius}")
    g = _WordProduct(g1, g2, free=(kind == "free")).ball(radius)
    if kind == "sfree_loop":
        g = ColoredRootedGraph(g.vertices, g.root, g.edges + (Edge(g.root, g.root, 2, 1),))
    return g


def product(
    kind: str, g1: ColoredRootedGraph, g2: ColoredRootedGraph, radius: int | None = None
) -> ColoredRootedGraph:
    """Any product kind; ``radius`` is required exactly for the ball kinds."""
    if kind in BALL_KINDS:
        if radius is None:
            raise ValueError(f"{kind} product needs a radius")
        return ball_product(kind, g1, g2, radius)
    return finite_product(kind, g1, g2)


# -- small named factors ----------------------------------------------------

def point() -> ColoredRootedGraph:
    """Single vertex, no edges."""
    return ColoredRootedGraph(["e"], "e")


def loop_point(color: int = 1) -> ColoredRootedGraph:
    """Single vertex carrying one loop."""
    return ColoredRootedGraph(["e"], "e", [("e", "e", color)])


def path_with_root_loop() -> ColoredRootedGraph:
    """Path ``e - x - x2`` with a loop at ``e``; first-return moments (1, 1, 0, 1)."""
    return ColoredRootedGraph(["e", "x", "x2"], "e", [("e", "e", 1), ("e", "x", 1), ("x", "x2", 1)])


def broom_with_root_loop() -> ColoredRootedGraph:
    """Edge ``e - y`` with a loop at ``e`` and two leaves on ``y``; moments (1, 1, 0, 2)."""
    return ColoredRootedGraph(
        ["e", "y", "y1", "y2"],
        "e",
        [("e", "e", 1), ("e", "y", 1), ("y", "y1", 1), ("y", "y2", 1)],
    )


def cherry_with_root_loop() -> ColoredRootedGraph:
    """Root with a loop and two leaves; first-return moments (1, 2, 0, 0)."""
    return ColoredRootedGraph(["e", "a", "b"], "e", [("e", "e", 1), ("e", "a", 1), ("e", "b", 1)])


def centered_path() -> ColoredRootedGraph:
    """Three-vertex path rooted at its center; first-return moments (0, 2, 0, 0)."""
    return ColoredRootedGraph(["e", "a", "b"], "e", [("e", "a", 1), ("e", "b", 1)])
