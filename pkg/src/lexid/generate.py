"""Deterministic graph generators and the pinned regression fixture.

Every generator is a pure function of its parameters (and seed, for G(n,p)),
so instances are bit-reproducible anywhere.  G(n,p) draws one uniform double
per vertex pair, pairs visited in lexicographic order, from the splitmix64
stream documented in the README.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph
from .rng import SplitMix64

FAMILIES = ("path", "cycle", "grid", "gnp", "hypercube")


def path_graph(n: int) -> Graph:
    """Path 1-2-...-n."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    """Cycle 1-2-...-n-1."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(1, n)]
    edges.append((1, n))
    return Graph(n, edges)


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols grid, vertices numbered row-major starting at 1."""
    if rows < 1 or cols < 1:
        raise ValueError(f"grid needs rows, cols >= 1, got {rows} x {cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c + 1
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    """G(n,p): each pair (u, v), u < v, kept independently with probability p.

    Pairs are visited in lexicographic order and consume exactly one uniform
    double each from SplitMix64(seed), so the instance is reproducible from
    (n, p, seed) alone.
    """
    if n < 1:
        raise ValueError(f"gnp needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"gnp needs 0 <= p <= 1, got {p}")
    rng = SplitMix64(seed)
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)


def hypercube_graph(dim: int) -> Graph:
    """dim-dimensional hypercube on 2**dim vertices; v and w adjacent iff
    their zero-based labels differ in exactly one bit."""
    if dim < 0:
        raise ValueError(f"hypercube needs dim >= 0, got {dim}")
    n = 1 << dim
    edges = []
    for v in range(n):
        for b in range(dim):
            w = v ^ (1 << b)
            if v < w:
                edges.append((v + 1, w + 1))
    return Graph(n, edges)


def gen(family: str, params: Sequence, seed: int | None = None) -> Graph:
    """Dispatch on family name; params are positional family parameters.

    path n | cycle n | grid rows cols | gnp n p (seed required) | hypercube dim
    """
    params = tuple(params)
    if family == "path":
        (n,) = _arity(family, params, 1)
        return path_graph(int(n))
    if family == "cycle":
        (n,) = _arity(family, params, 1)
        return cycle_graph(int(n))
    if family == "grid":
        rows, cols = _arity(family, params, 2)
        return grid_graph(int(rows), int(cols))
    if family == "gnp":
        n, p = _arity(family, params, 2)
        if seed is None:
            raise ValueError("gnp requires a seed")
        return gnp_graph(int(n), float(p), seed)
    if family == "hypercube":
        (dim,) = _arity(family, params, 1)
        return hypercube_graph(int(dim))
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _arity(family: str, params: tuple, want: int) -> tuple:
    if len(params) != want:
        raise ValueError(f"family {family!r} takes {want} parameter(s), got {len(params)}")
    return params


# 3x3 grid with a deliberately shuffled labeling: the lexicographic
# constructors return {1,2,3,4,5,6} on it, yet dropping vertex 1 still leaves
# an identifying code, making it the canonical non-minimality regression.
_FIXTURE_EDGES = (
    (1, 2), (2, 9), (3, 4), (3, 8), (6, 7), (5, 7),
    (1, 4), (4, 6), (2, 3), (3, 7), (8, 9), (5, 8),
)


def nonminimal_grid_fixture() -> Graph:
    """The pinned 9-vertex grid on which the lexicographic code is not minimal."""
    return Graph(9, _FIXTURE_EDGES)
