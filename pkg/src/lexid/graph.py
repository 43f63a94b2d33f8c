"""Core graph types: vertices 1..n, closed neighborhoods, twins, code checks.

Vertices are 1-indexed everywhere.  A vertex v corresponds to bit v-1 in the
integer bitsets used throughout the package, so the bitset of {1} is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union


def _bit(v: int) -> int:
    return 1 << (v - 1)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 1..n.

    Edges are stored canonically as a frozenset of (u, v) pairs with u < v.
    The constructor accepts any iterable of pairs and rejects self-loops,
    out-of-range endpoints, and duplicate edges (in either orientation).
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        canonical: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ValueError(f"edge endpoints must be integers, got ({u!r}, {v!r})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
            pair = (u, v) if u < v else (v, u)
            if pair in canonical:
                raise ValueError(f"duplicate edge ({pair[0]}, {pair[1]})")
            canonical.add(pair)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canonical))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degree of each vertex; index 0 is unused padding."""
        deg = [0] * (self.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees[1:])

    @cached_property
    def neighborhood_matrix(self) -> ClosedNeighborhoodMatrix:
        """Bit-matrix view: row j is the bitset of the closed neighborhood N(v_j)."""
        rows = [0] * (self.n + 1)
        for v in range(1, self.n + 1):
            rows[v] = _bit(v)
        for u, v in self.edges:
            rows[u] |= _bit(v)
            rows[v] |= _bit(u)
        return ClosedNeighborhoodMatrix(self.n, tuple(rows))

    @cached_property
    def neighborhood_array(self) -> NeighborhoodArray:
        """Sorted-list view: entry j is the ascending tuple of N(v_j)."""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for v in range(1, self.n + 1):
            adj[v].append(v)
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        lists = tuple(() if not members else tuple(sorted(members)) for members in adj)
        return NeighborhoodArray(self.n, lists)


class ClosedNeighborhoodMatrix:
    """Rows of the closed-neighborhood matrix (identity plus adjacency) as bitsets.

    Bit l-1 of row(j) is set iff v_l is in N(v_j); the diagonal is all ones and
    the matrix is symmetric.  Rows are immutable once built.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows: tuple[int, ...]) -> None:
        self.n = n
        self._rows = rows  # index 0 unused

    def row(self, j: int) -> int:
        """Bitset of N(v_j)."""
        self._check(j)
        return self._rows[j]

    def entry(self, j: int, l: int) -> bool:
        """True iff v_l covers v_j."""
        self._check(j)
        self._check(l)
        return bool(self._rows[j] >> (l - 1) & 1)

    def support(self, j: int) -> tuple[int, ...]:
        """Members of N(v_j) in ascending order."""
        return bits_to_vertices(self.row(j))

    def _check(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")


class NeighborhoodArray:
    """Per-vertex sorted closed neighborhoods; entry j has length degree(v_j)+1."""

    __slots__ = ("n", "_lists")

    def __init__(self, n: int, lists: tuple[tuple[int, ...], ...]) -> None:
        self.n = n
        self._lists = lists  # index 0 unused

    def neighborhood(self, j: int) -> tuple[int, ...]:
        """Ascending tuple of N(v_j)."""
        if not 1 <= j <= self.n:
            raise ValueError(f"vertex {j} out of range 1..{self.n}")
        return self._lists[j]

    def size(self, j: int) -> int:
        """Length of the list for v_j, i.e. degree(v_j) + 1."""
        return len(self.neighborhood(j))


@dataclass(frozen=True)
class Code:
    """A strictly increasing tuple of vertex indices claimed to identify a graph."""

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        for m in members:
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"code member {m!r} is not a positive integer")
        if any(a >= b for a, b in zip(members, members[1:])):
            raise ValueError(f"code members must be strictly increasing, got {members}")

    @property
    def cardinality(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members


@dataclass(frozen=True)
class TwinFailure:
    """Vertices j and k (k < j) whose closed neighborhoods coincide."""

    j: int
    k: int

    def __post_init__(self) -> None:
        if not 1 <= self.k < self.j:
            raise ValueError(f"twin pair must satisfy 1 <= k < j, got k={self.k}, j={self.j}")

    @property
    def pair(self) -> tuple[int, int]:
        """The pair as (k, j), matching find_twins output."""
        return (self.k, self.j)


RunOutcome = Union[Code, TwinFailure]


class TwinsError(ValueError):
    """Raised by operations that require a twin-free graph."""

    def __init__(self, pair: tuple[int, int]) -> None:
        self.pair = pair
        super().__init__(f"graph is not twin-free: vertices {pair[0]} and {pair[1]} are twins")


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    """The vertex v together with its neighbors, ascending."""
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} out of range 1..{g.n}")
    return g.neighborhood_matrix.support(v)


def find_twins(g: Graph) -> tuple[int, int] | None:
    """First pair (k, j), k < j, with N(v_k) = N(v_j); None iff twin-free.

    Pairs are searched in order of increasing j, then increasing k, which is
    exactly the pair the lexicographic constructors fail on.
    """
    rows = g.neighborhood_matrix._rows
    first_with_row: dict[int, int] = {}
    for j in range(1, g.n + 1):
        row = rows[j]
        k = first_with_row.setdefault(row, j)
        if k != j:
            return (k, j)
    return None


def is_identifying_code(g: Graph, code: Code | Iterable[int]) -> bool:
    """True iff all closed neighborhoods intersect the code in distinct, non-empty sets."""
    members = tuple(code)
    cmask = 0
    for v in members:
        if not 1 <= v <= g.n:
            raise ValueError(f"code member {v} out of range 1..{g.n}")
        cmask |= _bit(v)
    rows = g.neighborhood_matrix._rows
    seen: set[int] = set()
    for v in range(1, g.n + 1):
        trace = rows[v] & cmask
        if not trace or trace in seen:
            return False
        seen.add(trace)
    return True


def permute(g: Graph, p: Sequence[int]) -> Graph:
    """Relabel vertices: p[v-1] is the new label of v; p must be a bijection on 1..n."""
    _check_permutation(p, g.n)
    return Graph(g.n, ((p[u - 1], p[v - 1]) for u, v in g.edges))


def _check_permutation(p: Sequence[int], n: int) -> None:
    if len(p) != n or sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {tuple(p)!r}")


def bits_to_vertices(mask: int) -> tuple[int, ...]:
    """Ascending vertices of a bitset (bit v-1 represents vertex v)."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def vertices_to_bits(vertices: Iterable[int]) -> int:
    """Bitset of a vertex collection."""
    mask = 0
    for v in vertices:
        mask |= _bit(v)
    return mask
