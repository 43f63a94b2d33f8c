"""Lexicographic identifying-code construction over sorted adjacency lists.

Behaviorally identical to the dense constructor on every input, but the
coverage state is kept as one sorted list per vertex and inserting a codeword
l only touches the degree(l)+1 lists of the vertices l covers, which is the
saving on bounded-degree graphs.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from typing import Callable

from .graph import Code, NeighborhoodArray, RunOutcome, TwinFailure


@dataclass
class SparseWorkTally:
    """Model cost of one sparse run, in list-element touches.

    Each row comparison in the search for k charges one touch for the length
    check plus, when the lengths tie, the common length for the element walk;
    the empty test charges one; min3 charges two per position walked; and
    inserting codeword l charges one per updated list.
    """

    comparison_touches: int = 0
    empty_check_touches: int = 0
    scan_touches: int = 0
    insert_touches: int = 0

    @property
    def total(self) -> int:
        return (
            self.comparison_touches
            + self.empty_check_touches
            + self.scan_touches
            + self.insert_touches
        )


@dataclass(frozen=True)
class SparseCoverageState:
    """Snapshot of the per-vertex coverage lists after one step."""

    step: int
    rows: tuple[tuple[int, ...], ...]  # rows[a-1] is sorted N(v_a) ∩ C
    code: tuple[int, ...]

    def row(self, a: int) -> tuple[int, ...]:
        return self.rows[a - 1]


def _min3_walk(
    lj: tuple[int, ...], lk: tuple[int, ...], n: int
) -> tuple[int, int]:
    """Return (result, positions walked) for the synchronized list walk.

    Walks the two sorted lists together and stops at the first divergence,
    returning the smaller element there.  If one list is a prefix of the
    other, the longer list's next element is the answer; if the lists are
    equal the result is the failure value n+1.
    """
    m = min(len(lj), len(lk))
    i = 0
    while i < m:
        a = lj[i]
        c = lk[i]
        if a != c:
            return (a if a < c else c), i + 1
        i += 1
    if len(lj) < len(lk):
        return lk[m], m
    if len(lk) < len(lj):
        return lj[m], m
    return n + 1, m


def min3(a: NeighborhoodArray, j: int, k: int) -> int:
    """Smallest vertex covering exactly one of v_j, v_k; n+1 if none exists.

    Same contract as the bit-matrix min2, computed on sorted lists.
    """
    if j == k:
        raise ValueError(f"min3 requires distinct vertices, got j = k = {j}")
    return _min3_walk(a.neighborhood(j), a.neighborhood(k), a.n)[0]


def lex_code_sparse(
    a: NeighborhoodArray,
    *,
    observer: Callable[[SparseCoverageState], None] | None = None,
    tally: SparseWorkTally | None = None,
) -> RunOutcome:
    """Build the lexicographic code of the graph behind a, or report twins.

    Produces the same Code or TwinFailure as lex_code_dense on the same graph
    and vertex order.  observer, if given, receives a SparseCoverageState
    after every completed step; tally, if given, accumulates the model
    element-touch cost.
    """
    n = a.n
    lists = a._lists
    x: list = [None] + [[] for _ in range(n)]
    code: list[int] = []
    for j in range(1, n + 1):
        xj = x[j]
        l = 0
        if tally is not None:
            tally.empty_check_touches += 1
        if not xj:
            l = lists[j][0]
            if tally is not None:
                tally.scan_touches += 1
        else:
            try:
                k = x.index(xj, 1, j)
            except ValueError:
                k = j
            if tally is not None:
                lj = len(xj)
                touches = 0
                for kk in range(1, (k if k < j else j - 1) + 1):
                    touches += 1
                    if len(x[kk]) == lj:
                        touches += lj
                tally.comparison_touches += touches
            if k < j:
                l, walked = _min3_walk(lists[j], lists[k], n)
                if tally is not None:
                    tally.scan_touches += 2 * walked
                if l == n + 1:
                    return TwinFailure(j=j, k=k)
        if l:
            code.append(l)
            for v in lists[l]:  # only the lists of vertices covered by l change
                insort(x[v], l)
            if tally is not None:
                tally.insert_touches += len(lists[l])
        if observer is not None:
            observer(
                SparseCoverageState(
                    step=j,
                    rows=tuple(tuple(row) for row in x[1:]),
                    code=tuple(sorted(code)),
                )
            )
    return Code(tuple(sorted(code)))
