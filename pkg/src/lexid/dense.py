"""Lexicographic identifying-code construction over the bit-matrix view.

The constructor scans vertices in index order and maintains an n x n bit
matrix X whose row a is the bitset of N(v_a) intersected with the code built
so far.  Vertex j forces a new codeword when its row is zero (not covered) or
equals an earlier row (not identified); the codeword chosen is always the
smallest vertex that can repair the defect, which is what makes the code
lexicographic.  On a graph with twins the repair is impossible and the run
reports the offending pair instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import Code, ClosedNeighborhoodMatrix, RunOutcome, TwinFailure, bits_to_vertices


@dataclass
class DenseWorkTally:
    """Model cost of one dense run, in single-bit operations.

    Whole-row tests (the zero test and each row-equality test in the search
    for k) are charged the full row width n, regardless of how the comparison
    is realized; min1/min2 charge one unit per position scanned; inserting a
    codeword charges n for copying one matrix column.
    """

    row_comparison_bits: int = 0
    scan_bits: int = 0
    column_copy_bits: int = 0

    @property
    def total(self) -> int:
        return self.row_comparison_bits + self.scan_bits + self.column_copy_bits


@dataclass(frozen=True)
class DenseCoverageState:
    """Snapshot of the coverage matrix after one step, for inspection in tests."""

    step: int
    rows: tuple[int, ...]  # rows[a-1] is the bitset of N(v_a) ∩ C
    code: tuple[int, ...]

    def row(self, a: int) -> int:
        return self.rows[a - 1]

    def row_support(self, a: int) -> tuple[int, ...]:
        return bits_to_vertices(self.rows[a - 1])


def min1(b: ClosedNeighborhoodMatrix, j: int) -> int:
    """Smallest vertex in N(v_j); at most j since v_j covers itself."""
    row = b.row(j)
    return (row & -row).bit_length()


def min2(b: ClosedNeighborhoodMatrix, j: int, k: int) -> int:
    """Smallest vertex covering exactly one of v_j, v_k; n+1 if none exists.

    Scans the two rows for the first differing position, so the n+1 return
    happens exactly when N(v_j) = N(v_k), i.e. j and k are twins.
    """
    if j == k:
        raise ValueError(f"min2 requires distinct vertices, got j = k = {j}")
    diff = b.row(j) ^ b.row(k)
    if diff == 0:
        return b.n + 1
    return (diff & -diff).bit_length()


def lex_code_dense(
    b: ClosedNeighborhoodMatrix,
    *,
    observer: Callable[[DenseCoverageState], None] | None = None,
    tally: DenseWorkTally | None = None,
) -> RunOutcome:
    """Build the lexicographic code of the graph behind b, or report twins.

    On twin-free input the returned Code is identifying.  On input with twins
    the run stops at the first vertex j whose closed neighborhood duplicates
    an earlier k and returns TwinFailure(j, k).

    observer, if given, receives a DenseCoverageState after every completed
    step; tally, if given, accumulates the model bit-operation cost.
    """
    n = b.n
    rows_b = b._rows
    x = [0] * (n + 1)
    code: list[int] = []
    for j in range(1, n + 1):
        xj = x[j]
        l = 0
        if xj == 0:
            row = rows_b[j]
            l = (row & -row).bit_length()
            if tally is not None:
                tally.row_comparison_bits += n  # zero test
                tally.scan_bits += l
        else:
            # first k < j whose row matches; ties cannot occur since earlier
            # rows are pairwise distinct
            try:
                k = x.index(xj, 1, j)
            except ValueError:
                k = j
            if tally is not None:
                tally.row_comparison_bits += n  # zero test
                tally.row_comparison_bits += n * (k if k < j else j - 1)
            if k < j:
                diff = rows_b[j] ^ rows_b[k]
                if diff == 0:
                    if tally is not None:
                        tally.scan_bits += n
                    return TwinFailure(j=j, k=k)
                l = (diff & -diff).bit_length()
                if tally is not None:
                    tally.scan_bits += l
        if l:
            code.append(l)
            mask = 1 << (l - 1)
            for a in range(1, n + 1):  # copy column l of the neighborhood matrix
                if rows_b[a] & mask:
                    x[a] |= mask
            if tally is not None:
                tally.column_copy_bits += n
        if observer is not None:
            observer(DenseCoverageState(step=j, rows=tuple(x[1:]), code=tuple(sorted(code))))
    return Code(tuple(sorted(code)))
