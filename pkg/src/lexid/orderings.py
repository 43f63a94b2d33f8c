"""Vertex-ordering strategies and permutation plumbing.

The lexicographic constructors process vertices by index, so "choose an
ordering" means "relabel the graph".  A strategy yields a processing sequence
(position -> original vertex); helpers convert it to the relabeling
permutation, apply it, and map resulting codes back to original labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Code, Graph, permute, _check_permutation
from .rng import SplitMix64

STRATEGY_KINDS = ("identity", "random", "degree-asc", "degree-desc", "explicit")


@dataclass(frozen=True)
class OrderingStrategy:
    """How to order vertices before a run; always yields a bijection on 1..n."""

    kind: str
    sequence: tuple[int, ...] | None = None  # explicit processing order

    def __post_init__(self) -> None:
        if self.kind not in STRATEGY_KINDS:
            raise ValueError(f"unknown ordering {self.kind!r}; choose from {', '.join(STRATEGY_KINDS)}")
        if self.kind == "explicit":
            if self.sequence is None:
                raise ValueError("explicit ordering requires a sequence")
            object.__setattr__(self, "sequence", tuple(self.sequence))
        elif self.sequence is not None:
            raise ValueError(f"ordering {self.kind!r} does not take a sequence")

    def sequence_for(self, g: Graph, rng: SplitMix64 | None = None) -> list[int]:
        """Processing sequence for g: entry i-1 is the vertex processed i-th."""
        if self.kind == "identity":
            return list(range(1, g.n + 1))
        if self.kind == "random":
            if rng is None:
                raise ValueError("random ordering requires an rng")
            seq = list(range(1, g.n + 1))
            rng.shuffle(seq)
            return seq
        if self.kind == "degree-asc":
            return sorted(range(1, g.n + 1), key=lambda v: (g.degrees[v], v))
        if self.kind == "degree-desc":
            return sorted(range(1, g.n + 1), key=lambda v: (-g.degrees[v], v))
        seq = list(self.sequence)  # explicit
        _check_permutation(seq, g.n)
        return seq


def as_strategy(strategy: OrderingStrategy | str | Sequence[int]) -> OrderingStrategy:
    """Coerce a strategy name or explicit sequence into an OrderingStrategy."""
    if isinstance(strategy, OrderingStrategy):
        return strategy
    if isinstance(strategy, str):
        return OrderingStrategy(strategy)
    return OrderingStrategy("explicit", tuple(strategy))


def permutation_from_sequence(sequence: Sequence[int]) -> list[int]:
    """Relabeling permutation p with p[v-1] = new label of v, from a processing sequence."""
    p = [0] * len(sequence)
    for position, v in enumerate(sequence, 1):
        p[v - 1] = position
    return p


def inverse_permutation(p: Sequence[int]) -> list[int]:
    """Inverse bijection: result[new-1] = old."""
    inv = [0] * len(p)
    for old, new in enumerate(p, 1):
        inv[new - 1] = old
    return inv


def apply_sequence(g: Graph, sequence: Sequence[int]) -> Graph:
    """Relabel g so that sequence[i-1] becomes vertex i."""
    return permute(g, permutation_from_sequence(sequence))


def code_to_original(code: Code, sequence: Sequence[int]) -> Code:
    """Map a code found on the relabeled graph back to original vertex labels."""
    return Code(tuple(sorted(sequence[c - 1] for c in code)))


def prefix_permutation(g: Graph, members: Iterable[int]) -> list[int]:
    """Relabeling permutation that places the given vertices (ascending) at 1..m."""
    member_set = set(members)
    sequence = sorted(member_set) + [v for v in range(1, g.n + 1) if v not in member_set]
    _check_permutation(sequence, g.n)
    return permutation_from_sequence(sequence)
