"""Exact Grundy values by memoized exhaustive search.

This is the ground-truth oracle that every closed-form solver is checked
against.  A position's Grundy value is the mex of its children's values
(0 at positions with no legal move); under normal play the player to move
wins exactly when the value is nonzero.  Independent subgames combine by
nim-sum (binary addition without carry), e.g. 3 xor 6 = 5.

Positions are keyed by (labeled bitmask, variant) per graph; there is no
isomorphism-based canonicalization.  Correctness first: symmetry
reduction is an optimization with high bug risk.

Thread use: a TranspositionTable may be shared by workers evaluating
independent subtrees.  Writes are idempotent (same key implies same
value), so racy duplicate computation is harmless, and the table rejects
a divergent write outright.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from operator import xor
from typing import Iterable, Optional

from .graphs import Graph, bits, components, induced_subgraph
from .closure import (Position, Variant, hull, legal_moves_raw,
                      start_position)

#: Default cap on stored positions; exceeding it aborts the search
#: instead of ever returning an approximate answer.
DEFAULT_BUDGET = 50_000_000


class ResourceLimitError(RuntimeError):
    """The search outgrew its node budget; the instance is too large."""


def mex(values: Iterable[int]) -> int:
    """Smallest nonnegative integer not among ``values``."""
    seen = set(values)
    k = 0
    while k in seen:
        k += 1
    return k


def nim_sum(values: Iterable[int]) -> int:
    """Fold by exclusive-or; empty input gives 0."""
    return reduce(xor, values, 0)


class Player(enum.Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a start position.

    winner is First exactly when grundy is nonzero.  witness is a winning
    first move (the lowest-numbered one) and is present exactly when the
    first player wins; a solver that only derives the winner may leave
    grundy and witness as None.
    """

    winner: Player
    grundy: Optional[int]
    witness: Optional[int]

    def __post_init__(self):
        if self.grundy is not None:
            if (self.winner is Player.FIRST) != (self.grundy != 0):
                raise ValueError("winner and grundy value disagree")
        if self.witness is not None and self.winner is not Player.FIRST:
            raise ValueError("only a winning first player has a witness move")

    def to_json_dict(self) -> dict:
        return {"winner": self.winner.value,
                "grundy": self.grundy,
                "witness": self.witness}


class TranspositionTable:
    """Memo of final Grundy values for one graph.

    Keys are (labeled bitmask, variant); every stored labeled set is
    P3-closed because the engine only ever visits hulls.  An entry, once
    written, never changes; a conflicting write raises.
    """

    __slots__ = ("graph", "budget", "entries")

    def __init__(self, graph: Graph, budget: int = DEFAULT_BUDGET):
        if budget < 1:
            raise ValueError("budget must be positive")
        self.graph = graph
        self.budget = budget
        self.entries: dict[tuple[int, Variant], int] = {}

    def lookup(self, labeled: int, variant: Variant) -> Optional[int]:
        return self.entries.get((labeled, variant))

    def store(self, labeled: int, variant: Variant, value: int) -> None:
        key = (labeled, variant)
        prior = self.entries.get(key)
        if prior is not None:
            if prior != value:
                raise AssertionError(
                    "transposition table corruption: %r stored %d, got %d"
                    % (key, prior, value))
            return
        if len(self.entries) >= self.budget:
            raise ResourceLimitError(
                "node budget of %d table entries exceeded" % self.budget)
        self.entries[key] = value

    def __len__(self):
        return len(self.entries)


def grundy(p: Position, table: Optional[TranspositionTable] = None,
           budget: Optional[int] = None) -> int:
    """Exact Grundy value of a position."""
    if table is None:
        table = TranspositionTable(p.graph, budget or DEFAULT_BUDGET)
    elif table.graph is not p.graph and table.graph != p.graph:
        raise ValueError("transposition table belongs to a different graph")
    return _grundy_mask(p.graph, p.labeled, p.variant, table)


def _grundy_mask(g: Graph, labeled: int, variant: Variant,
                 table: TranspositionTable) -> int:
    cached = table.lookup(labeled, variant)
    if cached is not None:
        return cached
    child_values = set()
    for child in _child_masks(g, labeled, variant):
        child_values.add(_grundy_mask(g, child, variant, table))
    value = mex(child_values)
    table.store(labeled, variant, value)
    return value


def _child_masks(g: Graph, labeled: int, variant: Variant) -> set[int]:
    """Distinct hulls reachable in one move (moves that close to the same
    set are the same child)."""
    out = set()
    for x in bits(legal_moves_raw(g, labeled, variant)):
        out.add(hull(g, labeled | (1 << x)))
    return out


def decide(g: Graph, variant: Variant,
           budget: Optional[int] = None) -> Verdict:
    """Solve the start position: winner, Grundy value, and the
    lowest-numbered winning first move when one exists."""
    if g.n < 1:
        raise ValueError("cannot decide the game on an empty graph")
    table = TranspositionTable(g, budget or DEFAULT_BUDGET)
    value = _grundy_mask(g, 0, variant, table)
    witness = None
    if value != 0:
        for x in bits(legal_moves_raw(g, 0, variant)):
            child = hull(g, 1 << x)
            if _grundy_mask(g, child, variant, table) == 0:
                witness = x
                break
        assert witness is not None, "nonzero position must have a 0-child"
    winner = Player.FIRST if value != 0 else Player.SECOND
    return Verdict(winner, value, witness)


def best_move(p: Position, table: Optional[TranspositionTable] = None) -> Optional[int]:
    """A move to a Grundy-0 child if one exists, else the lowest-numbered
    legal move, else None (no legal move)."""
    moves = legal_moves_raw(p.graph, p.labeled, p.variant)
    if moves == 0:
        return None
    if table is None:
        table = TranspositionTable(p.graph, DEFAULT_BUDGET)
    fallback = None
    for x in bits(moves):
        if fallback is None:
            fallback = x
        child = hull(p.graph, p.labeled | (1 << x))
        if _grundy_mask(p.graph, child, p.variant, table) == 0:
            return x
    return fallback


def free_grundy_by_components(g: Graph, budget: Optional[int] = None) -> int:
    """Free-variant start value computed as the nim-sum of the start
    values of the connected components.

    Only the Free game decomposes this way: its moves never depend on
    anything outside the component they touch, and the closure cannot
    leak across components.  The Connected variant confines play to the
    first component chosen, which is not a sum of independent games, so
    no such helper exists for it.
    """
    parts = []
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        parts.append(grundy(start_position(sub, Variant.FREE),
                            budget=budget or DEFAULT_BUDGET))
    return nim_sum(parts)
