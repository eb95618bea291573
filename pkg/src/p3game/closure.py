"""P3-closedness, hull computation, and move legality for both game
variants.

A vertex set S is P3-closed when no vertex outside S has two or more
neighbors inside S.  The hull of A is the smallest P3-closed superset of
A, obtained by repeatedly absorbing any vertex with two labeled
neighbors.  The hull operator is a closure operator: extensive, monotone,
idempotent, and with an empty hull for the empty set; closed sets are
also closed under intersection.  Tests exercise all of these properties.

Game rules: players alternately label an unlabeled vertex, after which
the labeled set is replaced by its hull.  In the Free variant any
unlabeled vertex may be chosen.  In the Connected variant the first move
is unrestricted and every later move must be within distance two of the
labeled set, which is equivalent to requiring that the new hull induce a
connected subgraph.  Under normal play the player without a legal move
loses.

All operations here are pure functions; Position values are immutable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from .graphs import Graph, bits, popcount


class Variant(enum.Enum):
    FREE = "free"
    CONNECTED = "connected"


class IllegalMoveError(ValueError):
    """Raised when apply_move is given a vertex outside legal_moves; this
    signals a bug in the caller, not a recoverable game state."""


# =====================================================================
# Closedness and hulls
# =====================================================================

def is_p3_closed(g: Graph, s: int) -> bool:
    """True iff no vertex outside s has >= 2 neighbors inside s."""
    outside = g.full_mask & ~s
    for x in bits(outside):
        if popcount(g.adj[x] & s) >= 2:
            return False
    return True


def hull(g: Graph, a: int) -> int:
    """Smallest P3-closed superset of a.

    Fixpoint with per-vertex counters of labeled neighbors and a work
    queue; amortized O(n + m) per call.  This sits in the innermost loop
    of the search engine.
    """
    if a == 0:
        return 0
    adj = g.adj
    counts = [0] * g.n
    inside = a
    queue = []
    for v in bits(a):
        for w in bits(adj[v] & ~inside):
            counts[w] += 1
            if counts[w] == 2:
                queue.append(w)
    while queue:
        v = queue.pop()
        bit = 1 << v
        if inside & bit:
            continue
        inside |= bit
        for w in bits(adj[v] & ~inside):
            counts[w] += 1
            if counts[w] == 2:
                queue.append(w)
    return inside


def hull_by_rescan(g: Graph, a: int, order: Optional[Iterable[int]] = None) -> int:
    """Reference hull: rescan all vertices until no absorption happens.

    ``order`` fixes the scan order (default 0..n-1); the result must not
    depend on it, which the order-independence tests check against the
    queue-based implementation.
    """
    scan = list(order) if order is not None else list(range(g.n))
    inside = a
    changed = True
    while changed:
        changed = False
        for v in scan:
            bit = 1 << v
            if inside & bit:
                continue
            if popcount(g.adj[v] & inside) >= 2:
                inside |= bit
                changed = True
    return inside


# =====================================================================
# Positions and moves
# =====================================================================

@dataclass(frozen=True)
class Position:
    """Game state: a graph, the labeled set L, and the variant.

    Between moves L is always P3-closed, and in the Connected variant a
    nonempty L induces a connected subgraph.  Both invariants are checked
    at construction time.
    """

    graph: Graph
    labeled: int
    variant: Variant

    def __post_init__(self):
        g, lab = self.graph, self.labeled
        if lab & ~g.full_mask:
            raise ValueError("labeled set contains ids outside the graph")
        if not is_p3_closed(g, lab):
            raise ValueError("labeled set is not P3-closed")
        if self.variant is Variant.CONNECTED and lab:
            if not _induces_connected(g, lab):
                raise ValueError("labeled set must induce a connected subgraph")

    @property
    def is_over(self) -> bool:
        return legal_moves(self) == 0


def _induces_connected(g: Graph, mask: int) -> bool:
    seed = mask & -mask
    comp = seed
    frontier = seed
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj[v]
        grow &= mask & ~comp
        comp |= grow
        frontier = grow
    return comp == mask


def start_position(g: Graph, variant: Variant) -> Position:
    return Position(g, 0, variant)


def legal_moves(p: Position) -> int:
    """Bitmask of playable vertices.

    Free: every unlabeled vertex.  Connected: every vertex when L is
    empty, else the unlabeled vertices within distance two of L (two
    rounds of neighborhood expansion; full BFS is never needed).
    """
    return legal_moves_raw(p.graph, p.labeled, p.variant)


def legal_moves_raw(g: Graph, labeled: int, variant: Variant) -> int:
    """legal_moves on the raw bitmask, for engine inner loops."""
    unlabeled = g.full_mask & ~labeled
    if variant is Variant.FREE or labeled == 0:
        return unlabeled
    reach = labeled | g.neighborhood_of_set(labeled)
    reach |= g.neighborhood_of_set(reach)
    return reach & unlabeled


def apply_move(p: Position, x: int) -> Position:
    """Label x and replace the labeled set with its hull."""
    if not (0 <= x < p.graph.n) or not (legal_moves(p) >> x) & 1:
        raise IllegalMoveError("vertex %r is not a legal move" % (x,))
    return Position(p.graph, hull(p.graph, p.labeled | (1 << x)), p.variant)
