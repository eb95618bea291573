"""Hull operator and move legality: worked examples, the closure axioms
as properties over random graphs, and the equivalence of the two
characterizations of connected-variant legality."""

import random

import pytest

from p3game import (Graph, IllegalMoveError, Position, Variant, apply_move,
                    bits, hull, hull_by_rescan, is_p3_closed, legal_moves,
                    make_clique, make_cycle, make_path, make_star, mask_of,
                    random_gnp, start_position)
from p3game.closure import legal_moves_raw

from helpers import connected_atlas_graphs


# =====================================================================
# worked hull examples
# =====================================================================

def test_hull_examples():
    p4 = make_path(4)
    assert hull(p4, mask_of([0, 2])) == mask_of([0, 1, 2])
    assert hull(p4, mask_of([0, 3])) == mask_of([0, 3])
    c4 = make_cycle(4)
    assert hull(c4, mask_of([0, 2])) == c4.full_mask  # both midpoints absorb
    c5 = make_cycle(5)
    assert hull(c5, mask_of([0, 2])) == mask_of([0, 1, 2])
    star = make_star(4)
    assert hull(star, mask_of([0, 1])) == mask_of([0, 1])
    assert hull(star, mask_of([1, 2])) == mask_of([0, 1, 2])  # center absorbs
    k4 = make_clique(4)
    assert hull(k4, mask_of([1, 3])) == k4.full_mask
    assert hull(p4, 0) == 0
    assert hull(p4, mask_of([1])) == mask_of([1])


def test_is_p3_closed_examples():
    p4 = make_path(4)
    assert is_p3_closed(p4, 0)
    assert is_p3_closed(p4, mask_of([0]))
    assert is_p3_closed(p4, mask_of([0, 3]))
    assert not is_p3_closed(p4, mask_of([0, 2]))
    assert is_p3_closed(p4, p4.full_mask)


# =====================================================================
# closure axioms over random inputs
# =====================================================================

def _random_pairs(count, max_n, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        g = random_gnp(n, rng.uniform(0.05, 0.95), rng)
        yield g, rng.getrandbits(n), rng


def test_hull_is_a_closure_operator():
    for g, a, rng in _random_pairs(400, 12, 10):
        h = hull(g, a)
        assert a & ~h == 0, "extensive: a is inside hull(a)"
        assert hull(g, h) == h, "idempotent"
        assert is_p3_closed(g, h)
        b = a | rng.getrandbits(g.n)  # a superset of a
        assert h & ~hull(g, b) == 0, "monotone: hull(a) inside hull(b)"
    assert hull(make_path(5), 0) == 0


def test_closed_sets_are_exactly_hull_fixpoints():
    for g, a, _ in _random_pairs(300, 12, 11):
        assert is_p3_closed(g, a) == (hull(g, a) == a)


def test_closed_sets_intersect_to_closed_sets():
    for g, a, rng in _random_pairs(300, 12, 12):
        c1 = hull(g, a)
        c2 = hull(g, rng.getrandbits(g.n))
        assert is_p3_closed(g, c1 & c2)


def test_hull_matches_rescan_in_any_order():
    for g, a, rng in _random_pairs(200, 12, 13):
        expect = hull(g, a)
        assert hull_by_rescan(g, a) == expect
        order = list(range(g.n))
        for _ in range(4):
            rng.shuffle(order)
            assert hull_by_rescan(g, a, order) == expect


# =====================================================================
# positions
# =====================================================================

def test_position_validates_closedness():
    p4 = make_path(4)
    with pytest.raises(ValueError, match="closed"):
        Position(p4, mask_of([0, 2]), Variant.FREE)
    with pytest.raises(ValueError, match="outside"):
        Position(p4, 1 << 7, Variant.FREE)


def test_position_validates_connectivity_for_connected_variant():
    p4 = make_path(4)
    Position(p4, mask_of([0, 3]), Variant.FREE)  # fine in the free game
    with pytest.raises(ValueError, match="connected"):
        Position(p4, mask_of([0, 3]), Variant.CONNECTED)
    Position(p4, mask_of([0, 1]), Variant.CONNECTED)
    Position(p4, 0, Variant.CONNECTED)  # empty set is vacuously fine


def test_start_position_and_game_over():
    g = make_path(3)
    p = start_position(g, Variant.FREE)
    assert p.labeled == 0 and not p.is_over
    assert Position(g, g.full_mask, Variant.FREE).is_over


# =====================================================================
# legal moves
# =====================================================================

def test_free_moves_are_all_unlabeled():
    g = make_cycle(6)
    p = start_position(g, Variant.FREE)
    assert legal_moves(p) == g.full_mask
    p = Position(g, mask_of([0]), Variant.FREE)
    assert legal_moves(p) == g.full_mask & ~mask_of([0])


def test_first_connected_move_is_unrestricted():
    g = make_path(9)
    assert legal_moves(start_position(g, Variant.CONNECTED)) == g.full_mask


def test_connected_moves_worked_example():
    g = make_path(7)  # 0-1-2-3-4-5-6
    p = Position(g, mask_of([3]), Variant.CONNECTED)
    assert legal_moves(p) == mask_of([1, 2, 4, 5])  # distance <= 2 from 3


def _brute_connected_moves(g, labeled):
    """Definitional legality: x is playable iff the new hull induces a
    connected subgraph."""
    out = 0
    unlabeled = g.full_mask & ~labeled
    for x in bits(unlabeled):
        new = hull(g, labeled | (1 << x))
        sub_nodes = list(bits(new))
        seen = {sub_nodes[0]}
        frontier = [sub_nodes[0]]
        while frontier:
            v = frontier.pop()
            for w in bits(g.adj[v] & new):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        if len(seen) == len(sub_nodes):
            out |= 1 << x
    return out


def _distance_two_moves(g, labeled):
    """Prose legality: within distance two of the labeled set."""
    reach = labeled | g.neighborhood_of_set(labeled)
    reach |= g.neighborhood_of_set(reach)
    return reach & ~labeled


def test_connected_legality_equals_both_characterizations():
    # exhaustively over every closed connected labeled set of every
    # connected graph with <= 5 vertices
    for g in connected_atlas_graphs(5):
        for labeled in range(1, 1 << g.n):
            if hull(g, labeled) != labeled:
                continue
            try:
                Position(g, labeled, Variant.CONNECTED)
            except ValueError:
                continue
            got = legal_moves_raw(g, labeled, Variant.CONNECTED)
            assert got == _brute_connected_moves(g, labeled)
            assert got == _distance_two_moves(g, labeled)


def test_connected_legality_on_reachable_positions():
    # the same equivalence along actual play, on six-vertex graphs
    for g in connected_atlas_graphs(6):
        seen = set()
        stack = [0]
        while stack:
            labeled = stack.pop()
            if labeled in seen:
                continue
            seen.add(labeled)
            moves = legal_moves_raw(g, labeled, Variant.CONNECTED)
            if labeled:
                assert moves == _brute_connected_moves(g, labeled)
            for x in bits(moves):
                stack.append(hull(g, labeled | (1 << x)))


# =====================================================================
# applying moves
# =====================================================================

def test_apply_move_takes_the_hull():
    g = make_path(4)
    p = start_position(g, Variant.FREE)
    p = apply_move(p, 0)
    assert p.labeled == mask_of([0])
    p = apply_move(p, 2)  # vertex 1 gets absorbed
    assert p.labeled == mask_of([0, 1, 2])


def test_apply_move_rejects_illegal_moves():
    g = make_path(5)
    p = Position(g, mask_of([0]), Variant.CONNECTED)
    assert legal_moves(p) == mask_of([1, 2])
    with pytest.raises(IllegalMoveError):
        apply_move(p, 4)  # too far from the labeled set
    with pytest.raises(IllegalMoveError):
        apply_move(p, 0)  # already labeled
    with pytest.raises(IllegalMoveError):
        apply_move(p, 9)  # not a vertex


def test_apply_move_keeps_variant_and_graph():
    g = make_cycle(5)
    p = apply_move(start_position(g, Variant.CONNECTED), 1)
    assert p.graph is g and p.variant is Variant.CONNECTED
