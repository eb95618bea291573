"""A guided tour of the library on one small graph: build it, watch the
closure absorb vertices, list legal moves in both variants, get the full
verdict from the engine, and replay a perfect line of play.

Run:  python3 demos/quickstart.py
"""

from p3game import (Position, TranspositionTable, Variant, apply_move,
                    best_move, bits, decide, grundy, hull, legal_moves,
                    make_cycle, make_path, start_position)


def show(mask):
    return sorted(bits(mask)) if mask else "{}"


def main():
    g = make_cycle(5)
    print("graph: the five-cycle, vertices 0..4, edges", g.edges())
    print()

    # ------------------------------------------------------------------
    # the closure operator
    # ------------------------------------------------------------------
    seed = (1 << 0) | (1 << 2)
    print("hull of {0, 2}:", show(hull(g, seed)),
          "(vertex 1 has two labeled neighbours, so it is absorbed)")
    seed = (1 << 0) | (1 << 1)
    print("hull of {0, 1}:", show(hull(g, seed)),
          "(adjacent pair, nothing else sees two labels)")
    print()

    # ------------------------------------------------------------------
    # legal moves in the two variants
    # ------------------------------------------------------------------
    pos = Position(g, hull(g, 1 << 0), Variant.FREE)
    print("free game on the cycle after 0 is labeled, legal moves:",
          show(legal_moves(pos)))
    p6 = make_path(6)
    pos = Position(p6, hull(p6, 1 << 0), Variant.CONNECTED)
    print("connected game on the six-path after 0 is labeled, legal moves:",
          show(legal_moves(pos)),
          "(a vertex past distance two would leave the labels disconnected)")
    print()

    # ------------------------------------------------------------------
    # verdicts
    # ------------------------------------------------------------------
    for variant in (Variant.FREE, Variant.CONNECTED):
        v = decide(g, variant)
        print("%s game: %s wins, value %d, best opening %s"
              % (variant.value, v.winner.value, v.grundy, v.witness))
    print()

    # ------------------------------------------------------------------
    # a perfect line of play in the connected game
    # ------------------------------------------------------------------
    table = TranspositionTable(g, 1_000_000)
    pos = start_position(g, Variant.CONNECTED)
    mover = "first"
    print("perfect play, connected game:")
    while legal_moves(pos):
        x = best_move(pos, table)
        pos = apply_move(pos, x)
        print("  %s plays %d, labeled set becomes %s (value now %d)"
              % (mover, x, show(pos.labeled), grundy(pos, table)))
        mover = "second" if mover == "first" else "first"
    print("no moves left; the player to move (%s) loses." % mover)


if __name__ == "__main__":
    main()
