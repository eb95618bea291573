"""A tour of the solved graph families: each closed form next to the
exhaustive engine on sizes small enough to check live.

Run:  python3 demos/family_tour.py
"""

import random

from p3game import (CaterpillarSpec, Variant, caterpillar_connected_winner,
                    cograph_free_winner, connected_cycle_grundy,
                    connected_path_grundy, decide, free_cycle_winner,
                    free_path_grundy, ladder_connected_winner,
                    make_caterpillar, make_cograph, make_cycle, make_ladder,
                    make_path, random_cotree, star_free_winner,
                    tree_connected_grundy)


def banner(title):
    print()
    print(title)
    print("-" * len(title))


def main():
    banner("paths")
    print("n:         ", " ".join("%2d" % n for n in range(1, 13)))
    print("connected: ", " ".join("%2d" % connected_path_grundy(n)
                                  for n in range(1, 13)))
    print("free:      ", " ".join("%2d" % free_path_grundy(n)
                                  for n in range(1, 13)))
    print("connected: first wins every path except n = 2, with value 2")
    print("exactly when n = 2 (mod 3); the free values come from a")
    print("fenced-run table with no known closed form.")

    banner("cycles")
    print("n:         ", " ".join("%2d" % n for n in range(3, 13)))
    print("connected: ", " ".join("%2d" % connected_cycle_grundy(n)
                                  for n in range(3, 13)))
    print("free:      ", " ".join("%2d" % free_cycle_winner(n).grundy
                                  for n in range(3, 13)))
    print("connected: first player wins exactly when n = 2 (mod 3);")
    print("free: even cycles fall to mirroring, and odd ones follow the")
    print("fenced-run table, with sporadic first wins (n = 5, 13, 21, ...).")

    banner("stars and ladders")
    wins = [star_free_winner(t).winner.value for t in range(0, 7)]
    print("star with t feet, free game, t = 0..6:", " ".join(wins))
    wins = [ladder_connected_winner(n).winner.value for n in range(1, 8)]
    print("ladder with n rungs, connected game, n = 1..7:", " ".join(wins))
    print("the ladder first player wins exactly when 2n, the vertex")
    print("count, is a multiple of six.")

    banner("one tree, one caterpillar, one cograph, against the engine")
    rng = random.Random(7)

    spec = CaterpillarSpec(5, (0, 2, 1, 0, 0))
    cat = make_caterpillar(spec)
    print("caterpillar %s: solver %s, engine %s"
          % (spec, caterpillar_connected_winner(spec).winner.value,
             decide(cat, Variant.CONNECTED).winner.value))
    print("  same grundy value? ",
          caterpillar_connected_winner(spec) == decide(cat, Variant.CONNECTED))

    print("that caterpillar through the general tree solver:",
          tree_connected_grundy(cat))

    cotree = random_cotree(8, rng)
    cg = make_cograph(cotree)
    print("random cograph on %d vertices: solver %s, engine %s"
          % (cg.n, cograph_free_winner(cotree).winner.value,
             decide(cg, Variant.FREE).winner.value))

    banner("a full engine verdict")
    for n in (4, 5, 6):
        v = decide(make_ladder(n), Variant.CONNECTED)
        tail = "" if v.witness is None else ", best opening %d" % v.witness
        print("ladder n=%d connected: %s wins, value %d%s"
              % (n, v.winner.value, v.grundy, tail))


if __name__ == "__main__":
    main()
