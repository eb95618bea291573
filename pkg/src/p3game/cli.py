"""Command-line front end: solve instances, verify solvers against the
engine, generate family graphs, and play against the engine.

Conventions: machine-readable JSON goes to standard output (sorted keys,
so identical invocations are byte-identical); human-readable tables and
diagnostics go to standard error.  Exit codes: 0 success/pass,
1 verification mismatch, 2 usage or parse error, 3 resource limit.
The node budget comes from --budget, else the P3_BUDGET environment
variable, else the engine default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .closure import (IllegalMoveError, Position, Variant, apply_move,
                      legal_moves, start_position)
from .engine import (DEFAULT_BUDGET, Player, ResourceLimitError,
                     TranspositionTable, Verdict, best_move, decide)
from .graphs import (CaterpillarSpec, GraphFormatError, bits, emit_graph,
                     graph_digest, make_caterpillar, make_clique, make_cograph,
                     make_cycle, make_ladder, make_path, make_star,
                     parse_cotree, parse_graph, random_biconnected_chordal,
                     random_tree)
from .verify import FAMILIES, run_family

import random


class CacheCorruptionError(RuntimeError):
    """A cache entry disagrees with a newly computed or stored verdict."""


class ResultCache:
    """Append-only store of verdicts, one JSON object per line, keyed by
    (graph content hash, variant).  An existing entry is never replaced;
    attempting to record a different verdict for the same key raises."""

    FILENAME = "results.jsonl"

    def __init__(self, directory: str):
        os.makedirs(directory, exist_ok=True)
        self.path = os.path.join(directory, self.FILENAME)
        self._entries: dict[tuple[str, str], dict] = {}
        if os.path.exists(self.path):
            with open(self.path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    obj = json.loads(line)
                    key = (obj["graph"], obj["variant"])
                    prior = self._entries.get(key)
                    if prior is not None and prior != obj["verdict"]:
                        raise CacheCorruptionError(
                            "conflicting cache lines for %r" % (key,))
                    self._entries[key] = obj["verdict"]

    def get(self, digest: str, variant: Variant):
        return self._entries.get((digest, variant.value))

    def put(self, digest: str, variant: Variant, verdict: dict) -> None:
        key = (digest, variant.value)
        prior = self._entries.get(key)
        if prior is not None:
            if prior != verdict:
                raise CacheCorruptionError(
                    "refusing to overwrite cached verdict for %r" % (key,))
            return
        self._entries[key] = verdict
        record = {"graph": digest, "variant": variant.value,
                  "verdict": verdict}
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    def __len__(self):
        return len(self._entries)


def _resolve_budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("P3_BUDGET")
    if env is not None:
        try:
            value = int(env)
            if value < 1:
                raise ValueError
        except ValueError:
            raise GraphFormatError(
                "P3_BUDGET must be a positive integer, got %r" % env)
        return value
    return DEFAULT_BUDGET


def _read_graph_file(path: str):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise GraphFormatError("cannot read graph file %s: %s" % (path, exc))
    return parse_graph(data)


# ---------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------

def cmd_solve(args, stdout, stderr) -> int:
    g = _read_graph_file(args.graph)
    variant = Variant(args.variant)
    budget = _resolve_budget(args)
    cache = ResultCache(args.cache) if args.cache else None
    digest = graph_digest(g)

    # explicit None test: an empty cache is falsy through __len__
    verdict_dict = cache.get(digest, variant) if cache is not None else None
    if verdict_dict is None:
        verdict = decide(g, variant, budget=budget)
        verdict_dict = verdict.to_json_dict()
        if cache is not None:
            cache.put(digest, variant, verdict_dict)

    if args.mode == "winner":
        payload = {"winner": verdict_dict["winner"],
                   "witness": verdict_dict["witness"]}
    else:
        payload = {"winner": verdict_dict["winner"],
                   "grundy": verdict_dict["grundy"],
                   "witness": verdict_dict["witness"]}
    print(json.dumps(payload, sort_keys=True), file=stdout)
    return 0


# ---------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------

def cmd_verify(args, stdout, stderr) -> int:
    budget = _resolve_budget(args)
    try:
        report = run_family(args.family, args.max_n, seed=args.seed,
                            budget=budget)
    except ValueError as exc:
        print("error: %s" % exc, file=stderr)
        return 2
    print(report.human_table(), file=stderr)
    if args.json:
        print(json.dumps(report.to_json_dict(), sort_keys=True), file=stdout)
    return 0 if report.passed else 1


# ---------------------------------------------------------------------
# play
# ---------------------------------------------------------------------

def _print_board(pos: Position, stdout) -> None:
    labeled = sorted(bits(pos.labeled))
    print("labeled: %s" % (labeled if labeled else "{}"), file=stdout)


def cmd_play(args, stdout, stderr, stdin) -> int:
    g = _read_graph_file(args.graph)
    variant = Variant(args.variant)
    budget = _resolve_budget(args)
    table = TranspositionTable(g, budget)
    pos = start_position(g, variant)
    human_to_move = args.human == "first"
    mover_name = {True: "you", False: "engine"}

    print("%s game on %d vertices; enter a vertex id, or q to quit."
          % (variant.value, g.n), file=stdout)
    _print_board(pos, stdout)
    while True:
        moves = legal_moves(pos)
        if moves == 0:
            # normal play: whoever cannot move loses
            loser, winner = mover_name[human_to_move], mover_name[not human_to_move]
            print("no legal moves for %s; %s win%s." %
                  (loser, winner, "" if winner == "you" else "s"), file=stdout)
            return 0
        if human_to_move:
            print("your move %s: " % sorted(bits(moves)), file=stdout)
            line = stdin.readline()
            if not line or line.strip().lower() in ("q", "quit"):
                print("session ended.", file=stdout)
                return 0
            try:
                choice = int(line.strip())
                pos = apply_move(pos, choice)
            except (ValueError, IllegalMoveError):
                print("illegal move %r; legal moves: %s"
                      % (line.strip(), sorted(bits(moves))), file=stdout)
                continue
        else:
            choice = best_move(pos, table)
            print("engine plays %d" % choice, file=stdout)
            pos = apply_move(pos, choice)
        _print_board(pos, stdout)
        human_to_move = not human_to_move


# ---------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------

def _gen_graph(args):
    family = args.family

    def need_n(minimum):
        if args.n is None or args.n < minimum:
            raise GraphFormatError(
                "--family %s needs --n >= %d" % (family, minimum))
        return args.n

    if family == "path":
        return make_path(need_n(1))
    if family == "cycle":
        return make_cycle(need_n(3))
    if family == "star":
        if args.n is None or args.n < 0:
            raise GraphFormatError("--family star needs --n >= 0 (leaf count)")
        return make_star(args.n)
    if family == "clique":
        return make_clique(need_n(1))
    if family == "ladder":
        return make_ladder(need_n(1))
    if family == "caterpillar":
        if not args.feet:
            raise GraphFormatError("--family caterpillar needs --feet h1,h2,...")
        try:
            feet = tuple(int(x) for x in args.feet.split(","))
        except ValueError:
            raise GraphFormatError("--feet must be a comma-separated list of integers")
        if args.n is not None and args.n != len(feet):
            raise GraphFormatError("--n disagrees with the number of --feet entries")
        try:
            spec = CaterpillarSpec(len(feet), feet)
        except ValueError as exc:
            raise GraphFormatError(str(exc))
        return make_caterpillar(spec)
    if family == "cograph":
        if not args.cotree:
            raise GraphFormatError("--family cograph needs --cotree FILE")
        try:
            with open(args.cotree, "rb") as fh:
                cotree = parse_cotree(fh.read())
        except OSError as exc:
            raise GraphFormatError("cannot read cotree file: %s" % exc)
        return make_cograph(cotree)
    if family == "tree":
        return random_tree(need_n(1), random.Random(args.seed))
    if family == "chordal":
        return random_biconnected_chordal(need_n(3), random.Random(args.seed))
    raise GraphFormatError("unknown family %r" % family)


def cmd_gen(args, stdout, stderr) -> int:
    data = emit_graph(_gen_graph(args))
    if args.output == "-":
        stdout.write(data.decode())
    else:
        with open(args.output, "wb") as fh:
            fh.write(data)
    return 0


# ---------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p3game",
        description="Solvers and an exhaustive engine for the P3-convexity "
                    "labelling game on graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one graph instance")
    p_solve.add_argument("--graph", required=True, help="graph JSON file")
    p_solve.add_argument("--variant", required=True,
                         choices=[v.value for v in Variant])
    p_solve.add_argument("--mode", default="grundy",
                         choices=["winner", "grundy"],
                         help="emit winner+witness only, or the full value")
    p_solve.add_argument("--budget", type=int, default=None,
                         help="node budget (table entries)")
    p_solve.add_argument("--cache", default=None,
                         help="directory for the append-only verdict cache")

    p_verify = sub.add_parser("verify",
                              help="sweep a family solver against the engine")
    p_verify.add_argument("--family", required=True,
                          choices=sorted(FAMILIES))
    p_verify.add_argument("--max-n", required=True, type=int, dest="max_n")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--json", action="store_true",
                          help="also emit the report as JSON on stdout")
    p_verify.add_argument("--budget", type=int, default=None)

    p_play = sub.add_parser("play", help="interactive game against the engine")
    p_play.add_argument("--graph", required=True)
    p_play.add_argument("--variant", required=True,
                        choices=[v.value for v in Variant])
    p_play.add_argument("--human", required=True, choices=["first", "second"])
    p_play.add_argument("--budget", type=int, default=None)

    p_gen = sub.add_parser("gen", help="generate a family graph file")
    p_gen.add_argument("--family", required=True,
                       choices=["path", "cycle", "star", "clique", "ladder",
                                "caterpillar", "cograph", "tree", "chordal"])
    p_gen.add_argument("--n", type=int, default=None)
    p_gen.add_argument("--feet", default=None,
                       help="comma-separated foot counts (caterpillar)")
    p_gen.add_argument("--cotree", default=None, help="cotree JSON file (cograph)")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output", required=True,
                       help="output path, or - for stdout")
    return parser


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "solve":
            return cmd_solve(args, stdout, stderr)
        if args.command == "verify":
            return cmd_verify(args, stdout, stderr)
        if args.command == "play":
            return cmd_play(args, stdout, stderr, stdin)
        if args.command == "gen":
            return cmd_gen(args, stdout, stderr)
        parser.error("unknown command %r" % args.command)
    except GraphFormatError as exc:
        print("error: %s" % exc, file=stderr)
        return 2
    except CacheCorruptionError as exc:
        print("error: %s" % exc, file=stderr)
        return 2
    except ResourceLimitError as exc:
        print("resource limit: %s" % exc, file=stderr)
        return 3
    return 2


if __name__ == "__main__":
    sys.exit(main())
