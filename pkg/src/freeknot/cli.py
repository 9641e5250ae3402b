"""Command line front end.

Subcommands: invariant, compare, scramble, reduce, search, selfcheck,
moves.  Gauss codes come from repeatable --gauss flags or from standard
input (one code per line).  Every randomised command prints its seed so
runs can be replayed, and --json switches any command to a stable
machine-readable form (sorted keys, fixed layout).
"""

import argparse
import json
import random
import sys

from .diagram import ChordDiagram, parse_gauss_code, serialize
from .explore import (CERTIFIED_DISTINCT, FREE, LONG, SAME_INVARIANT,
                      UNDETERMINED, distinguish, move_invariance_trial,
                      reduce, rotation_conjugacy_trial, scramble,
                      search_nontrivial)
from .group import (NormalForm, YES, conjugate_equal, corrupted_apply_letter,
                    evaluate, identity, relation_check)
from .moves import enumerate_moves, move_to_json, move_to_text
from .parity import filtration, word_of

COMPARE_EXIT = {SAME_INVARIANT: 0, CERTIFIED_DISTINCT: 1, UNDETERMINED: 2}


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _read_stdin_lines() -> list[str]:
    # stdin may be a tty, detached, or (under a test runner) closed
    try:
        if sys.stdin is None or sys.stdin.isatty():
            return []
        return [ln.strip() for ln in sys.stdin.read().splitlines()
                if ln.strip()]
    except (OSError, ValueError):
        return []


def _collect_codes(args, needed: int | None) -> list[str]:
    codes = list(args.gauss or [])
    if needed is None:
        if not codes:
            codes = _read_stdin_lines()
        if not codes:
            raise ValueError("no gauss codes given (use --gauss or stdin)")
        return codes
    if len(codes) < needed:
        codes.extend(_read_stdin_lines()[:needed - len(codes)])
    if len(codes) != needed:
        raise ValueError(f"expected {needed} gauss codes, got {len(codes)}")
    return codes


def _chord_list(chords) -> list[list[int]]:
    return [list(c) for c in sorted(chords)]


def _describe(d: ChordDiagram, m: int) -> dict:
    filt = filtration(d, m)
    word = word_of(d, m)
    nf = evaluate(word)
    return {
        "m": m,
        "filtration": {
            "levels": [_chord_list(level) for level in filt.levels],
            "splits": [{"odd": _chord_list(odd), "even": _chord_list(even)}
                       for odd, even in filt.prime_split],
        },
        "word": list(word.letters),
        "normal_form": nf.to_json(),
        "is_identity": nf.is_identity,
    }


def cmd_invariant(args) -> int:
    codes = _collect_codes(args, None)
    m_values = args.m or [1]
    diagrams = [parse_gauss_code(code) for code in codes]
    if args.json:
        _emit({
            "command": "invariant",
            "diagrams": [{
                "gauss": serialize(d),
                "diagram": d.to_json(),
                "results": [_describe(d, m) for m in m_values],
            } for d in diagrams],
        })
        return 0
    for index, d in enumerate(diagrams):
        if index:
            print()
        print(f"gauss: {serialize(d) or '(empty)'}")
        for m in m_values:
            info = _describe(d, m)
            sizes = " ".join(
                f"|a{k}|={len(level)}"
                for k, level in enumerate(info["filtration"]["levels"]))
            splits = " ".join(
                f"P{k}={len(s['odd'])} D{k}={len(s['even'])}"
                for k, s in enumerate(info["filtration"]["splits"]))
            nf = info["normal_form"]
            tag = " (identity)" if info["is_identity"] else ""
            print(f"m={m} levels: {sizes}")
            print(f"m={m} splits: {splits}")
            print(f"m={m} word: {' '.join(info['word']) or '(empty)'}")
            print(f"m={m} normal form: x={nf['x']} eps={nf['eps']}{tag}")
    return 0


def cmd_compare(args) -> int:
    codes = _collect_codes(args, 2)
    d1, d2 = (parse_gauss_code(code) for code in codes)
    m_values = args.m or [1]
    verdict = distinguish(d1, d2, m_values, args.max_states, args.mode)
    per_m = []
    for m in m_values:
        a = evaluate(word_of(d1, m))
        b = evaluate(word_of(d2, m))
        entry = {"m": m, "left": a.to_json(), "right": b.to_json(),
                 "witness": None}
        if args.mode == LONG:
            entry["relation"] = "equal" if a == b else "distinct"
        else:
            answer = conjugate_equal(a, b, args.max_states)
            if answer.verdict == YES:
                entry["relation"] = "conjugate"
                entry["witness"] = list(answer.witness)
            elif answer.verdict == "no":
                entry["relation"] = "distinct"
            else:
                entry["relation"] = "undetermined"
        per_m.append(entry)
    code = COMPARE_EXIT[verdict]
    if args.json:
        _emit({"command": "compare", "mode": args.mode, "m": m_values,
               "per_m": per_m, "verdict": verdict, "exit_code": code})
        return code
    print(f"mode: {args.mode}")
    for entry in per_m:
        line = f"m={entry['m']}: {entry['relation']}"
        if entry["witness"] is not None:
            line += f" witness={' '.join(entry['witness']) or '(empty)'}"
        print(line)
    print(f"verdict: {verdict}")
    return code


def cmd_scramble(args) -> int:
    codes = _collect_codes(args, 1)
    d = parse_gauss_code(codes[0])
    seed = args.seed if args.seed is not None else \
        random.randrange(2 ** 32)
    size_cap = args.max_chords if args.max_chords is not None else \
        max(2 * d.n, 4)
    result = scramble(d, args.moves, seed, size_cap)
    if args.json:
        _emit({"command": "scramble", "seed": seed, "moves": args.moves,
               "size_cap": size_cap, "gauss": serialize(result),
               "diagram": result.to_json()})
        return 0
    print(f"seed: {seed}")
    print(f"applied: {args.moves} moves (size cap {size_cap})")
    print(f"result: {serialize(result) or '(empty)'}")
    return 0


def cmd_reduce(args) -> int:
    codes = _collect_codes(args, 1)
    d = parse_gauss_code(codes[0])
    max_chords = args.max_chords if args.max_chords is not None else d.n + 1
    report = reduce(d, args.max_states, max_chords)
    if args.json:
        payload = report.to_json()
        payload["command"] = "reduce"
        _emit(payload)
        return 0
    print(f"outcome: {report.outcome}")
    print(f"visited: {report.visited}")
    if report.path is not None:
        print(f"path ({len(report.path)} moves):")
        for move in report.path:
            print(f"  {move_to_text(move)}")
    if report.diagram is not None:
        print(f"result: {serialize(report.diagram) or '(empty)'}")
    return 0


def cmd_search(args) -> int:
    m_values = args.m or [1]
    per_m = []
    for m in m_values:
        witnesses = search_nontrivial(args.max_chords, m, args.max_states)
        per_m.append({"m": m, "witnesses": [serialize(w) for w in witnesses]})
    if args.json:
        _emit({"command": "search", "max_chords": args.max_chords,
               "max_states": args.max_states, "per_m": per_m})
        return 0
    for entry in per_m:
        count = len(entry["witnesses"])
        plural = "" if count == 1 else "es"
        print(f"m={entry['m']}: {count} witness{plural}")
        for code in entry["witnesses"]:
            print(f"  {code}")
    return 0


def _random_point(rng: random.Random, m: int) -> NormalForm:
    return NormalForm(tuple(rng.randint(-10, 10) for _ in range(m)),
                      rng.randint(0, 1))


def cmd_selfcheck(args) -> int:
    m_values = args.m or [1, 2, 3]
    seed = args.seed if args.seed is not None else \
        random.randrange(2 ** 32)
    rng = random.Random(seed)
    relation_failures = []
    for m in m_values:
        points = [identity(m)] + \
            [_random_point(rng, m) for _ in range(args.samples - 1)]
        if not relation_check(m, points):
            relation_failures.append(f"relations fail at m={m}")
        if relation_check(m, points, corrupted_apply_letter):
            relation_failures.append(
                f"corrupted action not rejected at m={m}")
    passed = 0
    for i in range(args.trials):
        if i % 10 == 9:
            ok = rotation_conjugacy_trial(rng, m_values)
        else:
            ok = move_invariance_trial(rng, m_values)
        passed += ok
    relations_ok = not relation_failures
    trials_ok = passed == args.trials
    if args.json:
        _emit({"command": "selfcheck", "seed": seed, "m": m_values,
               "samples": args.samples, "trials": args.trials,
               "relations_ok": relations_ok,
               "relation_failures": relation_failures,
               "trials_passed": passed})
        return 0 if relations_ok and trials_ok else 1
    print(f"seed: {seed}")
    relations_word = "OK" if relations_ok else "FAIL"
    trials_word = "OK" if trials_ok else "FAIL"
    print(f"relations {relations_word}; "
          f"invariance trials {passed}/{args.trials} {trials_word}")
    for failure in relation_failures:
        print(f"  {failure}")
    return 0 if relations_ok and trials_ok else 1


def cmd_moves(args) -> int:
    codes = _collect_codes(args, 1)
    d = parse_gauss_code(codes[0])
    max_chords = args.max_chords if args.max_chords is not None else d.n + 2
    moves = enumerate_moves(d, max_chords)
    if args.json:
        _emit({"command": "moves", "gauss": serialize(d),
               "max_chords": max_chords,
               "moves": [move_to_json(mv) for mv in moves]})
        return 0
    for move in moves:
        print(move_to_text(move))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freeknot",
        description="Parity-filtration word invariants of free knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true",
                       help="emit deterministic JSON")
        return p

    p = add("invariant", cmd_invariant,
            "filtration, word and normal form of diagrams")
    p.add_argument("--gauss", action="append", help="gauss code (repeatable)")
    p.add_argument("--m", action="append", type=int,
                   help="filtration depth (repeatable, default 1)")

    p = add("compare", cmd_compare,
            "compare two diagrams (exit 0 same, 1 distinct, 2 undetermined)")
    p.add_argument("--gauss", action="append",
                   help="gauss code (give twice, or pipe two lines)")
    p.add_argument("--m", action="append", type=int,
                   help="filtration depth (repeatable, default 1)")
    p.add_argument("--mode", choices=[LONG, FREE], default=LONG,
                   help="long compares values, free compares up to rotation")
    p.add_argument("--max-states", type=int, default=4096,
                   help="conjugacy closure cap in free mode")

    p = add("scramble", cmd_scramble, "apply random moves to a diagram")
    p.add_argument("--gauss", action="append", help="gauss code")
    p.add_argument("--moves", type=int, default=100,
                   help="number of random moves")
    p.add_argument("--seed", type=int, default=None,
                   help="seed (default: fresh, printed)")
    p.add_argument("--max-chords", type=int, default=None,
                   help="size cap for insertions (default max(2n, 4))")

    p = add("reduce", cmd_reduce, "breadth-first reduction of a diagram")
    p.add_argument("--gauss", action="append", help="gauss code")
    p.add_argument("--max-states", type=int, default=10000,
                   help="visited-state cap")
    p.add_argument("--max-chords", type=int, default=None,
                   help="chord budget while searching (default n+1)")

    p = add("search", cmd_search,
            "exhaustive hunt for nontrivial free knots")
    p.add_argument("--m", action="append", type=int,
                   help="filtration depth (repeatable, default 1)")
    p.add_argument("--max-chords", type=int, default=4,
                   help="largest chord count to enumerate")
    p.add_argument("--max-states", type=int, default=10 ** 6,
                   help="rotation-class cap")

    p = add("selfcheck", cmd_selfcheck,
            "relation checks plus randomized invariance trials")
    p.add_argument("--m", action="append", type=int,
                   help="depths to check (repeatable, default 1 2 3)")
    p.add_argument("--samples", type=int, default=1000,
                   help="sample points per relation check")
    p.add_argument("--trials", type=int, default=10000,
                   help="randomized invariance trials")
    p.add_argument("--seed", type=int, default=None,
                   help="seed (default: fresh, printed)")

    p = add("moves", cmd_moves, "list applicable moves")
    p.add_argument("--gauss", action="append", help="gauss code")
    p.add_argument("--list", action="store_true",
                   help="list applicable moves (the default and only mode)")
    p.add_argument("--max-chords", type=int, default=None,
                   help="chord budget for insertions (default n+2)")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3 if args.command == "compare" else 2


if __name__ == "__main__":
    sys.exit(main())
