"""
Command-line front end.

Exit codes: 0 success, 1 property failure, 2 input error, 3 method
disagreement, 4 resource cap.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable, Sequence

from .braid_words import BraidWord, markov_variants, parse_braid, random_braid
from .corpus import load_corpus
from .covering_homology import build_cov_complex, specialize_pi
from .egraded_homology import (
    check_faces,
    forget_tau,
    graded_euler,
    homology,
    homology_mod2,
    tqft_complex,
)
from .errors import EbraidError, MalformedBraid, MethodDisagreement, TooManyCrossings, TooManyStrands
from .rep_oracle import jhat_oracle
from .resolution_cube import DEFAULT_MAX_CROSSINGS, build_cube, cube_to_json, degree_audit, sign_assignment
from .scalar_ring import TauLaurent
from .skein_eval import jhat

EXIT_OK, EXIT_PROPERTY, EXIT_INPUT, EXIT_DISAGREE, EXIT_CAP = 0, 1, 2, 3, 4

METHODS: dict[str, Callable[[BraidWord], TauLaurent]] = {
    "statesum": lambda b: jhat(b, "statesum"),
    "tl": lambda b: jhat(b, "tl"),
    "oracle": jhat_oracle,
}


def _braid(args) -> BraidWord:
    return parse_braid(args.word, args.strands)


def _print_poly(p: TauLaurent, fmt: str) -> None:
    print(p.to_json() if fmt == "json" else str(p))


def jhat_all(b: BraidWord) -> TauLaurent:
    values = {name: f(b) for name, f in METHODS.items()}
    if len(set(values.values())) != 1:
        raise MethodDisagreement({k: str(v) for k, v in values.items()})
    return values["statesum"]


def cmd_jhat(args) -> int:
    b = _braid(args)
    if args.method == "all":
        try:
            value = jhat_all(b)
        except MethodDisagreement as exc:
            for name, v in exc.values.items():
                print(f"{name}: {v}")
            return EXIT_DISAGREE
    else:
        value = METHODS[args.method](b)
    _print_poly(value, args.format)
    return EXIT_OK


def _homology_table(table, forget: bool):
    return forget_tau(table) if forget else table


def cmd_homology(args) -> int:
    b = _braid(args)
    cube = sign_assignment(build_cube(b, args.max_crossings))
    if args.dump_cube:
        with open(args.dump_cube, "w", encoding="utf-8") as f:
            f.write(cube_to_json(cube) + "\n")
    table = _homology_table(homology(tqft_complex(cube)), args.forget_tau)
    print(table.to_json() if args.format == "json" else table.to_text())
    return EXIT_OK


def _mod2_rows(dims: dict, forget: bool) -> list[dict]:
    names = ("i", "q") if forget else ("i", "q", "tau")
    return [{**dict(zip(names, key)), "dim": d} for key, d in sorted(dims.items())]


def cmd_covering(args) -> int:
    b = _braid(args)
    cov = build_cov_complex(b, args.max_crossings)
    if args.dump_complex:
        with open(args.dump_complex, "w", encoding="utf-8") as f:
            f.write(cov.to_json() + "\n")
    c = specialize_pi(cov, args.pi)
    if args.mod2:
        rows = _mod2_rows(homology_mod2(c, forget=args.forget_tau), args.forget_tau)
        if args.format == "json":
            print(json.dumps({"pi": args.pi, "mod2": rows}, separators=(",", ":")))
        else:
            header = ["i", "q"] if args.forget_tau else ["i", "q", "tau"]
            print("\t".join(header + ["dim"]))
            for row in rows:
                print("\t".join(str(row[k]) for k in header + ["dim"]))
        return EXIT_OK
    table = _homology_table(homology(c), args.forget_tau)
    if args.format == "json":
        print(json.dumps({"pi": args.pi, "homology": table.rows()}, separators=(",", ":")))
    else:
        print(table.to_text())
    return EXIT_OK


def cmd_corpus(args) -> int:
    failures = 0
    for entry in load_corpus(args.corpus):
        value = jhat(entry.braid)
        if entry.expected_jhat is None:
            status = "no expected value"
        elif value == entry.expected_jhat:
            status = "ok"
        else:
            status = f"MISMATCH: got {value}, expected {entry.expected_jhat}"
            failures += 1
        print(f"{entry.name}\t{status}")
    return EXIT_PROPERTY if failures else EXIT_OK


# property suites for ``verify``; each returns None on success or a message


def _check_markov(b: BraidWord, rng: random.Random) -> str | None:
    base = jhat(b)
    for v in markov_variants(b, rng.randrange(2**32), 5):
        if jhat(v) != base:
            return f"variant [{v.strands}] {v} gives {jhat(v)}, expected {base}"
    return None


def _check_euler(b: BraidWord, rng: random.Random) -> str | None:
    cube = sign_assignment(build_cube(b))
    if not degree_audit(cube):
        return "degree audit failed"
    c = tqft_complex(cube)
    if not (c.degrees_preserved() and c.degrees_balanced()):
        return "complex is not degree preserving"
    if graded_euler(c) != jhat(b):
        return f"chi = {graded_euler(c)}, jhat = {jhat(b)}"
    return None


def _check_oracle(b: BraidWord, rng: random.Random) -> str | None:
    try:
        jhat_all(b)
    except MethodDisagreement as exc:
        return str(exc)
    return None


def _check_signs(b: BraidWord, rng: random.Random) -> str | None:
    cube = sign_assignment(build_cube(b))
    if not check_faces(cube):
        return "even faces do not anticommute"
    even = tqft_complex(cube)
    cov = build_cov_complex(b)
    if specialize_pi(cov, 1).differential != even.differential:
        return "pi = 1 specialization differs from the even complex"
    odd = specialize_pi(cov, -1)
    if not odd.square_zero():
        return "pi = -1 specialization has d∘d ≠ 0"
    if homology_mod2(odd, forget=True) != homology_mod2(even, forget=True):
        return "mod-2 homology differs between pi = 1 and pi = -1"
    return None


SUITES = {"markov": _check_markov, "euler": _check_euler, "oracle": _check_oracle, "signs": _check_signs}


def cmd_verify(args) -> int:
    if args.max_strands < 2:
        raise MalformedBraid("--max-strands must be at least 2")
    rng = random.Random(args.seed)
    braids = []
    if args.corpus is not None:
        braids += [e.braid for e in load_corpus(args.corpus or None)]
    for _ in range(args.trials):
        n = rng.randint(2, args.max_strands)
        braids.append(random_braid(n, rng.randint(0, args.max_crossings), rng.randrange(2**32)))
    check = SUITES[args.suite]
    passed = failed = 0
    for b in braids:
        problem = check(b, rng)
        if problem is None:
            passed += 1
        else:
            failed += 1
            print(f"FAIL [{b.strands}] \"{b}\": {problem}")
    print(f"{args.suite}: {passed} passed, {failed} failed")
    return EXIT_PROPERTY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ebraid", description="osp(1|2) invariants and e-graded Khovanov homology of braid closures")
    sub = parser.add_subparsers(dest="command", required=True)

    def braid_args(p):
        p.add_argument("--strands", type=int, required=True)
        p.add_argument("word", help='braid word, e.g. "1 -2 1"')
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("jhat", help="the invariant of a braid closure")
    braid_args(p)
    p.add_argument("--method", choices=("statesum", "tl", "oracle", "all"), default="statesum")
    p.set_defaults(func=cmd_jhat)

    p = sub.add_parser("homology", help="e-graded Khovanov homology")
    braid_args(p)
    p.add_argument("--forget-tau", action="store_true")
    p.add_argument("--dump-cube", metavar="PATH")
    p.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("covering", help="homology of the covering complex at pi = 1 or -1")
    braid_args(p)
    p.add_argument("--pi", type=int, choices=(1, -1), required=True)
    p.add_argument("--mod2", action="store_true")
    p.add_argument("--forget-tau", action="store_true")
    p.add_argument("--dump-complex", metavar="PATH")
    p.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    p.set_defaults(func=cmd_covering)

    p = sub.add_parser("verify", help="randomized property checks")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--max-strands", type=int, default=4)
    p.add_argument("--max-crossings", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corpus", nargs="?", const="", default=None, metavar="PATH",
                   help="also check every corpus braid (default corpus when PATH is omitted)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="check the corpus against its expected values")
    p.add_argument("--corpus", metavar="PATH")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MalformedBraid, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TooManyCrossings, TooManyStrands) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except EbraidError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_PROPERTY


if __name__ == "__main__":
    sys.exit(main())
