"""Command-line interface: ``twocolour <subcommand> ...``.

Exit codes: 0 success, 1 golden mismatch or fuzz failure, 2 parse error,
3 a colouring-dependent value was requested for a degenerate diagram.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Optional

from .colouring import (
    NotTwoColourable,
    TwoColouring,
    colourings,
    generating_set,
    is_two_colourable,
)
from .diagram import GaussDiagram, ParseError, parse, serialize
from .invariants import report, writhe
from .moves import naive_rule, verify_parity_axioms
from .parity import project
from .sampling import random_nondegenerate

EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_NOT_COLOURABLE = 3

COLOURING_FIELDS = {"j2", "j2_self"}
CORPUS_DIR = Path(__file__).with_name("corpus")


def read_input(arg: str) -> str:
    """A file path, ``-`` for stdin, or an inline Gauss code."""
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        return Path(arg).read_text()
    return arg


def dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "))


def _load(arg: str) -> GaussDiagram:
    return parse(read_input(arg))


# ------------------------------------------------------------------ commands


def cmd_invariants(args) -> int:
    d = _load(args.input)
    wanted = set(args.field or [])
    if wanted & COLOURING_FIELDS and not is_two_colourable(d):
        print(f"error: {sorted(wanted & COLOURING_FIELDS)} need a 2-colourable diagram",
              file=sys.stderr)
        return EXIT_NOT_COLOURABLE
    method = "enum" if args.oracle else "check" if args.check else "fast"
    data = report(d, method).to_json()
    if wanted:
        data = {k: data[k] for k in data if k in wanted}
    if args.json:
        print(dump(data))
    else:
        for key, value in data.items():
            if key == "flags":
                for flag, v in value.items():
                    print(f"flags.{flag}: {v}")
            else:
                print(f"{key}: {value}")
    return 0


def cmd_colourings(args) -> int:
    d = _load(args.input)
    cols = colourings(d)
    print(f"count: {len(cols)}")
    if not cols:
        return 0
    for c in generating_set(d.n_components):
        print(f"{c} {writhe(d, c)}")
    return 0


def cmd_project(args) -> int:
    d = _load(args.input)
    c = TwoColouring.from_string(args.colouring)
    if len(c) != d.n_components:
        print(f"error: colouring has {len(c)} bits, diagram has {d.n_components} components",
              file=sys.stderr)
        return EXIT_MISMATCH
    print(serialize(project(d, c)))
    return 0


def cmd_compare(args) -> int:
    d = _load(args.input)
    prof = report(d)
    print(f"{'j2':<14}{'j2_self':<9}{'naive':<7}{'ip_self':<9}ip_candidates")
    j2 = " ".join(map(str, prof.j2)) if prof.j2 is not None else "-"
    ipc = " ".join(map(str, prof.ip_candidates)) if prof.ip_candidates else "-"
    print(f"{j2:<14}{str(prof.j2_self):<9}{prof.naive:<7}{str(prof.ip_self):<9}{ipc}")
    return 0


# ------------------------------------------------------------------ census


@dataclass
class CorpusEntry:
    name: str
    gauss_code: str
    expected: Optional[dict] = None


def load_corpus(directory: Path) -> list[tuple[Path, Any]]:
    out: list[tuple[Path, Any]] = []
    for path in sorted(Path(directory).glob("*.json")):
        try:
            raw = json.loads(path.read_text())
            out.append((path, CorpusEntry(raw["name"], raw["gauss_code"], raw.get("expected"))))
        except (ValueError, KeyError) as exc:
            out.append((path, exc))
    return out


def _census_row(entry: CorpusEntry) -> tuple[Optional[dict], Optional[str]]:
    try:
        d = parse(entry.gauss_code)
    except ParseError as exc:
        return None, f"parse error: {exc}"
    return report(d, "enum").to_json(), None


def diff_expected(expected: dict, actual: dict, prefix: str = "") -> list[str]:
    problems = []
    for key, want in expected.items():
        got = actual.get(key)
        if isinstance(want, dict) and isinstance(got, dict):
            problems += diff_expected(want, got, f"{prefix}{key}.")
        elif got != want:
            problems.append(f"{prefix}{key}: expected {want!r}, got {got!r}")
    return problems


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, list):
        return ",".join(map(str, v))
    return str(v)


def cmd_census(args) -> int:
    directory = Path(args.directory) if args.directory else CORPUS_DIR
    entries = load_corpus(directory)
    good = [(p, e) for p, e in entries if isinstance(e, CorpusEntry)]
    with ProcessPoolExecutor(max_workers=args.workers) as pool:
        rows = list(pool.map(_census_row, [e for _, e in good]))
    results = dict(zip((p for p, _ in good), rows))

    status = 0
    print("\t".join(["name", "n", "chords", "j2", "j2_self", "naive", "ip_self", "flags"]))
    for path, entry in entries:
        if not isinstance(entry, CorpusEntry):
            print(f"{path.name}: unreadable corpus file: {entry}", file=sys.stderr)
            status = EXIT_MISMATCH
            continue
        data, error = results[path]
        if error:
            print(f"{entry.name}: {error}", file=sys.stderr)
            status = EXIT_MISMATCH
            continue
        flags = ",".join(k for k, v in sorted(data["flags"].items()) if v) or "-"
        print("\t".join([entry.name, str(data["components"]), str(data["chords"]),
                         _fmt(data["j2"]), _fmt(data["j2_self"]), _fmt(data["naive"]),
                         _fmt(data["ip_self"]), flags]))
        if args.regold:
            path.write_text(dump({"name": entry.name, "gauss_code": entry.gauss_code,
                                  "expected": data}) + "\n")
            continue
        if entry.expected is not None:
            for problem in diff_expected(entry.expected, data):
                print(f"MISMATCH {entry.name}: {problem}", file=sys.stderr)
                status = EXIT_MISMATCH
    return status


# ------------------------------------------------------------------ fuzzing


FUZZ_STARTS = [
    "O1+ O2+ U1+ U2+",
    "O1+ U2+ / O2+ U1+",
    "_ / _",
    "O1+ O2+ O3- O4- / U1+ U2+ U4- U3-",
    "_",
]


def fuzz_starts(seed: int, count: int) -> list[GaussDiagram]:
    """Fixed seed diagrams followed by random 1- to 4-component ones."""
    rng = random.Random(seed)
    starts = [parse(s) for s in FUZZ_STARTS]
    while len(starts) < count:
        n = rng.choice((1, 2, 3, 4))
        d = random_nondegenerate(rng, n, rng.randint(n, 6))
        if d is not None:
            starts.append(d)
    return starts[:count]


INVARIANT_KEYS = ("j2", "j2_self", "naive", "lk", "ip_self")


def run_trial(code: str, steps: int, seed: int, max_chords: int) -> dict:
    """One fuzz trajectory: parity axioms for both parities and invariant constancy."""
    d = parse(code)
    ref = report(d).to_json()
    drift: list[dict] = []

    def watch(site, new):
        if drift:
            return
        got = report(new).to_json()
        for key in INVARIANT_KEYS:
            if got[key] != ref[key]:
                drift.append({"invariant": key, "before": str(site.diagram), "move": str(site),
                              "after": str(new), "expected": ref[key], "got": got[key]})
                return

    two = verify_parity_axioms(d, steps, seed, max_chords, on_step=watch)
    naive = verify_parity_axioms(d, steps, seed, max_chords, rule=naive_rule, strong=False)
    return {
        "start": code,
        "seed": seed,
        "steps": two.steps,
        "moves": two.move_counts,
        "two_colour": [asdict(v) for v in two.violations[:1]],
        "naive": [asdict(v) for v in naive.violations[:1]],
        "drift": drift,
        "projections": two.projections,
        "projections_colourable": two.projections_colourable,
    }


def trial_failed(result: dict) -> bool:
    return bool(result["two_colour"] or result["naive"] or result["drift"])


def run_fuzz(steps: int, trials: int, seed: int, max_chords: int,
             workers: Optional[int] = None) -> list[dict]:
    starts = fuzz_starts(seed, trials)
    jobs = [(serialize(starts[t]), steps, seed + t, max_chords) for t in range(trials)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_trial, *zip(*jobs)))


def cmd_fuzz(args) -> int:
    results = run_fuzz(args.steps, args.trials, args.seed, args.max_chords, args.workers)
    failed = [r for r in results if trial_failed(r)]
    moves: dict[str, int] = {}
    for r in results:
        for k, v in r["moves"].items():
            moves[k] = moves.get(k, 0) + v
    proj = sum(r["projections"] for r in results)
    proj_ok = sum(r["projections_colourable"] for r in results)
    print(f"trials: {len(results)}  steps/trial: {args.steps}  failed: {len(failed)}")
    print("moves: " + " ".join(f"{k}={moves[k]}" for k in sorted(moves)))
    print(f"projections 2-colourable: {proj_ok}/{proj}")
    if failed:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for r in failed:
            path = out / f"witness-seed{r['seed']}.json"
            path.write_text(dump(r) + "\n")
            print(f"FAIL seed {r['seed']} start {r['start']!r} -> {path}")
        return EXIT_MISMATCH
    print("PASS")
    return 0


def cmd_search(args) -> int:
    from .search import find_lk_zero_witness

    res = find_lk_zero_witness(args.max_chords, mixed_only=not args.any_chords)
    if res.diagram is None:
        print(f"no witness among {res.examined} diagrams")
        return EXIT_MISMATCH
    print(f"{serialize(res.diagram)}\tj2={list(res.j2)}\texamined={res.examined}")
    return 0


# ------------------------------------------------------------------ main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twocolour",
                                     description="2-colour parity invariants of virtual links")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="all invariants of one link")
    p.add_argument("input", help="file, '-' for stdin, or an inline Gauss code")
    p.add_argument("--json", action="store_true")
    p.add_argument("--field", action="append", help="only report this field (repeatable)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--oracle", action="store_true", help="enumerate every generating colouring")
    g.add_argument("--check", action="store_true", help="run fast path and enumeration, compare")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("colourings", help="count, generating set and writhes")
    p.add_argument("input")
    p.set_defaults(func=cmd_colourings)

    p = sub.add_parser("project", help="delete the chords odd for a colouring")
    p.add_argument("input")
    p.add_argument("colouring", help="bit-string, one bit per component")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("compare", help="J^2 next to naive and IP writhes")
    p.add_argument("input")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("census", help="recompute a corpus and diff against goldens")
    p.add_argument("directory", nargs="?", help="corpus directory (default: bundled corpus)")
    p.add_argument("--regold", action="store_true", help="rewrite goldens from the oracle")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("fuzz", help="random Reidemeister walks checking parity axioms")
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-chords", type=int, default=12)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default="fuzz-witnesses")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("search", help="search for a lk = 0 link with nonzero J^2")
    p.add_argument("--max-chords", type=int, default=6)
    p.add_argument("--any-chords", action="store_true", help="allow self-crossings too")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotTwoColourable as exc:
        print(f"not 2-colourable: {exc}", file=sys.stderr)
        return EXIT_NOT_COLOURABLE


if __name__ == "__main__":
    sys.exit(main())
