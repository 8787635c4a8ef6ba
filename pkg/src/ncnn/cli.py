"""Command-line interface.

Every subcommand that reads or writes partitions uses one JSON object per line::

    {"family": "C", "rank": 8, "blocks": [[1, -2, 5, -6, -8], [3, 7], [4]], "zero": []}

``blocks`` lists one block from each ``±`` pair; the negatives are implied.
``zero`` may list the whole zero block or only its positive half.  A bare
``"n"`` may stand in for ``family``/``rank``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .bijection import NC_TO_NN, NN_TO_NC, convert, verify_central_theorem
from .errors import NCNNError
from .groups import (
    SignedPermutation,
    absolute_length,
    cayley_distances,
    partition_of_antichain,
    partition_of_element,
    uniform_noncrossing,
)
from .partitions import MODES, NC, NN, ClassicalPartition, enumerate_classical, partition_type
from .render import layout_diagram, emit
from .roots import GroupFamily, catalan_number, enumerate_antichains, root_endpoints
from .statistics import StatisticBundle, extract_statistics, validate_statistics

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
UNIFORM_LIMIT = {"A": 7, "B": 6, "C": 6, "D": 6}
CHECKS = ("counts", "roundtrip", "type", "uniform", "central", "carter")


class InputError(Exception):
    """Bad input data; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")


# ---------------------------------------------------------------- JSON forms


def _block_key(x: int):
    return (abs(x), x < 0)


def partition_to_json(g: GroupFamily, p: ClassicalPartition) -> dict:
    reps = [sorted(b, key=_block_key) for b in p.representatives()]
    pos = sorted(x for x in p.zero if x > 0)
    return {"family": g.family, "rank": g.rank, "blocks": reps, "zero": pos + [-x for x in pos]}


def partition_from_json(d: dict, g: GroupFamily) -> ClassicalPartition:
    """Read a partition; ``family``/``rank`` (or a bare ``n``) must agree with ``g``."""
    if "family" in d or "rank" in d:
        if (d.get("family"), d.get("rank")) != (g.family, g.rank):
            raise ValueError(f"partition is for {d.get('family')}{d.get('rank')}, expected {g}")
    elif int(d["n"]) != g.n:
        raise ValueError(f"partition has n={d['n']}, {g} needs n={g.n}")
    raw = {int(x) for x in d.get("zero", ())}
    if any(x < 0 for x in raw) and raw != {-x for x in raw}:
        raise ValueError("zero block is not closed under negation")
    return ClassicalPartition.from_blocks(g.n, d["blocks"], sorted({abs(x) for x in raw}))


def permutation_to_json(g: GroupFamily, w: SignedPermutation) -> dict:
    return {"family": g.family, "rank": g.rank, "images": list(w.images)}


def antichain_to_json(g: GroupFamily, ac) -> dict:
    return {"family": g.family, "rank": g.rank,
            "roots": sorted(list(root_endpoints(g, alpha)) for alpha in ac)}


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _read_json_lines(stream):
    for lineno, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        try:
            yield lineno, json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(lineno, f"malformed JSON ({exc.msg})") from None


def _read_partitions(stream, g: GroupFamily):
    for lineno, d in _read_json_lines(stream):
        try:
            p = partition_from_json(d, g)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(lineno, f"not a partition: {exc}") from None
        yield lineno, p


# ---------------------------------------------------------------- verification


@dataclass
class CheckRecord:
    name: str
    family: str
    rank: int
    expected: object
    observed: object
    passed: bool
    ms: float

    def to_json(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def _check_counts(g):
    nn = sum(1 for _ in enumerate_classical(g, NN))
    nc = sum(1 for _ in enumerate_classical(g, NC))
    ac = sum(1 for _ in enumerate_antichains(g))
    expected = catalan_number(g)
    observed = {"nn": nn, "nc": nc, "antichains": ac}
    return expected, observed, all(v == expected for v in observed.values())


def _check_roundtrip(g):
    nn = list(enumerate_classical(g, NN))
    nc = list(enumerate_classical(g, NC))
    ok = sum(1 for p in nn if convert(g, NC_TO_NN, convert(g, NN_TO_NC, p)) == p)
    ok += sum(1 for q in nc if convert(g, NN_TO_NC, convert(g, NC_TO_NN, q)) == q)
    return len(nn) + len(nc), ok, ok == len(nn) + len(nc)


def _check_type(g):
    nn = list(enumerate_classical(g, NN))
    nc = list(enumerate_classical(g, NC))
    moved = sum(1 for p in nn if partition_type(convert(g, NN_TO_NC, p)) != partition_type(p))
    same = Counter(map(partition_type, nn)) == Counter(map(partition_type, nc))
    return {"type_changes": 0, "equidistributed": True}, \
        {"type_changes": moved, "equidistributed": same}, moved == 0 and same


def _check_uniform(g):
    nc = set(enumerate_classical(g, NC))
    nn = set(enumerate_classical(g, NN))
    interval = uniform_noncrossing(g)
    nc_images = {partition_of_element(g, w) for w in interval}
    nn_images = {partition_of_antichain(g, ac) for ac in enumerate_antichains(g)}
    observed = {"interval": len(interval), "nc_images_match": nc_images == nc,
                "nn_images_match": nn_images == nn}
    ok = len(interval) == len(nc) and nc_images == nc and nn_images == nn
    return len(nc), observed, ok


def _check_central(g):
    total = bad = 0
    for source, direction in ((NN, NN_TO_NC), (NC, NC_TO_NN)):
        for x in enumerate_classical(g, source):
            total += 1
            if not verify_central_theorem(g, x, convert(g, direction, x)):
                bad += 1
    return total, total - bad, bad == 0


def _check_carter(g):
    dist = cayley_distances(g)
    agree = sum(1 for w, d in dist.items() if absolute_length(g, w) == d)
    return len(dist), agree, agree == len(dist)


_CHECK_FUNCS = {
    "counts": _check_counts, "roundtrip": _check_roundtrip, "type": _check_type,
    "uniform": _check_uniform, "central": _check_central, "carter": _check_carter,
}
# largest rank at which a check is scheduled, beyond which it is too slow for a smoke run
_CHECK_RANK_CAP = {"uniform": 5, "central": 4, "carter": 4}


def _run_check(task) -> dict:
    name, family, rank = task
    g = GroupFamily(family, rank)
    t0 = time.perf_counter()
    expected, observed, ok = _CHECK_FUNCS[name](g)
    ms = round((time.perf_counter() - t0) * 1000, 1)
    return CheckRecord(name, family, rank, expected, observed, bool(ok), ms).to_json()


def verification_tasks(max_rank: int, checks) -> list[tuple[str, str, int]]:
    tasks = []
    for name in checks:
        cap = min(max_rank, _CHECK_RANK_CAP.get(name, max_rank))
        for family in "ABCD":
            for rank in range(2 if family == "D" else 1, cap + 1):
                tasks.append((name, family, rank))
    return tasks


def run_verification(max_rank: int, checks, jobs: int = 1) -> dict:
    tasks = verification_tasks(max_rank, checks)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_check, tasks))
    else:
        records = [_run_check(t) for t in tasks]
    return {"checks": records, "pass": all(r["pass"] for r in records)}


# ---------------------------------------------------------------- subcommands


def _group(args) -> GroupFamily:
    return GroupFamily(args.family, args.rank)


def cmd_count(args, out) -> int:
    g = _group(args)
    if args.uniform:
        if g.rank > UNIFORM_LIMIT[g.family] and not args.force:
            print(f"refusing --uniform above rank {UNIFORM_LIMIT[g.family]} for {g.family} "
                  "without --force", file=sys.stderr)
            return EXIT_USAGE
        if args.mode == NN:
            value = sum(1 for _ in enumerate_antichains(g))
        else:
            value = len(uniform_noncrossing(g))
    else:
        value = sum(1 for _ in enumerate_classical(g, args.mode))
    print(value, file=out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    g = _group(args)
    for p in enumerate_classical(g, args.mode):
        if args.format == "json":
            print(dumps(partition_to_json(g, p)), file=out)
        else:
            d = partition_to_json(g, p)
            parts = ["{" + ",".join(map(str, b)) + "}" for b in d["blocks"]]
            if d["zero"]:
                parts.append("0: {" + ",".join(f"±{x}" for x in d["zero"] if x > 0) + "}")
            print(" | ".join(parts) if d["blocks"] and d["zero"] else " ".join(parts), file=out)
    return EXIT_OK


def cmd_convert(args, out, stdin) -> int:
    g = _group(args)
    direction = NN_TO_NC if args.source == NN else NC_TO_NN
    for lineno, p in _read_partitions(stdin, g):
        try:
            q = convert(g, direction, p)
        except NCNNError as exc:
            raise InputError(lineno, str(exc)) from None
        print(dumps(partition_to_json(g, q)), file=out)
    return EXIT_OK


def cmd_stats(args, out, stdin) -> int:
    g = _group(args)
    for lineno, p in _read_partitions(stdin, g):
        try:
            s = extract_statistics(g, args.mode, p)
        except NCNNError as exc:
            raise InputError(lineno, str(exc)) from None
        print(dumps(s.to_dict()), file=out)
    return EXIT_OK


def cmd_validate(args, out, stdin) -> int:
    g = _group(args)
    code = EXIT_OK
    for lineno, d in _read_json_lines(stdin):
        try:
            s = StatisticBundle.from_dict(d)
        except (TypeError, AttributeError) as exc:
            raise InputError(lineno, f"not a statistics object: {exc}") from None
        v = validate_statistics(g, s, args.mode)
        if not v:
            code = EXIT_FAIL
        print(dumps({"valid": v.ok, "violations": list(v.violations)}), file=out)
    return code


def cmd_verify(args, out) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        print(f"unknown checks: {', '.join(unknown)}", file=sys.stderr)
        return EXIT_USAGE
    report = run_verification(args.max_rank, checks, args.jobs)
    print(json.dumps(report, indent=2), file=out)
    return EXIT_OK if report["pass"] else EXIT_FAIL


def cmd_render(args, out, stdin) -> int:
    g = _group(args)
    items = list(_read_partitions(stdin, g))
    if len(items) != 1:
        lineno = items[1][0] if items else 0
        raise InputError(lineno, "render expects exactly one partition")
    lineno, p = items[0]
    try:
        text = emit(layout_diagram(g, args.mode, p), args.format)
    except NCNNError as exc:
        raise InputError(lineno, str(exc)) from None
    out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncnn", description="Noncrossing and nonnesting partitions of classical reflection groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def group_args(p, mode=True):
        p.add_argument("--family", required=True, choices="ABCD")
        p.add_argument("--rank", required=True, type=int)
        if mode:
            p.add_argument("--mode", choices=MODES, default=NN)

    p = sub.add_parser("count", help="number of classical (or uniform) partitions")
    group_args(p)
    p.add_argument("--uniform", action="store_true",
                   help="count antichains (nn) or the interval below the Coxeter element (nc)")
    p.add_argument("--force", action="store_true", help="lift the rank guardrail for --uniform")

    p = sub.add_parser("enumerate", help="list every partition, one per line")
    group_args(p)
    p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("convert", help="map partitions read from stdin to the other mode")
    group_args(p, mode=False)
    p.add_argument("--from", dest="source", choices=MODES, required=True)

    p = sub.add_parser("stats", help="statistics of partitions read from stdin")
    group_args(p)

    p = sub.add_parser("validate", help="check statistics objects read from stdin")
    group_args(p)

    p = sub.add_parser("verify", help="run exhaustive consistency checks")
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--checks", default=",".join(CHECKS))
    p.add_argument("--jobs", type=int, default=int(os.environ.get("NCNN_JOBS", "1") or 1))

    p = sub.add_parser("render", help="draw one partition read from stdin")
    group_args(p)
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    return parser


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handlers = {
        "count": lambda: cmd_count(args, out),
        "enumerate": lambda: cmd_enumerate(args, out),
        "convert": lambda: cmd_convert(args, out, stdin),
        "stats": lambda: cmd_stats(args, out, stdin),
        "validate": lambda: cmd_validate(args, out, stdin),
        "verify": lambda: cmd_verify(args, out),
        "render": lambda: cmd_render(args, out, stdin),
    }
    try:
        return handlers[args.command]()
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except NCNNError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
