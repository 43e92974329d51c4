"""Command-line front end: enumeration, class counting, verification sweeps,
series expansion, canonical projections, named maps and witness construction.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import canonical, paths, patterns, quotient, reference, series

_FAMILIES = {
    "lukasiewicz": paths.LUKASIEWICZ,
    "motzkin": paths.MOTZKIN,
    "dyck": paths.DYCK,
}

_CANON_FOR_PATTERN = {
    "DU": canonical.motzkinize_du,
    "FU": lambda p: canonical.motzkinize_runs(p, "FU"),
    "UF": lambda p: canonical.motzkinize_runs(p, "UF"),
    "Uk": canonical.to_b,
    "UkD": canonical.to_c,
    "UkF": canonical.to_e,
    "FF": canonical.to_f,
}

_WITNESS = {
    "F": canonical.witness_f,
    "D": canonical.witness_d,
    "FD": lambda n, pos: canonical.witness_adj(n, pos, "FD"),
    "DF": lambda n, pos: canonical.witness_adj(n, pos, "DF"),
    "DD": canonical.witness_dd,
}

_METHOD_ORDER = {"closed": 0, "recurrence": 1, "fixpoint": 2, "oracle": 3, "positions": 4}


class UsageError(Exception):
    pass


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _emit(rows: list[dict], columns: tuple[str, ...], fmt: str | None, plain_col: str | None):
    """Print rows as csv (fixed header), json (list of objects), or plain
    (one value of plain_col per line)."""
    if fmt == "json":
        print(json.dumps(rows))
    elif fmt == "csv" or plain_col is None:
        print(",".join(columns))
        for r in rows:
            print(",".join(str(r[c]) for c in columns))
    else:
        for r in rows:
            print(r[plain_col])


def _parse_positions(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"malformed position list: {text!r}")


def _relations_arg(value: str) -> tuple[str, ...]:
    if value == "all":
        return patterns.RELATIONS
    if value not in patterns.RELATIONS:
        raise UsageError(f"unknown relation: {value!r}")
    return (value,)


def _parse_path_arg(text: str):
    try:
        return paths.parse_path(text)
    except paths.PathError as e:
        raise UsageError(str(e))


def _cmd_enumerate(args) -> int:
    family = _FAMILIES[args.family]
    rows = []
    for p in paths.enumerate_paths(args.length, family):
        if args.set and not paths.in_subset(p, args.set):
            continue
        rows.append({"path": paths.format_path(p)})
    _emit(rows, ("path",), args.format, "path")
    return 0


def _cmd_classes(args) -> int:
    relations = _relations_arg(args.pattern)
    lengths = range(1, args.max_length + 1) if args.max_length else [args.length]
    if args.length is None and not args.max_length:
        raise UsageError("classes needs --length or --max-length")
    rows = []
    for n in lengths:
        counts = quotient.class_counts_all(n, relations, args.oracle_bound)
        for rel in relations:
            rows.append({"n": n, "relation": rel, "method": "oracle", "count": counts[rel]})
    _emit(rows, ("n", "relation", "method", "count"), args.format, "count")
    return 0


def _verify_rows(relations, max_length: int, bound: int | None) -> list[dict]:
    values: dict[str, dict[str, list[int]]] = {}
    for rel in relations:
        values[rel] = {m: series.sequence_values(rel, m, max_length)
                       for m in series.available_methods(rel)}
        if rel in quotient.POSITION_SET_PATTERNS:
            values[rel]["positions"] = [
                quotient.count_valid_position_sets(n, rel).count for n in range(max_length + 1)
            ]
    limit = quotient.oracle_bound() if bound is None else bound
    for n in range(1, min(max_length, limit) + 1):
        _progress(f"oracle sweep: length {n}")
        counts = quotient.class_counts_all(n, relations, bound)
        for rel in relations:
            values[rel].setdefault("oracle", [None] * (max_length + 1))[n] = counts[rel]
    rows = []
    for rel in relations:
        for n in range(1, max_length + 1):
            if 1 <= n <= 10:
                ref = reference.table1_value(rel, n)
            else:
                first = min(values[rel], key=lambda m: _METHOD_ORDER[m])
                ref = values[rel][first][n]
            for method in sorted(values[rel], key=lambda m: _METHOD_ORDER[m]):
                v = values[rel][method][n]
                if v is None:
                    continue
                rows.append({"n": n, "relation": rel, "method": method,
                             "value": v, "reference": ref, "pass": v == ref})
    return rows


def _cmd_verify(args) -> int:
    relations = _relations_arg(args.pattern)
    rows = _verify_rows(relations, args.max_length, args.oracle_bound)
    _emit(rows, ("n", "relation", "method", "value", "reference", "pass"), args.format, None)
    return 0 if all(r["pass"] for r in rows) else 1


def _cmd_series(args) -> int:
    tag = args.tag
    rows = []
    if tag in patterns.RELATIONS:
        methods = series.available_methods(tag)
        if args.method != "all":
            if args.method not in methods:
                raise UsageError(f"method {args.method!r} not available for {tag!r}")
            methods = (args.method,)
        for method in methods:
            vals = series.sequence_values(tag, method, args.terms)
            rows += [{"n": n, "tag": tag, "method": method, "value": v}
                     for n, v in enumerate(vals)]
    else:
        try:
            vals = series.family_series(tag, args.terms)
        except series.UnsupportedTag as e:
            raise UsageError(str(e))
        rows = [{"n": n, "tag": tag, "method": "fixpoint", "value": v}
                for n, v in enumerate(vals)]
    _emit(rows, ("n", "tag", "method", "value"), args.format, "value")
    return 0


def _cmd_canon(args) -> int:
    if args.pattern not in _CANON_FOR_PATTERN:
        raise UsageError(
            f"no canonical projection for {args.pattern!r}; "
            f"choose from {', '.join(sorted(_CANON_FOR_PATTERN))}"
        )
    p = _parse_path_arg(args.path)
    q = _CANON_FOR_PATTERN[args.pattern](p)
    _emit([{"path": paths.format_path(q)}], ("path",), args.format, "path")
    return 0


def _cmd_map(args) -> int:
    name = args.name
    if name == "runs":
        if args.pattern not in ("FU", "UF"):
            raise UsageError("map --name runs needs --pattern FU or UF")
        name = f"runs-{args.pattern}"
    if name not in canonical.MAPS:
        raise UsageError(f"unknown map: {args.name!r}")
    p = _parse_path_arg(args.path)
    q = canonical.MAPS[name](p)
    _emit([{"path": paths.format_path(q)}], ("path",), args.format, "path")
    return 0


def _cmd_witness(args) -> int:
    if args.pattern not in _WITNESS:
        raise UsageError(f"no witness construction for {args.pattern!r}")
    positions = _parse_positions(args.positions)
    try:
        w = _WITNESS[args.pattern](args.length, positions)
    except canonical.InvalidPositionSet as e:
        raise UsageError(str(e))
    _emit([{"path": paths.format_path(w)}], ("path",), args.format, "path")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lukas")
    sub = parser.add_subparsers(dest="command", required=True)

    def subparser(cmd, fn, flags):
        p = sub.add_parser(cmd)
        p.set_defaults(fn=fn)
        for flag, kwargs in flags:
            p.add_argument(flag, **kwargs)
        p.add_argument("--format", choices=("csv", "json"))
        return p

    subparser("enumerate", _cmd_enumerate, [
        ("--length", {"type": int, "required": True}),
        ("--family", {"choices": tuple(_FAMILIES), "default": "lukasiewicz"}),
        ("--set", {"choices": paths.SUBSET_TAGS}),
    ])
    subparser("classes", _cmd_classes, [
        ("--length", {"type": int}),
        ("--max-length", {"type": int}),
        ("--pattern", {"required": True}),
        ("--oracle-bound", {"type": int}),
    ])
    subparser("verify", _cmd_verify, [
        ("--max-length", {"type": int, "required": True}),
        ("--pattern", {"default": "all"}),
        ("--oracle-bound", {"type": int}),
    ])
    subparser("series", _cmd_series, [
        ("--tag", {"required": True}),
        ("--terms", {"type": int, "required": True}),
        ("--method", {"choices": ("closed", "recurrence", "fixpoint", "all"), "default": "all"}),
    ])
    subparser("canon", _cmd_canon, [
        ("--pattern", {"required": True}),
        ("--path", {"required": True}),
    ])
    subparser("map", _cmd_map, [
        ("--name", {"required": True}),
        ("--pattern", {}),
        ("--path", {"required": True}),
    ])
    subparser("witness", _cmd_witness, [
        ("--pattern", {"required": True}),
        ("--length", {"type": int, "required": True}),
        ("--positions", {"default": ""}),
    ])
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (paths.PathError, patterns.LengthMismatch, quotient.UnsupportedPattern,
            canonical.InvalidPositionSet, series.SeriesError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except quotient.ResourceLimit as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
