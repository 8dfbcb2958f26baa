"""Command-line front end.

Exit codes: 0 success, 1 domain or validation failure, 2 unreadable or
malformed input, 3 usage error. Data goes to stdout, messages to stderr.

Wherever a FILE is expected, a fixture name such as ``table10`` may be given
instead when no file of that name exists.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import algebra
from .core import ConstraintMode, GNSoftSet, Triple, parse_param
from .decision import comparison_matrix, decide, restrict, scores
from .errors import ConstraintViolation, GnssError, ParseError, UnknownFixture
from .tabio import diff_tables
from .tabio.csv_format import serialize_matrix_csv, serialize_scores_csv
from .tabio.fixtures import FIXTURE_NAMES, fixture
from .tabio.io import Format, dumps, loads, sniff
from .tabio.structured import param_to_obj

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_USAGE = 0, 1, 2, 3

# the fixture loader used by every command; tests swap it out
load_fixture: Callable = fixture

# printed cells that recomputation shows to be wrong
KNOWN_ERRATA: dict[str, set[tuple[str, str]]] = {
    "Table 7": {("b3", "colorful"), ("b4", "colorful")},
    "Table 9": {("b3", "colorful|colorful"), ("b5", "bright|colorful")},
    "Table 11": {("b5", "cheap"), ("b1", "costly")},
}

MODES = {m.value: m for m in ConstraintMode}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class _InputError(Exception):
    def __init__(self, err: Exception, code: int):
        self.err, self.code = err, code


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load(source: str, mode: ConstraintMode) -> tuple[GNSoftSet, Format]:
    """Read a soft set from a path, or from a fixture when no such file exists."""
    path = Path(source)
    try:
        if path.exists():
            data = path.read_bytes()
            fmt = sniff(data, path)
            return loads(data, fmt, mode), fmt
        if source in FIXTURE_NAMES:
            s = load_fixture(source)
            if not isinstance(s, GNSoftSet):
                raise UnknownFixture(f"fixture {source!r} is not a soft set")
            s.check(mode)
            return s, Format.CSV
    except ConstraintViolation as e:
        raise _InputError(e, EXIT_DOMAIN) from None
    except (GnssError, OSError) as e:
        raise _InputError(e, EXIT_PARSE) from None
    raise _InputError(FileNotFoundError(f"no such file or fixture: {source}"), EXIT_PARSE)


def _emit(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _format(args, default: Format) -> Format:
    return Format(args.format) if args.format else default


def _params(text: str | None):
    if text is None:
        return None
    return [parse_param(p.strip()) for p in text.split(",") if p.strip()]


# -- commands -------------------------------------------------------------------


def cmd_validate(args) -> int:
    mode = MODES[args.mode]
    s, _ = _load(args.file, ConstraintMode.NEUTROSOPHIC_ONLY)
    bad = s.violations(mode)
    for obj, key, x in bad:
        print(f"({obj},{key.label}) {x}: {_why(x, mode)}")
    if bad:
        _err(f"{len(bad)} cell(s) violate mode {mode.value}")
        return EXIT_DOMAIN
    _err(f"ok: {s.shape[0]} objects x {s.shape[1]} parameters satisfy mode {mode.value}")
    return EXIT_OK


def _why(x: Triple, mode: ConstraintMode) -> str:
    if mode is ConstraintMode.GNS_SUM_LITERAL:
        return f"t + i + f = {x.t.fraction + x.i.fraction + x.f.fraction} > 0.5"
    return f"min(t, i, f) = {min(x.t, x.i, x.f)} > 0.5"


_BINARY = {
    "union": algebra.gnss_union,
    "intersect": algebra.gnss_intersection,
    "and": algebra.gnss_and,
    "or": algebra.gnss_or,
}


def cmd_op(args) -> int:
    mode = MODES[args.mode]
    need = 2 if args.kind in _BINARY else 1
    if len(args.inputs) != need:
        raise UsageError(f"op {args.kind} takes {need} input(s), got {len(args.inputs)}")
    loaded = [_load(src, mode) for src in args.inputs]
    fmt = _format(args, loaded[0][1])
    sets = [s for s, _ in loaded]
    if args.kind == "not":
        keys = algebra.not_params(sets[0].params)
        if fmt is Format.JSON:
            data = json.dumps([param_to_obj(k) for k in keys], indent=2) + "\n"
        else:
            data = "".join(k.label + "\n" for k in keys)
        _emit(data.encode("utf-8"), args.out)
        return EXIT_OK
    if args.kind == "complement":
        result = algebra.gnss_complement(sets[0])
    else:
        result = _BINARY[args.kind](*sets)
    _emit(dumps(result, fmt), args.out)
    return EXIT_OK


def cmd_matrix(args) -> int:
    s, _ = _load(args.file, MODES[args.mode])
    chosen = restrict(s, _params(args.params) or s.params)
    _emit(serialize_matrix_csv(comparison_matrix(chosen)), args.out)
    return EXIT_OK


def cmd_rank(args) -> int:
    s, _ = _load(args.file, MODES[args.mode])
    chosen = restrict(s, _params(args.params) or s.params)
    m = comparison_matrix(chosen)
    sv = scores(m)
    ranking = decide(chosen)
    lines = []
    if args.matrix:
        lines.append("comparison matrix:")
        lines.extend("  " + row for row in serialize_matrix_csv(m).decode().splitlines())
    lines.append("scores:")
    lines.extend(f"  {o}: {v}" for o, v in sv.as_dict().items())
    lines.append("ranking:")
    for place, (score, objs) in enumerate(ranking.groups, start=1):
        tie = "  (tie)" if len(objs) > 1 else ""
        lines.append(f"  {place}. {', '.join(objs)}: {score}{tie}")
    lines.append(f"winners: {', '.join(ranking.winners)} (score {ranking.best_score})")
    lines.append(f"choice: {ranking.choice}")
    _emit(("\n".join(lines) + "\n").encode("utf-8"), args.out)
    return EXIT_OK


def cmd_fixture(args) -> int:
    if args.name not in FIXTURE_NAMES:
        err = UnknownFixture(f"no fixture named {args.name!r}; known: {', '.join(FIXTURE_NAMES)}")
        raise _InputError(err, EXIT_PARSE)
    obj = load_fixture(args.name)
    if isinstance(obj, GNSoftSet):
        data = dumps(obj, _format(args, Format.CSV))
    elif args.format == "json":
        raise UsageError(f"fixture {args.name} is only available as csv")
    elif args.name == "scores":
        data = serialize_scores_csv(obj)
    else:
        data = serialize_matrix_csv(obj)
    _emit(data, args.out)
    return EXIT_OK


def _printed_checks():
    fx = load_fixture
    t4, t5 = fx("table4"), fx("table5")
    yield "Table 6", fx("table6"), algebra.gnss_union(t4, t5)
    yield "Table 7", fx("table7"), algebra.gnss_intersection(t4, t5)
    yield "Table 8", fx("table8"), algebra.gnss_and(t4, t5)
    yield "Table 9", fx("table9"), algebra.gnss_or(t4, t5)
    yield "Table 11", fx("table11"), comparison_matrix(fx("table10"))
    yield "ex3_11", fx("ex3_11"), algebra.gnss_complement(fx("table1"))
    null = fx("ex3_13")
    yield "ex3_13", null, algebra.null_gnss(null.universe, null.params)
    f, g, k = fx("ex3_20_F"), fx("ex3_20_G"), fx("ex3_20_K")
    u, n = algebra.gnss_union, algebra.gnss_intersection
    yield "ex3_20_FG", fx("ex3_20_FG"), u(f, g)
    yield "ex3_20_FK", fx("ex3_20_FK"), u(f, k)
    yield "ex3_20_GK", fx("ex3_20_GK"), n(g, k)
    yield "ex3_20_lhs", fx("ex3_20_lhs"), u(f, n(g, k))
    yield "ex3_20_rhs", fx("ex3_20_rhs"), n(u(f, g), u(f, k))


def verify_paper() -> tuple[list[str], bool]:
    """Recompute every derivable table and compare with the printed ones.

    Returns the report lines and whether the discrepancies found are exactly
    the known errata.
    """
    lines, ok = [], True
    for name, printed, computed in _printed_checks():
        report = diff_tables(printed, computed)
        found = set(report.locations)
        if found:
            where = ",".join(f"({o},{p})" for o, p in report.locations)
            lines.append(f"{name}: {len(report)} diffs at {where}")
            lines.extend(f"    {e}" for e in report)
        else:
            lines.append(f"{name}: 0 diffs")
        if found != KNOWN_ERRATA.get(name, set()):
            ok = False
            lines.append(f"    unexpected: known errata are {sorted(KNOWN_ERRATA.get(name, set()))}")

    holds = algebra.gnss_subset(load_fixture("table2"), load_fixture("table3"))
    reverse = algebra.gnss_subset(load_fixture("table3"), load_fixture("table2"))
    lines.append(f"Subset: table2 ⊆ table3 {'holds' if holds else 'FAILS'}"
                 f", reverse {'holds' if reverse else 'fails'}")
    ok &= holds and not reverse

    ranking = decide(load_fixture("table10"))
    printed = load_fixture("scores")
    lines.append(f"Decision: winners {', '.join(ranking.winners)} with score {ranking.best_score}"
                 f" (printed winner b4 with score {printed['b4']})")
    ok &= ranking.winners == ("b4",) and ranking.best_score == printed["b4"]
    return lines, ok


def cmd_verify_paper(args) -> int:
    lines, ok = verify_paper()
    _emit(("\n".join(lines) + "\n").encode("utf-8"), None)
    total = sum(len(v) for v in KNOWN_ERRATA.values())
    if ok:
        _err(f"verify-paper: ok, {total} known errata cells reproduced, nothing else differs")
        return EXIT_OK
    _err("verify-paper: discrepancies do not match the known errata list")
    return EXIT_DOMAIN


# -- wiring ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gnss", description="Generalized neutrosophic soft set toolkit.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def with_mode(sp):
        sp.add_argument("--mode", choices=list(MODES), default="min",
                        help="constraint on each triple (default: min)")

    sp = sub.add_parser("validate", help="check every cell against a constraint mode")
    sp.add_argument("file")
    with_mode(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("op", help="apply an operation")
    sp.add_argument("kind", choices=["union", "intersect", "and", "or", "complement", "not"])
    sp.add_argument("inputs", nargs="+")
    sp.add_argument("--format", choices=["csv", "json"])
    sp.add_argument("--out")
    with_mode(sp)
    sp.set_defaults(func=cmd_op)

    sp = sub.add_parser("rank", help="score and rank the objects")
    sp.add_argument("file")
    sp.add_argument("--params", help="comma-separated choice parameters (default: all)")
    sp.add_argument("--matrix", action="store_true", help="also print the comparison matrix")
    sp.add_argument("--out")
    with_mode(sp)
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("matrix", help="print the comparison matrix as CSV")
    sp.add_argument("file")
    sp.add_argument("--params")
    sp.add_argument("--out")
    with_mode(sp)
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("fixture", help="print a stored example table")
    sp.add_argument("name")
    sp.add_argument("--format", choices=["csv", "json"])
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_fixture)

    sp = sub.add_parser("verify-paper", help="recompute the worked examples and list the errata")
    sp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        _err(str(e))
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        _err(f"usage error: {e}")
        return EXIT_USAGE
    except _InputError as e:
        _err(f"error: {type(e.err).__name__}: {e.err}")
        return e.code
    except ParseError as e:
        _err(f"error: {type(e).__name__}: {e}")
        return EXIT_PARSE
    except GnssError as e:
        _err(f"error: {type(e).__name__}: {e}")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
