"""Command-line front end.

Exit codes: 0 success / verified, 1 refuted or conditions not met,
2 malformed input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .construct import (
    BHRow,
    ConditionsNotMet,
    IngredientInvalid,
    build,
    compute_e1,
    default_build,
    default_ingredients,
)
from .forms import BilinearForm
from .groups import GroupSpecError, all_abelian_groups, parse_group_string
from .oracle import decide
from .phase import PhaseError, PhaseFn, truth_table_rank
from .search import DEFAULT_LIMIT, exhaustive_cyclic
from .verify import CriterionMismatch, verify, verify_matrix

EXIT_OK, EXIT_REFUTED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _group(text: str):
    try:
        return parse_group_string(text)
    except GroupSpecError as exc:
        raise InputError(str(exc)) from None


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _phase_from_file(path: str, l_rank: int) -> PhaseFn:
    bits = _load_json(path)
    if not isinstance(bits, list):
        raise InputError("truth table must be a JSON array of bits")
    try:
        a = truth_table_rank(len(bits))
    except PhaseError as exc:
        raise InputError(str(exc)) from None
    if 2 * a > l_rank:
        raise InputError(f"truth table needs {2 * a} L coordinates, group has {l_rank}")
    return PhaseFn(a, l_rank - 2 * a, tuple(bits))


def _write_row(row: BHRow, out: str | None, fmt: str) -> None:
    text = row.to_csv() if fmt == "csv" else json.dumps(row.to_json()) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_construct(args) -> int:
    spec = _group(args.group)
    custom = {}
    if args.beta is not None:
        custom["beta"] = args.beta
    if args.sqrt != "default":
        custom["sqrt_chooser"] = args.sqrt
    if args.form:
        try:
            custom["form"] = BilinearForm.from_json(_load_json(args.form))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad form file: {exc}") from None
    if args.bent:
        custom["phase"] = _phase_from_file(args.bent, spec.l_rank)
    try:
        if custom:
            ing = default_ingredients(spec, **custom)
            row = build(ing)
            if args.h is not None:
                if args.h % row.h:
                    print(f"h={args.h} is not a multiple of e1={compute_e1(ing)}", file=sys.stderr)
                    return EXIT_REFUTED
                row = row.lift(args.h)
        else:
            row = default_build(spec, args.h)
    except ConditionsNotMet as exc:
        print(f"BH({spec}, {args.h}) not constructed: {exc}", file=sys.stderr)
        return EXIT_REFUTED
    except IngredientInvalid as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_REFUTED
    if not verify(row):
        print("internal error: constructed row failed verification", file=sys.stderr)
        return EXIT_REFUTED
    _write_row(row, args.out, args.format)
    return EXIT_OK


def _read_matrix_csv(path: str) -> list[list[int]]:
    try:
        text = Path(path).read_text()
        return [[int(v) for v in r] for r in csv.reader(io.StringIO(text)) if r]
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read matrix {path}: {exc}") from None


def cmd_verify(args) -> int:
    if args.file.endswith(".csv"):
        if args.h is None:
            raise InputError("--h is required for a materialized CSV matrix")
        result = verify_matrix(_read_matrix_csv(args.file), args.h)
    else:
        try:
            row = BHRow.from_json(_load_json(args.file))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad row file: {exc}") from None
        try:
            result = verify(row)
        except CriterionMismatch as exc:
            print(f"internal error: {exc}", file=sys.stderr)
            return EXIT_REFUTED
    if result:
        print("VERIFIED")
        return EXIT_OK
    print(json.dumps(result.to_json()))
    return EXIT_REFUTED


def cmd_exists(args) -> int:
    spec = _group(args.group)
    if args.h < 1:
        raise InputError("h must be positive")
    verdict = decide(spec, args.h, args.search_limit)
    print(f"status: {verdict.status.value}")
    print(f"provenance: {verdict.provenance.value}")
    if verdict.note:
        print(f"note: {verdict.note}")
    if verdict.witness is not None and args.witness:
        Path(args.witness).write_text(json.dumps(verdict.witness.to_json()) + "\n")
        print(f"witness: {args.witness}")
    return EXIT_OK


def cmd_search(args) -> int:
    if args.v < 1 or args.h < 1:
        raise InputError("v and h must be positive")
    result = exhaustive_cyclic(args.v, args.h, args.limit, args.workers)
    print(f"outcome: {result.outcome.value}")
    print(f"nodes: {result.nodes}")
    if result.row is not None:
        print("row: " + " ".join(map(str, result.row.row)))
    return EXIT_OK


def _group_label(pairs) -> str:
    return " x ".join(str(p) if a == 1 else f"{p}^{a}" for p, a in pairs) or "1"


def table_rows(order_max: int, h_max: int):
    for n in range(1, order_max + 1):
        for spec in all_abelian_groups(n):
            pairs = sorted(spec.factor_pairs())
            for h in range(1, h_max + 1):
                verdict = decide(spec, h)
                yield [n, _group_label(pairs), h, verdict.status.value, verdict.provenance.value]


def cmd_table(args) -> int:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["order", "group", "h", "status", "provenance"])
    writer.writerows(table_rows(args.order_max, args.h_max))
    if args.out:
        Path(args.out).write_text(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="butson", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build and certify a group-invariant BH matrix")
    p.add_argument("--group", required=True, help='e.g. "3^2 x 2 x 2"')
    p.add_argument("--h", type=int, default=None, help="root-of-unity order (default e1)")
    p.add_argument("--beta", type=int, default=None)
    p.add_argument("--form", help='JSON file {"e": int, "gram": [[int]]}')
    p.add_argument("--bent", help="JSON bit array: truth table of a bent function")
    p.add_argument("--sqrt", choices=("default", "alternate"), default="default")
    p.add_argument("--out", default="-")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="certify a row (JSON) or a full matrix (CSV)")
    p.add_argument("file")
    p.add_argument("--h", type=int, default=None, help="root order for CSV input")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exists", help="decide existence of BH(K, h)")
    p.add_argument("--group", required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--witness", help="write the witness row here")
    p.add_argument("--search-limit", type=int, default=None)
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("search", help="exhaustive circulant search")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="CSV of existence verdicts")
    p.add_argument("--order-max", type=int, required=True)
    p.add_argument("--h-max", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
