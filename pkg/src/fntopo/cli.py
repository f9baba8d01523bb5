"""Command-line driver.

Exit codes: 0 on success, 1 on analysis-domain errors (bad tables, domain
escapes, size limits), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from fntopo import __version__
from fntopo.builtins import BUILTIN_NAMES, builtin
from fntopo.core import DEFAULT_BUDGET, BudgetExhausted, EnteredCycle, ReachedBase, orbit
from fntopo.errors import FntopoError
from fntopo.io import analyze, export_dot, read_function_table
from fntopo.isomorphism import DEFAULT_EMBED_LIMIT, Mode, classify_chain, embed_limit, embeds_into, is_ordinally_isomorphic
from fntopo.recurrence import RecurrenceSpec, eval_naive, projected_topology, run_accumulator
from fntopo.termination import classify_termination, classify_termination_symbolic, extract_ranking
from fntopo.topology import build_topology


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _outcome_text(outcome) -> str:
    if isinstance(outcome, ReachedBase):
        return f"ReachedBase({outcome.steps})"
    if isinstance(outcome, EnteredCycle):
        return f"EnteredCycle(cycle={' '.join(map(str, outcome.cycle))}, tail_length={outcome.tail_length})"
    return f"BudgetExhausted({outcome.budget})"


def _outcome_dict(outcome) -> dict:
    if isinstance(outcome, ReachedBase):
        return {"kind": "ReachedBase", "steps": outcome.steps}
    if isinstance(outcome, EnteredCycle):
        return {"kind": "EnteredCycle", "cycle": list(outcome.cycle), "tail_length": outcome.tail_length}
    assert isinstance(outcome, BudgetExhausted)
    return {"kind": "BudgetExhausted", "budget": outcome.budget}


def _map_from_args(args):
    if args.table and args.builtin:
        raise UsageError("give either --table or --builtin, not both")
    if args.table:
        return read_function_table(args.table).as_symbolic(Path(args.table).name)
    if args.builtin:
        try:
            return builtin(args.builtin, args.a, args.b)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError("one of --table or --builtin is required")


def _labels(t, ids):
    return [t.classes[i].label() for i in ids]


def cmd_analyze(args) -> int:
    f = read_function_table(args.table)
    report = analyze(f, source=args.table, mode=args.mode)
    _emit(report.to_json() if args.format == "json" else report.to_text(), args.out)
    t = build_topology(f)
    if args.dot:
        Path(args.dot).write_text(export_dot(t))
    if args.figure:
        from fntopo.plotting import plot_hasse

        plot_hasse(t, args.figure, title=Path(args.table).name)
    return 0


def cmd_orbit(args) -> int:
    m = _map_from_args(args)
    results = [orbit(m, x, args.budget) for x in args.start]
    if args.format == "json":
        text = _dump([
            {"start": r.start, "trace": list(r.trace), "outcome": _outcome_dict(r.outcome)} for r in results
        ])
    else:
        text = "".join(
            f"trace: {' '.join(map(str, r.trace))}\noutcome: {_outcome_text(r.outcome)}\n" for r in results
        )
    _emit(text, args.out)
    if args.figure:
        from fntopo.plotting import plot_orbits

        plot_orbits(results, args.figure, title=m.name)
    return 0


def cmd_iso(args) -> int:
    f = read_function_table(args.table_a)
    g = read_function_table(args.table_b)
    witness = is_ordinally_isomorphic(f, g, args.mode)
    ta, tb = build_topology(f), build_topology(g)
    pairs = sorted(witness.items()) if witness is not None else []
    if args.format == "json":
        text = _dump({
            "isomorphic": witness is not None,
            "mode": Mode(args.mode).value,
            "witness": [[ta.classes[a].label(), tb.classes[b].label()] for a, b in pairs],
        })
    else:
        lines = [f"isomorphic: {'yes' if witness is not None else 'no'}"]
        lines += [f"  {ta.classes[a].label()} -> {tb.classes[b].label()}" for a, b in pairs]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_embed(args) -> int:
    f = read_function_table(args.table_a)
    g = read_function_table(args.table_b)
    limit = args.limit if args.limit is not None else embed_limit()
    ta, tb = build_topology(f), build_topology(g)
    phi = embeds_into(ta, tb, limit=limit)
    pairs = sorted(phi.items()) if phi is not None else []
    if args.format == "json":
        text = _dump({
            "embeds": phi is not None,
            "witness": [[ta.classes[a].label(), tb.classes[b].label()] for a, b in pairs],
        })
    else:
        lines = [f"embeds: {'yes' if phi is not None else 'no'}"]
        lines += [f"  {ta.classes[a].label()} -> {tb.classes[b].label()}" for a, b in pairs]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_rank(args) -> int:
    f = read_function_table(args.table)
    ranks = extract_ranking(build_topology(f), f)
    if args.format == "json":
        text = _dump({"rank": [[x, r] for x, r in ranks.items()]})
    else:
        text = "".join(f"{x} {r}\n" for x, r in ranks.items())
    _emit(text, args.out)
    return 0


def cmd_term(args) -> int:
    chain = None
    if args.table and not args.builtin:
        verdict = classify_termination(read_function_table(args.table))
    else:
        m = _map_from_args(args)
        probes = args.start or [1]
        verdict = classify_termination_symbolic(m, probes, args.budget)
        chain = classify_chain(m)
    base = sorted(verdict.required_base_conditions) if verdict.required_base_conditions else None
    if args.format == "json":
        payload = {
            "status": verdict.status.value,
            "required_base_conditions": base,
            "certificate": verdict.certificate,
        }
        if verdict.probes is not None:
            payload["probes"] = {str(x): _outcome_dict(r.outcome) for x, r in verdict.probes.items()}
        if chain is not None:
            payload["chain"] = {"kind": chain.kind.value, "evidence": chain.evidence}
        text = _dump(payload)
    else:
        lines = [f"status: {verdict.status.value}", f"certificate: {verdict.certificate}"]
        if base is not None:
            lines.append("base conditions: {" + ", ".join(map(str, base)) + "}")
        if chain is not None:
            lines.append(f"chain: {chain}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _read_spec_file(path) -> RecurrenceSpec:
    fields: dict[str, list[int]] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *vals = line.split()
        if key not in ("memory", "const", "coeffs", "bases"):
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            fields[key] = [int(v) for v in vals]
        except ValueError:
            raise UsageError(f"{path}:{lineno}: non-integer value") from None
    try:
        return RecurrenceSpec(fields["memory"][0], fields.get("const", [0])[0], fields["coeffs"], fields["bases"])
    except (KeyError, IndexError):
        raise UsageError(f"{path}: needs memory, coeffs and bases") from None


def cmd_recur(args) -> int:
    try:
        if args.spec_file:
            spec = _read_spec_file(args.spec_file)
        else:
            if args.memory is None or args.coeffs is None or args.bases is None:
                raise UsageError("recur needs --spec-file or --memory, --coeffs and --bases")
            spec = RecurrenceSpec(args.memory, args.const, args.coeffs, args.bases)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    value, steps = run_accumulator(spec, args.n)
    result = {"n": args.n, "value": value, "steps": steps}
    if args.check:
        result["naive"] = eval_naive(spec, args.n)
        result["agree"] = result["naive"] == value
    if args.format == "json":
        text = _dump(result)
    else:
        text = "".join(f"{k}: {v}\n" for k, v in result.items())
    _emit(text, args.out)
    if args.dot:
        horizon = args.horizon if args.horizon is not None else max(args.n, spec.memory)
        Path(args.dot).write_text(export_dot(projected_topology(spec, horizon), name="index"))
    return 0 if result.get("agree", True) else 1


def cmd_export(args) -> int:
    t = build_topology(read_function_table(args.table))
    _emit(export_dot(t), args.out)
    if args.figure:
        from fntopo.plotting import plot_hasse

        plot_hasse(t, args.figure, title=Path(args.table).name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fntopo", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"fntopo {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out", help="write output here instead of stdout")

    def source(p):
        p.add_argument("--table", help="function table file")
        p.add_argument("--builtin", choices=BUILTIN_NAMES)
        p.add_argument("--a", type=int, help="affine multiplier (a >= 0)")
        p.add_argument("--b", type=int, help="affine offset")

    p = sub.add_parser("analyze", help="full analysis report for a table")
    p.add_argument("--table", required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.CLASS_LEVEL.value)
    p.add_argument("--dot", help="also write the Hasse forest as DOT")
    p.add_argument("--figure", help="also render the Hasse forest to an image file")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("orbit", help="iterate a map from one or more start values")
    source(p)
    p.add_argument("--start", type=int, nargs="+", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--figure", help="render the traces to an image file")
    common(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("iso", help="decide ordinal isomorphism of two tables")
    p.add_argument("--table-a", required=True)
    p.add_argument("--table-b", required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.CLASS_LEVEL.value)
    common(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("embed", help="decide whether table A's order embeds into table B's")
    p.add_argument("--table-a", required=True)
    p.add_argument("--table-b", required=True)
    p.add_argument("--limit", type=int, help=f"class-count cutoff (default {DEFAULT_EMBED_LIMIT})")
    common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("rank", help="extract a ranking function")
    p.add_argument("--table", required=True)
    common(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("term", help="termination verdict")
    source(p)
    p.add_argument("--start", type=int, nargs="+", help="probe start values for symbolic maps")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common(p)
    p.set_defaults(func=cmd_term)

    p = sub.add_parser("recur", help="evaluate a linear recurrence via its accumulator form")
    p.add_argument("--spec-file")
    p.add_argument("--memory", type=int)
    p.add_argument("--const", type=int, default=0)
    p.add_argument("--coeffs", type=int, nargs="+")
    p.add_argument("--bases", type=int, nargs="+")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="compare against direct evaluation")
    p.add_argument("--dot", help="write the index-argument topology as DOT")
    p.add_argument("--horizon", type=int)
    common(p)
    p.set_defaults(func=cmd_recur)

    p = sub.add_parser("export", help="write the Hasse forest as DOT")
    p.add_argument("--table", required=True)
    p.add_argument("--figure", help="also render the forest to an image file")
    common(p, fmt=False)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"fntopo: error: {exc}", file=sys.stderr)
        return 2
    except FntopoError as exc:
        print(f"fntopo: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"fntopo: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
