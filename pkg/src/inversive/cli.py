"""Command-line front end: ``inversive <command> --p P --e E --a A --b B``.

Every command builds its complete output before writing anything, so error
paths never leave partial output behind. Exit codes: 0 ok, 1 verification
mismatch, 2 invalid parameters, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Tuple

from .analytic import classify, predict_period, predict_structure
from .enumerator import DEFAULT_BUDGET, build_graph, cycle_histogram, decompose, export_dot
from .exceptions import BudgetExceeded, InvalidParameters
from .iprng import Params, measure_period, orbit
from .ring import Modulus
from .structure import Verdict, structure_text, structure_to_dict
from .verify import verify_structure

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class Output:
    """Text and structured renderings of one command result."""

    def __init__(self, text: str, result, exit_code: int = EXIT_OK):
        self.text = text
        self.result = result
        self.exit_code = exit_code


def _params(ns) -> Params:
    return Params(Modulus(ns.p, ns.e), ns.a, ns.b)


def _hist_text(hist: Dict[int, int]) -> str:
    return " ".join(f"{T}:{n}" for T, n in sorted(hist.items())) or "-"


def _hist_json(hist: Dict[int, int]) -> Dict[str, int]:
    return {str(T): n for T, n in sorted(hist.items())}


def cmd_analyze(ns) -> Output:
    P = _params(ns)
    A = classify(P)
    S = predict_structure(P, A)
    text = f"case: {A.label.value}\nstructure: {structure_text(S)}"
    return Output(text, {"case": A.label.value, "structure": structure_to_dict(S)})


def cmd_enumerate(ns) -> Output:
    P = _params(ns)
    exact = decompose(build_graph(P, ns.budget))
    S = exact.to_graph_structure()
    full = cycle_histogram(exact)
    units = cycle_histogram(exact, units_only=True)
    text = "\n".join(
        [
            f"structure: {S.text()}",
            f"components: {len(exact.components)}",
            f"cycle lengths (all): {_hist_text(full)}",
            f"cycle lengths (unit cycles only): {_hist_text(units)}",
        ]
    )
    result = {
        "structure": S.to_dict(),
        "components": len(exact.components),
        "cycle_histogram": _hist_json(full),
        "unit_cycle_histogram": _hist_json(units),
    }
    return Output(text, result)


def cmd_verify(ns) -> Output:
    rep = verify_structure(_params(ns), ns.budget)
    lines = [
        f"case: {rep.label.value}",
        f"predicted:  {rep.predicted}",
        f"enumerated: {rep.enumerated}",
        "structure: "
        + {None: "no analytic claim", True: "match", False: "MISMATCH"}[rep.structure_match],
        f"periods: {rep.periods_checked - len(rep.period_mismatches)}/{rep.periods_checked} agree",
    ]
    for x0, pred, meas in rep.period_mismatches[:10]:
        shown = pred.value if isinstance(pred, Verdict) else f"pre={pred[0]} T={pred[1]}"
        lines.append(f"  x0={x0}: predicted {shown}, measured pre={meas[0]} T={meas[1]}")
    lines += [f"note: {n}" for n in rep.notes]
    lines.append("OK" if rep.ok else "FAIL")
    return Output("\n".join(lines), rep.to_dict(), EXIT_OK if rep.ok else EXIT_MISMATCH)


def cmd_period(ns) -> Output:
    P = _params(ns)
    x0 = ns.x0 % P.q
    pre, T = measure_period(x0, P)
    pred = predict_period(x0, P)
    if isinstance(pred, Verdict):
        pred_json, pred_text = pred.value, pred.value
    else:
        pred_json, pred_text = list(pred), f"pre={pred[0]} T={pred[1]}"
    text = f"pre={pre} T={T}"
    if ns.predicted:
        text += f"\npredicted: {pred_text}"
    return Output(text, {"x0": x0, "pre_period": pre, "period": T, "predicted": pred_json})


def cmd_seq(ns) -> Output:
    if ns.n < 0:
        raise InvalidParameters("n must be non-negative")
    xs = orbit(ns.x0, ns.n, _params(ns))
    return Output("\n".join(map(str, xs)), {"x0": ns.x0, "n": ns.n, "sequence": xs})


def cmd_dot(ns) -> Output:
    dot = export_dot(build_graph(_params(ns), ns.budget))
    if ns.out:
        return Output(f"wrote {ns.out}", {"out": ns.out, "nodes": _params(ns).q}), dot
    return Output(dot.rstrip("\n"), {"dot": dot})


def _excluded_cycles(exact) -> List[Tuple[int, ...]]:
    p = exact.params.p
    return [c.cycle_nodes for c in exact.components if any(x % p == 0 for x in c.cycle_nodes)]


def cmd_table(ns) -> Output:
    if ns.emax < 1:
        raise InvalidParameters("emax must be at least 1")
    Modulus(ns.p, ns.emax)  # validate before doing any work
    rows = []
    for e in range(1, ns.emax + 1):
        P = Params(Modulus(ns.p, e), ns.a, ns.b)
        exact = decompose(build_graph(P, ns.budget))
        rows.append(
            {
                "e": e,
                "units_only": cycle_histogram(exact, units_only=True),
                "full": cycle_histogram(exact),
                "excluded": _excluded_cycles(exact),
            }
        )

    notes = [
        "Rows count only cycles made entirely of unit states. A non-unit state "
        "maps to b, so a cycle through one is the cycle of b's component, "
        "and that component also absorbs every non-unit state."
    ]
    for r in rows:
        if r["full"] != r["units_only"]:
            cyc = "; ".join("(" + " -> ".join(map(str, c)) + ")" for c in r["excluded"])
            notes.append(
                f"e={r['e']}: a naive count of all cycles gives {_hist_text(r['full'])}; "
                f"the excluded cycle {cyc} contains a non-unit state"
            )
    first = rows[0]
    fp_full, fp_units = first["full"].get(1, 0), first["units_only"].get(1, 0)
    if fp_full != fp_units:
        loops = [c[0] for c in first["excluded"] if len(c) == 1]
        notes.append(
            f"e=1 fixed points: {fp_full} in a naive count versus {fp_units} in the table; "
            f"the extra self-loop at {', '.join(map(str, loops))} is a non-unit state "
            "(b is itself a non-unit here, so it maps to itself)"
        )

    lines = [f"Cycles of length T for a={ns.a}, b={ns.b}, p={ns.p} (unit cycles only)"]
    lines += [f"e={r['e']}: {_hist_text(r['units_only'])}" for r in rows]
    lines += [f"note: {n}" for n in notes]
    result = {
        "rows": [
            {
                "e": r["e"],
                "units_only": _hist_json(r["units_only"]),
                "full": _hist_json(r["full"]),
                "excluded_cycles": [list(c) for c in r["excluded"]],
            }
            for r in rows
        ],
        "notes": notes,
    }
    return Output("\n".join(lines), result)


def _add_common(sp, need_e=True, budget=False):
    sp.add_argument("--p", type=int, required=True)
    if need_e:
        sp.add_argument("--e", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    if budget:
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inversive",
        description="Cycle structure of the inversive generator x -> a/x + b over Z/p^eZ.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", help="closed-form case label and structure")
    _add_common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("enumerate", help="exact structure by enumerating every state")
    _add_common(sp, budget=True)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="compare prediction against enumeration")
    _add_common(sp, budget=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("period", help="pre-period and least period of one orbit")
    _add_common(sp)
    sp.add_argument("--x0", type=int, required=True)
    sp.add_argument("--predicted", action="store_true", help="also print the closed-form value")
    sp.set_defaults(func=cmd_period)

    sp = sub.add_parser("seq", help="print x0 .. x_{n-1}, one per line")
    _add_common(sp)
    sp.add_argument("--x0", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_seq)

    sp = sub.add_parser("dot", help="functional graph in Graphviz DOT form")
    _add_common(sp, budget=True)
    sp.add_argument("--out", help="write DOT here instead of stdout")
    sp.set_defaults(func=cmd_dot)

    sp = sub.add_parser("table", help="cycle-length counts for e = 1..emax")
    _add_common(sp, need_e=False, budget=True)
    sp.add_argument("--emax", type=int, required=True)
    sp.set_defaults(func=cmd_table)
    return parser


def _envelope(ns, result) -> dict:
    if ns.command == "table":
        params = {"p": ns.p, "emax": ns.emax, "a": ns.a, "b": ns.b}
    else:
        q = ns.p**ns.e
        params = {"p": ns.p, "e": ns.e, "a": ns.a % q, "b": ns.b % q}
    return {"command": ns.command, "params": params, "result": result, "schema_version": SCHEMA_VERSION}


def main(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    func: Callable = ns.func
    try:
        out = func(ns)
        side_file = None
        if isinstance(out, tuple):
            out, side_file = out
        rendered = (
            json.dumps(_envelope(ns, out.result), ensure_ascii=False)
            if ns.format == "json"
            else out.text
        )
    except InvalidParameters as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except BudgetExceeded as exc:
        stderr.write(f"error: budget exceeded: {exc}\n")
        return EXIT_BUDGET

    if side_file is not None:
        with open(ns.out, "w") as fh:
            fh.write(side_file)
    stdout.write(rendered + "\n")
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
