"""Command-line interface.

    mindswap solve    --target "(a1 a2)" --m 2
    mindswap verify   --plan plan.txt
    mindswap oracle   --target "(a1 a2)(a3 a4)" --m 3 --d 1
    mindswap infinite shift3 | star --k 2 | finitary2 --sigma "(a1 a2)(a3 a4 a5)"

Plan documents go to stdout; summaries and diagnostics go to stderr.  Exit
codes: 0 ok, 1 verification failed, 2 parse error, 3 unsolvable, 4 node
budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import infinite, plandoc
from .keeler import solve_two_machine
from .machine import in_machine_group, solve_m_machine
from .optimal3 import lower_bound, solve_three_machine_optimal
from .oracle import OracleBudgetError, RuleSet, search_min_plan, verify_plan
from .perm import ParseError, Permutation, format_cycles, insider, outsider, parse_cycles

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_UNSOLVABLE = 3
EXIT_BUDGET = 4


def _parse_target(text: str) -> Permutation:
    target = parse_cycles(text)
    if any(e.is_outsider for e in target.support()):
        raise ValueError("target must move insiders only")
    return target


def _report(target: Permutation, doc: plandoc.PlanDocument) -> bool:
    rules = RuleSet(m=doc.m, outsiders=doc.outsiders, require_outsider_per_move=bool(doc.outsiders))
    report = verify_plan(target, list(doc.moves), rules)
    print(f"steps: {report.step_count}", file=sys.stderr)
    print(f"product-ok: {str(report.product_ok).lower()}", file=sys.stderr)
    if report.rule_violations:
        for index, kind in report.rule_violations:
            print(f"violation: index={index} kind={kind}", file=sys.stderr)
    else:
        print("rule-violations: none", file=sys.stderr)
    return report.clean


def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        target = _parse_target(args.target)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as err:
        print(f"unsolvable: {err}", file=sys.stderr)
        return EXIT_UNSOLVABLE
    solver = args.solver or ("keeler2" if args.m == 2 else "general_m")
    valid = {"keeler2": args.m == 2, "optimal3": args.m == 3, "general_m": args.m >= 3}
    if not valid[solver]:
        print(f"solver {solver} is incompatible with machine size {args.m}", file=sys.stderr)
        return EXIT_PARSE

    if solver == "keeler2":
        plan = solve_two_machine(target)
        doc = plandoc.PlanDocument(
            m=2,
            target=format_cycles(target),
            outsiders=plan.outsiders,
            moves=plan.moves,
            solver=solver,
        )
    elif solver == "optimal3":
        if target.parity() != 0:
            print("unsolvable: odd permutation is not reachable on a 3-machine", file=sys.stderr)
            return EXIT_UNSOLVABLE
        plan3 = solve_three_machine_optimal(target)
        doc = plandoc.PlanDocument(
            m=3,
            target=format_cycles(target),
            outsiders=(outsider(1),),
            moves=plan3.moves,
            solver=solver,
            lower_bound=lower_bound(target),
        )
    else:
        if not in_machine_group(target, args.m):
            print(
                f"unsolvable: odd permutation is not a product of {args.m}-cycles",
                file=sys.stderr,
            )
            return EXIT_UNSOLVABLE
        mplan = solve_m_machine(target, args.m)
        doc = plandoc.PlanDocument(
            m=args.m,
            target=format_cycles(target),
            outsiders=mplan.outsider_pool,
            moves=mplan.moves,
            solver=solver,
        )
    sys.stdout.write(plandoc.dumps(doc))
    return EXIT_OK if _report(target, doc) else EXIT_VERIFY_FAILED


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        text = sys.stdin.read() if args.plan == "-" else open(args.plan).read()
        doc = plandoc.loads(text)
        target = _parse_target(args.target if args.target is not None else doc.target)
    except (OSError, ParseError, plandoc.PlanFormatError, ValueError) as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_PARSE
    rules = RuleSet(
        m=doc.m,
        outsiders=doc.outsiders,
        require_outsider_per_move=not args.no_outsider_rule and bool(doc.outsiders),
        require_distinct_supports=not args.no_distinct_rule,
    )
    report = verify_plan(target, list(doc.moves), rules)
    print(f"steps: {report.step_count}")
    print(f"product-ok: {str(report.product_ok).lower()}")
    if report.rule_violations:
        for index, kind in report.rule_violations:
            print(f"violation: index={index} kind={kind}")
    else:
        print("rule-violations: none")
    print(f"verdict: {'clean' if report.clean else 'failed'}")
    return EXIT_OK if report.clean else EXIT_VERIFY_FAILED


def _cmd_oracle(args: argparse.Namespace) -> int:
    try:
        target = _parse_target(args.target)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as err:
        print(f"unsolvable: {err}", file=sys.stderr)
        return EXIT_UNSOLVABLE
    pool = tuple(outsider(i) for i in range(1, args.d + 1))
    try:
        rules = RuleSet(m=args.m, outsiders=pool)
        plan = search_min_plan(target, rules, args.max_steps, node_budget=args.node_budget)
    except OracleBudgetError as err:
        print(f"budget exceeded: {err}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    if plan is None:
        print(f"no plan within {args.max_steps} steps", file=sys.stderr)
        return EXIT_UNSOLVABLE
    print(f"minimal-steps: {len(plan)}", file=sys.stderr)
    doc = plandoc.PlanDocument(
        m=args.m,
        target=format_cycles(target),
        outsiders=pool,
        moves=tuple(plan),
        solver="oracle",
    )
    sys.stdout.write(plandoc.dumps(doc))
    return EXIT_OK


def _print_swaps(swaps: list[infinite.TailMap], horizon: int) -> None:
    for i, swap in enumerate(swaps, start=1):
        print(f"step {i} ({infinite.classify(swap)}):")
        for row in infinite.step_table(swap, horizon):
            print(f"  {row}")
        print(f"  cycle form: {infinite.cycle_string(swap, horizon)}")
        print(f"  dom: {swap.dom()}")
        print(f"  img: {swap.img()}")
        print(f"  participants: {swap.participants()}")


def _cmd_infinite(args: argparse.Namespace) -> int:
    horizon = args.horizon
    if args.mode == "shift3":
        swaps = infinite.invert_shift_three_step()
        expected = infinite.inverse_shift_map()
    elif args.mode == "star":
        if args.k < 2:
            print("error: --k must be at least 2", file=sys.stderr)
            return EXIT_PARSE
        cycle = list(range(1, args.k + 1))
        swaps = infinite.invert_cycle_two_step(cycle)
        target = Permutation.from_cycle([insider(i) for i in cycle])
        expected = infinite.finitary_extension(target.inverse())
    else:
        try:
            sigma = _parse_target(args.sigma)
        except (ParseError, ValueError) as err:
            print(f"parse error: {err}", file=sys.stderr)
            return EXIT_PARSE
        swaps = infinite.invert_finitary_two_step(sigma)
        if not swaps:
            print("identity target: empty plan")
            return EXIT_OK
        expected = infinite.finitary_extension(sigma.inverse())
    _print_swaps(swaps, horizon)
    ok = infinite.compose_all(swaps) == expected
    print(f"composition check: {'ok' if ok else 'MISMATCH'} (target inverse, canonical form)")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="mindswap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a target and print a plan document")
    p_solve.add_argument("--target", required=True, help="cycle notation, e.g. '(a1 a2)(a3 a4)'")
    p_solve.add_argument("--m", type=int, required=True, help="machine size")
    p_solve.add_argument("--solver", choices=["keeler2", "general_m", "optimal3"])
    p_solve.set_defaults(func=_cmd_solve)

    p_verify = sub.add_parser("verify", help="check a plan document against the rules")
    p_verify.add_argument("--plan", required=True, help="plan file path, or - for stdin")
    p_verify.add_argument("--target", help="override the document's target")
    p_verify.add_argument("--no-outsider-rule", action="store_true")
    p_verify.add_argument("--no-distinct-rule", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_oracle = sub.add_parser("oracle", help="exhaustive shortest-plan search")
    p_oracle.add_argument("--target", required=True)
    p_oracle.add_argument("--m", type=int, required=True)
    p_oracle.add_argument("--d", type=int, default=1, help="number of outsiders")
    p_oracle.add_argument("--max-steps", type=int, default=8)
    p_oracle.add_argument("--node-budget", type=int, default=10**8)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_inf = sub.add_parser("infinite", help="infinite-machine demonstrations")
    p_inf.add_argument("mode", choices=["shift3", "star", "finitary2"])
    p_inf.add_argument("--sigma", default="", help="finitary target for finitary2")
    p_inf.add_argument("--k", type=int, default=2, help="cycle length for star")
    p_inf.add_argument("--horizon", type=int, default=4, help="tail rows before the ellipsis")
    p_inf.set_defaults(func=_cmd_infinite)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
