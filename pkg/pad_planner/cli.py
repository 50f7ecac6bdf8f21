#!/usr/bin/env python3

"""
pp.cli

Type: module

Description: the pad-planner command

Functions:
    - main(argv)
    - build_parser()

Commands:
    gen        writes domain.pddl and problem.pddl of the benchmark
    plan       searches for a plan
    validate   checks a plan
    simulate   writes the trajectory of the children as CSV
    plot       draws the trajectory of the children
    ground     lists the ground actions or counts them
    classify   prints the initial emotion of every child

Plans, makespans and CSV go to standard output or to files, diagnostics
go to standard error. The exit code is 0 on success, 1 when a plan is
invalid or no plan was found and 2 on usage, reading or writing errors.
"""
from __future__ import annotations as _annotations

import argparse as _argparse
import logging as _logging
import sys as _sys
from collections import Counter as _Counter
from typing import List as _List, Optional as _Optional

from .constants import (DEFAULT_EPSILON, DEFAULT_TIMEOUT, DEFAULT_SEED, DEFAULT_GRID_STEP,
                        DEFAULT_DEGRADATION, DEFAULT_DT, EXIT_OK, EXIT_FAILURE, EXIT_USAGE)
from .emotion import DomainConfig, Thresholds, classify as _classify, write_benchmark as _write_benchmark
from .exceptions import (PddlError as _PddlError, PlanSyntaxError as _PlanSyntaxError,
                         InvalidPlan as _InvalidPlan, MissingFluent as _MissingFluent,
                         DivisionByZero as _DivisionByZero)
from .grounding import ground as _ground
from .mathf import fixed3 as _fixed3
from .pddl.parser import load_domain as _load_domain, load_problem as _load_problem
from .plan import Plan, format_plan as _format_plan, load_plan as _load_plan
from .planner import PlannerConfig, plan as _plan, plan_portfolio as _plan_portfolio
from .temporal_state import initial_state as _initial_state, pad_state as _pad_state
from .trajectory import children_of as _children_of, simulate_trajectory as _simulate_trajectory
from .utils import write_text as _write_text
from .validator import validate as _validate, check_by_events as _check_by_events


class _Formatter(_argparse.ArgumentDefaultsHelpFormatter, _argparse.RawDescriptionHelpFormatter):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise _argparse.ArgumentTypeError(f"'{text}' is not an integer") from None
    if value < 1:
        raise _argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise _argparse.ArgumentTypeError(f"'{text}' is not a number") from None
    if value <= 0:
        raise _argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _load(args):
    dom = _load_domain(args.domain)
    prob = _load_problem(args.problem, dom)
    return dom, prob


def _cmd_gen(args) -> int:
    cfg = DomainConfig(n_children=args.children, degradation_rate=args.degradation_rate)
    dom_path, prob_path = _write_benchmark(args.out, cfg, args.toys, seed=args.seed)
    print(dom_path, file=_sys.stderr)
    print(prob_path, file=_sys.stderr)
    return EXIT_OK


def _cmd_plan(args) -> int:
    dom, prob = _load(args)
    cfg = PlannerConfig(epsilon=args.epsilon, timeout=args.timeout,
                        duration_grid_step=args.grid_step, seed=args.seed)
    if args.portfolio > 1:
        result = _plan_portfolio(dom, prob, cfg, args.portfolio)
    else:
        result = _plan(dom, prob, cfg)

    if not isinstance(result, Plan):
        kind = type(result).__name__.lower()
        print(f"{kind}: {result.reason} after {result.expansions} expansions "
              f"({result.elapsed:.2f}s)", file=_sys.stderr)
        return EXIT_FAILURE

    text = _format_plan(result)
    if args.output is not None:
        _write_text(args.output, text)
    else:
        _sys.stdout.write(text)
    print(f"makespan {_fixed3(result.makespan)}")
    return EXIT_OK


def _cmd_validate(args) -> int:
    dom, prob = _load(args)
    plan = _load_plan(args.plan)
    actions = _ground(dom, prob)
    report = _validate(dom, prob, plan, args.epsilon, args.all_violations, actions)

    if args.cross_check:
        other = _check_by_events(dom, prob, plan, args.epsilon, actions)
        if other.valid != report.valid:
            print(f"cross-check disagrees: {other.summary()}", file=_sys.stderr)
            return EXIT_FAILURE

    if report.valid:
        print(report.summary())
        return EXIT_OK
    for v in report.violations:
        print(v.describe())
    return EXIT_FAILURE


def _trajectory(args):
    dom, prob = _load(args)
    plan = _load_plan(args.plan)
    return _simulate_trajectory(dom, prob, plan, args.dt, epsilon=args.epsilon)


def _cmd_simulate(args) -> int:
    trajectory = _trajectory(args)
    if args.csv is not None:
        trajectory.write_csv(args.csv)
    else:
        _sys.stdout.write(trajectory.to_csv())
    return EXIT_OK


def _cmd_plot(args) -> int:
    # pygame is only needed here
    from .draw import render_trajectory

    trajectory = _trajectory(args)
    render_trajectory(trajectory, args.out, (args.width, args.height), line_width=args.line_width)
    return EXIT_OK


def _cmd_ground(args) -> int:
    dom, prob = _load(args)
    actions = _ground(dom, prob)
    if args.count:
        counts = _Counter(a.schema_name for a in actions)
        for a in dom.actions:
            print(f"{a.name} {counts.get(a.name, 0)}")
        print(f"total {len(actions)}")
    else:
        for a in actions:
            print(a.name)
    return EXIT_OK


def _cmd_classify(args) -> int:
    dom, prob = _load(args)
    th = Thresholds(low_high_cut=args.cut)
    s = _initial_state(prob)
    for child in _children_of(prob):
        pad = _pad_state(s, child)
        print(f"{child} {pad} {_classify(tuple(pad), th).value}")
    return EXIT_OK


def _files(p, plan=False):
    p.add_argument("-d", "--domain", required=True, help="the PDDL domain file")
    p.add_argument("-p", "--problem", required=True, help="the PDDL problem file")
    if plan:
        p.add_argument("-P", "--plan", required=True, help="the plan file")


def _epsilon(p):
    p.add_argument("--epsilon", type=_positive_float, default=DEFAULT_EPSILON,
                   help="the smallest gap between two events, in seconds")


def build_parser() -> _argparse.ArgumentParser:
    parser = _argparse.ArgumentParser(prog="pad-planner", description=__doc__,
                                      formatter_class=_Formatter)
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for debugging output")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("gen", help="write the benchmark domain and problem",
                       formatter_class=_Formatter)
    p.add_argument("--children", type=_positive_int, default=3)
    p.add_argument("--toys", type=_positive_int, default=3)
    p.add_argument("--out", default=".", help="the output directory")
    p.add_argument("--degradation-rate", type=float, default=DEFAULT_DEGRADATION,
                   help="pleasure and arousal lost per second of a task action")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help="the seed of the PAD values of children after the third")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("plan", help="search for a plan", formatter_class=_Formatter)
    _files(p)
    p.add_argument("-o", "--output", help="the plan file, standard output when omitted")
    p.add_argument("--timeout", type=_positive_float, default=DEFAULT_TIMEOUT, help="in seconds")
    _epsilon(p)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--grid-step", type=_positive_float, default=DEFAULT_GRID_STEP,
                   help="the step of the durations tried for bounded actions")
    p.add_argument("--portfolio", type=_positive_int, default=1,
                   help="how many seeded searches to run concurrently")
    p.set_defaults(func=_cmd_plan)

    p = sub.add_parser("validate", help="check a plan", formatter_class=_Formatter)
    _files(p, plan=True)
    _epsilon(p)
    p.add_argument("--all-violations", action="store_true",
                   help="report every violation, skipping the failing steps")
    p.add_argument("--cross-check", action="store_true",
                   help="also check the plan by sorting every event")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("simulate", help="write the trajectory of the children",
                       formatter_class=_Formatter)
    _files(p, plan=True)
    p.add_argument("--csv", help="the CSV file, standard output when omitted")
    p.add_argument("--dt", type=_positive_float, default=DEFAULT_DT, help="the sample period")
    _epsilon(p)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("plot", help="draw the trajectory of the children",
                       formatter_class=_Formatter)
    _files(p, plan=True)
    p.add_argument("--out", default="trajectory.png", help="the image file")
    p.add_argument("--dt", type=_positive_float, default=DEFAULT_DT, help="the sample period")
    p.add_argument("--width", type=_positive_int, default=900)
    p.add_argument("--height", type=_positive_int, default=720)
    p.add_argument("--line-width", type=_positive_int, default=3,
                   help="the width of the lines of the children, in pixels")
    _epsilon(p)
    p.set_defaults(func=_cmd_plot)

    p = sub.add_parser("ground", help="list the ground actions", formatter_class=_Formatter)
    _files(p)
    p.add_argument("--count", action="store_true", help="print the counts per action")
    p.set_defaults(func=_cmd_ground)

    p = sub.add_parser("classify", help="print the initial emotion of every child",
                       formatter_class=_Formatter)
    _files(p)
    p.add_argument("--cut", type=float, default=Thresholds().low_high_cut)
    p.set_defaults(func=_cmd_classify)

    return parser


def _setup_logging(verbosity: int) -> None:
    level = _logging.WARNING
    if verbosity == 1: level = _logging.INFO
    elif verbosity > 1: level = _logging.DEBUG
    _logging.basicConfig(stream=_sys.stderr, level=level,
                         format="%(levelname)s %(name)s: %(message)s")


def main(argv: _Optional[_List[str]] = None) -> int:
    """
    main(argv=None)

    Type: function

    Description: runs the command line, the arguments are read from
        sys.argv when argv is None

    Return type: int
        the exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    _setup_logging(args.verbose)

    try:
        return args.func(args)
    except (_PddlError, _PlanSyntaxError, _MissingFluent, _DivisionByZero) as e:
        print(f"error: {e}", file=_sys.stderr)
        return EXIT_USAGE
    except _InvalidPlan as e:
        print(f"error: {e}", file=_sys.stderr)
        return EXIT_FAILURE
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=_sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    _sys.exit(main())
