#!/usr/bin/env python3
r"""
PAD Planner

This package plans for a robot that tidies toys while keeping the
children around it in a good mood. It reads and writes a fragment of
PDDL 2.1 with durative actions and numeric fluents, searches for timed
plans, validates them and simulates how the emotions of the children
change along a plan.

Classes:
    - TypedName          (pp.pddl.model.TypedName)
    - Signature          (pp.pddl.model.Signature)
    - DurationConstraint (pp.pddl.model.DurationConstraint)
    - Literal            (pp.pddl.model.Literal)
    - Constant           (pp.pddl.model.Constant)
    - FluentRef          (pp.pddl.model.FluentRef)
    - DurationVar        (pp.pddl.model.DurationVar)
    - BinaryOp           (pp.pddl.model.BinaryOp)
    - Comparison         (pp.pddl.model.Comparison)
    - AddEffect          (pp.pddl.model.AddEffect)
    - DeleteEffect       (pp.pddl.model.DeleteEffect)
    - NumericEffect      (pp.pddl.model.NumericEffect)
    - TimeSpec           (pp.pddl.model.TimeSpec)
    - DurativeAction     (pp.pddl.model.DurativeAction)
    - Domain             (pp.pddl.model.Domain)
    - Problem            (pp.pddl.model.Problem)

    - GroundAction (pp.grounding.GroundAction)

    - FluentValuation (pp.temporal_state.FluentValuation)
    - PadState        (pp.temporal_state.PadState)
    - PendingEnd      (pp.temporal_state.PendingEnd)
    - TimedState      (pp.temporal_state.TimedState)
    - ViolationKind   (pp.temporal_state.ViolationKind)
    - Violation       (pp.temporal_state.Violation)

    - TimedAction (pp.plan.TimedAction)
    - Plan        (pp.plan.Plan)

    - RelaxedTask   (pp.heuristic.RelaxedTask)
    - PlannerConfig (pp.planner.PlannerConfig)
    - SearchNode    (pp.planner.SearchNode)
    - Unsolvable    (pp.planner.Unsolvable)
    - Timeout       (pp.planner.Timeout)

    - Verdict          (pp.validator.Verdict)
    - ValidationReport (pp.validator.ValidationReport)
    - Sample           (pp.trajectory.Sample)
    - Trajectory       (pp.trajectory.Trajectory)

    - EmotionLabel (pp.emotion.EmotionLabel)
    - Strategy     (pp.emotion.Strategy)
    - RateVector   (pp.emotion.RateVector)
    - Thresholds   (pp.emotion.Thresholds)
    - DomainConfig (pp.emotion.DomainConfig)

Exceptions:
    - PddlError           (pp.exceptions.PddlError)
    - PddlSyntaxError     (pp.exceptions.PddlSyntaxError)
    - SemanticError       (pp.exceptions.SemanticError)
    - PlanSyntaxError     (pp.exceptions.PlanSyntaxError)
    - MissingFluent       (pp.exceptions.MissingFluent)
    - DivisionByZero      (pp.exceptions.DivisionByZero)
    - UnboundDuration     (pp.exceptions.UnboundDuration)
    - EmptyAgendaError    (pp.exceptions.EmptyAgendaError)
    - UnclassifiedEmotion (pp.exceptions.UnclassifiedEmotion)
    - InvalidPlan         (pp.exceptions.InvalidPlan)

Functions:
    - parse_domain  (pp.pddl.parser.parse_domain)
    - parse_problem (pp.pddl.parser.parse_problem)
    - load_domain   (pp.pddl.parser.load_domain)
    - load_problem  (pp.pddl.parser.load_problem)
    - print_domain  (pp.pddl.printer.print_domain)
    - print_problem (pp.pddl.printer.print_problem)

    - ground          (pp.grounding.ground)
    - type_extensions (pp.grounding.type_extensions)

    - initial_state       (pp.temporal_state.initial_state)
    - evaluate            (pp.temporal_state.evaluate)
    - holds               (pp.temporal_state.holds)
    - pad_state           (pp.temporal_state.pad_state)
    - apply_start         (pp.temporal_state.apply_start)
    - advance_to_next_end (pp.temporal_state.advance_to_next_end)
    - elapse_to           (pp.temporal_state.elapse_to)
    - skip_next_end       (pp.temporal_state.skip_next_end)

    - format_plan (pp.plan.format_plan)
    - parse_plan  (pp.plan.parse_plan)
    - load_plan   (pp.plan.load_plan)

    - heuristic           (pp.heuristic.heuristic)
    - plan                (pp.planner.plan)
    - plan_portfolio      (pp.planner.plan_portfolio)
    - candidate_durations (pp.planner.candidate_durations)

    - validate            (pp.validator.validate)
    - check_by_events     (pp.validator.check_by_events)
    - simulate_trajectory (pp.trajectory.simulate_trajectory)

    - classify           (pp.emotion.classify)
    - strategy_rates     (pp.emotion.strategy_rates)
    - expected_delta     (pp.emotion.expected_delta)
    - synthesize_domain  (pp.emotion.synthesize_domain)
    - synthesize_problem (pp.emotion.synthesize_problem)
    - write_benchmark    (pp.emotion.write_benchmark)

    - clamp     (pp.mathf.clamp)
    - clamp_pad (pp.mathf.clamp_pad)
    - fixed3    (pp.mathf.fixed3)

Constants:
    - PLEASURE, AROUSAL, DOMINANCE, PAD_FLUENTS
    - PAD_MIN, PAD_MAX
    - DEFAULT_EPSILON, DEFAULT_GRID_STEP, DEFAULT_TIMEOUT, DEFAULT_SEED
    - DEFAULT_CUT, DEFAULT_HARD_FLOOR, DEFAULT_DEGRADATION
    - EXIT_OK, EXIT_FAILURE, EXIT_USAGE

The chart of a trajectory is drawn by pp.draw.render_trajectory, which
is imported separately because it needs pygame.

'pp.plan' is the planning function, the plan file helpers are in the
pad_planner.plan module.
"""

__version__ = "0.1.0"

from .constants import *
from .exceptions import *
from .mathf import clamp, clamp_pad, fixed3
from .pddl import *
from .grounding import GroundAction, ground, type_extensions
from .temporal_state import *
from .plan import TimedAction, Plan, format_plan, parse_plan, load_plan
from .heuristic import RelaxedTask, heuristic
from .emotion import *
from .validator import Verdict, ValidationReport, validate, check_by_events
from .trajectory import Sample, Trajectory, simulate_trajectory
from .planner import *
