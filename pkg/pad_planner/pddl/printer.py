#!/usr/bin/env python3

"""
pp.pddl.printer

Type: module

Description: writes domains and problems back as canonical PDDL text,
    parse(print(x)) == x for every tree the parser accepts

Functions:
    - print_domain(dom)
    - print_problem(prob)
    - requirements(dom)
"""
from __future__ import annotations as _annotations

from typing import Iterable as _Iterable, List as _List, Optional as _Optional, Tuple as _Tuple

from ..mathf import fmt_number as _fmt_number
from .model import (Constant, BinaryOp, Comparison,
                    Literal, NumericEffect, Domain,
                    Problem, TypedName, NumericExpr, Condition, Effect)

_INDENT = "  "


def _expr(e: NumericExpr) -> str:
    if isinstance(e, Constant): return _fmt_number(e.value)
    if isinstance(e, BinaryOp): return f"({e.op} {_expr(e.left)} {_expr(e.right)})"
    # FluentRef and DurationVar print themselves
    return str(e)


def _condition(c: Condition) -> str:
    if isinstance(c, Comparison):
        return f"({c.op} {_expr(c.lhs)} {_expr(c.rhs)})"
    return str(c)


def _effect(e: Effect) -> str:
    if isinstance(e, NumericEffect):
        return f"({e.op} {e.fluent} {_expr(e.amount)})"
    return str(e)


def _grouped(pairs: _Iterable[_Tuple[str, _Optional[str]]]) -> str:
    """[(a, t), (b, t), (c, None)] -> 'a b - t c', keeping declaration order"""
    parts = []
    group: _List[str] = []
    current = None
    for name, t in pairs:
        if group and t != current:
            parts.append(" ".join(group) + (f" - {current}" if current is not None else ""))
            group = []
        group.append(name)
        current = t
    if group:
        parts.append(" ".join(group) + (f" - {current}" if current is not None else ""))
    return " ".join(parts)


def _typed(names: _Iterable[TypedName]) -> str:
    return _grouped((n.name, n.type) for n in names)


def _type_sections(types) -> _List[list]:
    """Names without a parent must end a section, or the next '- t' would claim them"""
    sections = [[]]
    for name, parent in types:
        current = sections[-1]
        if current and current[-1][1] is None and parent is not None:
            sections.append([])
        sections[-1].append((name, parent))
    return sections


def requirements(dom: Domain) -> _List[str]:
    """
    requirements(dom)

    Type: function

    Description: the requirement flags the content of a domain needs,
        the flags given in the source file are not kept

    Args:
        'dom' (Domain): the domain to inspect

    Return type: list[str]
    """
    reqs = []
    if dom.types or any(p.type != "object" for s in (*dom.predicates, *dom.functions)
                        for p in s.params):
        reqs.append(":typing")
    if dom.functions:
        reqs.append(":fluents")
    if dom.actions:
        reqs.append(":durative-actions")
    if any(not a.duration.is_fixed for a in dom.actions):
        reqs.append(":duration-inequalities")
    if any(isinstance(c, Literal) and not c.positive for a in dom.actions for _, c in a.conditions):
        reqs.append(":negative-preconditions")
    return reqs


def print_domain(dom: Domain) -> str:
    """
    print_domain(dom)

    Type: function

    Description: the canonical text of a domain

    Args:
        'dom' (Domain): the domain to print

    Return type: str
    """
    lines = [f"(define (domain {dom.name})"]
    reqs = requirements(dom)
    if reqs:
        lines.append(f"{_INDENT}(:requirements {' '.join(reqs)})")
    if dom.types:
        lines.extend(f"{_INDENT}(:types {_grouped(s)})" for s in _type_sections(dom.types))
    if dom.constants:
        lines.append(f"{_INDENT}(:constants {_typed(dom.constants)})")

    for title, table in ((":predicates", dom.predicates), (":functions", dom.functions)):
        if not table: continue
        lines.append(f"{_INDENT}({title}")
        for sig in table:
            params = _typed(sig.params)
            lines.append(f"{_INDENT * 2}({sig.name}{' ' + params if params else ''})")
        lines.append(f"{_INDENT})")

    for a in dom.actions:
        lines.append(f"{_INDENT}(:durative-action {a.name}")
        lines.append(f"{_INDENT * 2}:parameters ({_typed(a.parameters)})")
        lines.append(f"{_INDENT * 2}:duration ({a.duration.op} ?duration "
                     f"{_fmt_number(a.duration.bound)})")
        if a.conditions:
            lines.append(f"{_INDENT * 2}:condition (and")
            lines.extend(f"{_INDENT * 3}({spec.value} {_condition(c)})" for spec, c in a.conditions)
            lines.append(f"{_INDENT * 2})")
        if a.effects:
            lines.append(f"{_INDENT * 2}:effect (and")
            lines.extend(f"{_INDENT * 3}({spec.value} {_effect(e)})" for spec, e in a.effects)
            lines.append(f"{_INDENT * 2})")
        lines.append(f"{_INDENT})")

    if len(lines) == 1:
        return lines[0] + ")\n"
    lines.append(")")
    return "\n".join(lines) + "\n"


def print_problem(prob: Problem) -> str:
    """
    print_problem(prob)

    Type: function

    Description: the canonical text of a problem, initial facts come
        before the fluent assignments

    Args:
        'prob' (Problem): the problem to print

    Return type: str
    """
    lines = [f"(define (problem {prob.name})",
             f"{_INDENT}(:domain {prob.domain_name})"]
    if prob.objects:
        lines.append(f"{_INDENT}(:objects {_typed(prob.objects)})")
    if prob.init_facts or prob.init_fluents:
        lines.append(f"{_INDENT}(:init")
        lines.extend(f"{_INDENT * 2}{lit}" for lit in prob.init_facts)
        lines.extend(f"{_INDENT * 2}(= {f} {_fmt_number(v)})" for f, v in prob.init_fluents)
        lines.append(f"{_INDENT})")
    lines.append(f"{_INDENT}(:goal (and")
    lines.extend(f"{_INDENT * 2}{_condition(c)}" for c in prob.goal)
    lines.append(f"{_INDENT}))")
    lines.append(")")
    return "\n".join(lines) + "\n"
