#!/usr/bin/env python3

"""
pp.pddl.parser

Type: module

Description: reads domain and problem files of the PDDL 2.1 fragment
    used by the planner

Functions:
    - parse_domain(text, file)
    - parse_problem(text, dom, file)
    - load_domain(path, encoding)
    - load_problem(path, dom, encoding)


Supported fragment
==================

Domains may declare ':types', ':constants', ':predicates', ':functions'
and any number of ':durative-action' blocks. ':requirements' is read and
ignored. Conditions are conjunctions of timed literals and numeric
comparisons:

(at start (< (pleasure ?c) 0.5))
(over all (robot_at ?v ?wp))
(at end (not (holding ?v ?o)))

Effects are conjunctions of timed add, delete and numeric effects,
'over all' is rejected in effect position:

(at end (increase (pleasure ?c) (* ?duration 0.01)))

The duration is either '(= ?duration v)' or '(<= ?duration v)'.
Keywords are case-insensitive, identifiers keep their case, ';' starts a
comment that runs to the end of the line.
"""
from __future__ import annotations as _annotations

import logging as _logging
from typing import (Dict as _Dict,
                    List as _List,
                    Optional as _Optional,
                    Tuple as _Tuple)

import pyparsing as _pp

from ..constants import (ROOT_TYPE as _ROOT_TYPE,
                         DURATION_VAR as _DURATION_VAR,
                         FIXED as _FIXED,
                         UPPER_BOUNDED as _UPPER_BOUNDED)
from ..exceptions import PddlSyntaxError as _PddlSyntaxError, SemanticError as _SemanticError
from ..type_hints import _path
from ..utils import read_text as _read_text
from .model import (TypedName, Signature, DurationConstraint, Literal, Constant,
                    FluentRef, DurationVar, BinaryOp, Comparison, AddEffect,
                    DeleteEffect, NumericEffect, TimeSpec, DurativeAction, Domain,
                    Problem, NumericExpr, Condition, Effect)

_log = _logging.getLogger(__name__)

_COMPARISONS = ("<", "<=", ">", ">=", "=")
_ARITHMETIC = ("+", "-", "*", "/")
_NUMERIC_EFFECTS = ("increase", "decrease", "assign")


class _Atom:
    __slots__ = "value", "line", "col"

    def __init__(self, value, line, col):
        self.value = value
        self.line = line
        self.col = col

    @property
    def kw(self) -> str:
        return self.value.lower()

    def __repr__(self):
        return f"_Atom({self.value!r})"


class _SList:
    __slots__ = "items", "line", "col"

    def __init__(self, items, line, col):
        self.items = items
        self.line = line
        self.col = col

    def head(self) -> str:
        if self.items and isinstance(self.items[0], _Atom):
            return self.items[0].kw
        return ""

    def __repr__(self):
        return f"_SList({list(self.items)!r})"


def _make_grammar():
    atom = _pp.Regex(r"[^()\s;]+")
    atom.set_parse_action(lambda s, loc, t: _Atom(t[0], _pp.lineno(loc, s), _pp.col(loc, s)))

    sexpr = _pp.Forward()
    s_list = _pp.Suppress("(") + _pp.Group(_pp.ZeroOrMore(atom | sexpr)) + _pp.Suppress(")")
    s_list.set_parse_action(
        lambda s, loc, t: _SList(tuple(t[0]), _pp.lineno(loc, s), _pp.col(loc, s))
    )
    sexpr <<= s_list

    document = sexpr + _pp.StringEnd()
    document.ignore(_pp.Suppress(";" + _pp.rest_of_line))
    return document


_document = _make_grammar()


def _unbalanced(text: str) -> _Optional[_Tuple[int, int, str]]:
    """
    Line, column and message of the parenthesis that leaves the text
    unbalanced, None when every '(' is closed

    A '(' still open when a later line starts at the same indentation or
    to its left is taken as the one missing its ')'.
    """
    stack = []  # line, column, indentation of the line
    suspect = None
    in_string = False
    for l_no, line in enumerate(text.splitlines(), 1):
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        if suspect is None and not in_string and stripped and stripped[0] not in ");":
            for opened in reversed(stack):
                if opened[2] >= indent:
                    suspect = opened
                    break

        for i, char in enumerate(line):
            if in_string:
                if char == '"': in_string = False
            elif char == '"':
                in_string = True
            elif char == ";":
                break
            elif char == "(":
                stack.append((l_no, i + 1, indent))
            elif char == ")":
                if not stack:
                    return l_no, i + 1, "unexpected ')'"
                stack.pop()

    if not stack:
        return None
    l_no, col, _ = suspect or stack[-1]
    return l_no, col, "'(' is never closed"


def _read_tree(text: str, file: str) -> _SList:
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    try:
        return _document.parse_string(text, parse_all=True)[0]
    except _pp.ParseBaseException as e:
        position = _unbalanced(text)
        if position is not None:
            raise _PddlSyntaxError(*position, file) from None
        raise _PddlSyntaxError(e.lineno, e.col, e.msg, file) from None


class _Reader:
    """Shared helpers of the domain and problem readers"""
    def __init__(self, file):
        self.file = file

    def syntax(self, node, msg):
        return _PddlSyntaxError(node.line, node.col, msg, self.file)

    def semantic(self, node, msg):
        return _SemanticError(node.line, node.col, msg, self.file)

    def s_list(self, node, what) -> _SList:
        if not isinstance(node, _SList):
            raise self.syntax(node, f"expected {what}, found '{node.value}'")
        return node

    def atom(self, node, what) -> _Atom:
        if not isinstance(node, _Atom):
            raise self.syntax(node, f"expected {what}, found a list")
        return node

    def typed_list(self, items, untyped_default) -> _List[_Tuple[_Atom, _Optional[str]]]:
        """'a b - t c' -> [(a, t), (b, t), (c, untyped_default)]"""
        result = []
        pending = []
        i = 0
        while i < len(items):
            node = self.atom(items[i], "a name")
            if node.value == "-":
                if not pending:
                    raise self.syntax(node, "unexpected '-' with no names before it")
                if i + 1 >= len(items):
                    raise self.syntax(node, "expected a type after '-'")
                t = self.atom(items[i + 1], "a type").value
                result.extend((p, t) for p in pending)
                pending = []
                i += 2
                continue
            pending.append(node)
            i += 1
        result.extend((p, untyped_default) for p in pending)
        return result

    @staticmethod
    def number(node) -> _Optional[float]:
        if not isinstance(node, _Atom):
            return None
        try:
            return float(node.value)
        except ValueError:
            return None

    def conjunction(self, node) -> tuple:
        """'(and a b)' -> (a, b), '()' -> (), anything else -> (node,)"""
        node = self.s_list(node, "a list")
        if not node.items:
            return ()
        if node.head() == "and":
            return node.items[1:]
        return (node,)


class _DomainReader(_Reader):
    def __init__(self, file):
        super().__init__(file)
        self.types: _List[_Tuple[str, _Optional[str]]] = []
        self.constants: _Dict[str, str] = {}
        self.predicates: _Dict[str, Signature] = {}
        self.functions: _Dict[str, Signature] = {}
        self.parents: _Dict[str, _Optional[str]] = {_ROOT_TYPE: None}

    def is_subtype(self, sub, sup) -> bool:
        seen = set()
        while sub is not None and sub not in seen:
            if sub == sup: return True
            seen.add(sub)
            sub = self.parents.get(sub)
        return False

    def check_type(self, node, t):
        if t not in self.parents:
            raise self.semantic(node, f"type '{t}' is not declared")

    def read(self, tree) -> Domain:
        tree = self.s_list(tree, "'(define ...)'")
        if tree.head() != "define" or len(tree.items) < 2:
            raise self.syntax(tree, "expected '(define (domain <name>) ...)'")

        header = self.s_list(tree.items[1], "'(domain <name>)'")
        if header.head() != "domain" or len(header.items) != 2:
            raise self.syntax(header, "expected '(domain <name>)'")
        name = self.atom(header.items[1], "the domain name").value

        sections = [self.s_list(s, "a domain section") for s in tree.items[2:]]
        by_kind = {":requirements": [], ":types": [], ":constants": [],
                   ":predicates": [], ":functions": [], ":durative-action": []}
        for section in sections:
            kind = section.head()
            if kind not in by_kind:
                raise self.syntax(section, f"unsupported domain section '{kind or '('}'")
            by_kind[kind].append(section)

        # Declarations are read first so that actions may follow them in any order
        for section in by_kind[":types"]: self.read_types(section)
        for section in by_kind[":constants"]: self.read_constants(section)
        for section in by_kind[":predicates"]:
            self.read_signatures(section, self.predicates, "predicate")
        for section in by_kind[":functions"]:
            self.read_signatures(section, self.functions, "function")

        actions = []
        names = set()
        for section in by_kind[":durative-action"]:
            action = self.read_action(section)
            if action.name in names:
                raise self.semantic(section, f"action '{action.name}' is declared twice")
            names.add(action.name)
            actions.append(action)

        return Domain(
            name=name,
            types=tuple(self.types),
            constants=tuple(TypedName(n, t) for n, t in self.constants.items()),
            predicates=tuple(self.predicates.values()),
            functions=tuple(self.functions.values()),
            actions=tuple(actions)
        )

    def read_types(self, section):
        pairs = self.typed_list(section.items[1:], None)
        for node, parent in pairs:
            if any(node.value == t for t, _ in self.types) or \
               node.value in self.parents and node.value != _ROOT_TYPE:
                raise self.semantic(node, f"type '{node.value}' is declared twice")
            self.types.append((node.value, parent))
            self.parents[node.value] = parent
        for node, parent in pairs:
            if parent is not None:
                self.check_type(node, parent)

    def read_constants(self, section):
        for node, t in self.typed_list(section.items[1:], _ROOT_TYPE):
            self.check_type(node, t)
            if node.value in self.constants:
                raise self.semantic(node, f"constant '{node.value}' is declared twice")
            self.constants[node.value] = t

    def read_signatures(self, section, table, what):
        items = list(section.items[1:])
        i = 0
        while i < len(items):
            node = items[i]
            # ':functions' entries may carry a '- number' result type
            if isinstance(node, _Atom) and node.value == "-":
                if i + 1 >= len(items) or self.atom(items[i + 1], "'number'").kw != "number":
                    raise self.syntax(node, "only '- number' functions are supported")
                i += 2
                continue
            decl = self.s_list(node, f"a {what} declaration")
            if not decl.items:
                raise self.syntax(decl, f"empty {what} declaration")
            name = self.atom(decl.items[0], f"the {what} name").value
            params = []
            for p, t in self.typed_list(decl.items[1:], _ROOT_TYPE):
                self.check_type(p, t)
                params.append(TypedName(p.value, t))
            if name in table:
                raise self.semantic(decl, f"{what} '{name}' is declared twice")
            table[name] = Signature(name, tuple(params))
            i += 1

    def read_action(self, section) -> DurativeAction:
        items = section.items
        if len(items) < 2:
            raise self.syntax(section, "expected the action name")
        name = self.atom(items[1], "the action name").value

        fields = {}
        i = 2
        while i < len(items):
            key = self.atom(items[i], "an action keyword")
            if key.kw not in (":parameters", ":duration", ":condition", ":effect"):
                raise self.syntax(key, f"unexpected keyword '{key.value}' in action '{name}'")
            if i + 1 >= len(items):
                raise self.syntax(key, f"expected a value after '{key.value}'")
            if key.kw in fields:
                raise self.syntax(key, f"'{key.value}' given twice in action '{name}'")
            fields[key.kw] = items[i + 1]
            i += 2

        params = {}
        param_list = []
        if ":parameters" in fields:
            node = self.s_list(fields[":parameters"], "the parameter list")
            for p, t in self.typed_list(node.items, _ROOT_TYPE):
                if not p.value.startswith("?"):
                    raise self.syntax(p, f"parameter '{p.value}' must start with '?'")
                if p.value in params or p.value.lower() == _DURATION_VAR:
                    raise self.semantic(p, f"parameter '{p.value}' is declared twice")
                self.check_type(p, t)
                params[p.value] = t
                param_list.append(TypedName(p.value, t))

        if ":duration" not in fields:
            raise self.syntax(section, f"action '{name}' has no ':duration'")
        duration = self.read_duration(fields[":duration"])

        conditions = []
        if ":condition" in fields:
            for node in self.conjunction(fields[":condition"]):
                conditions.append(self.read_timed_condition(node, params))

        effects = []
        if ":effect" in fields:
            for node in self.conjunction(fields[":effect"]):
                effects.append(self.read_timed_effect(node, params))
        self.check_contradictions(section, effects)

        return DurativeAction(name, tuple(param_list), duration, tuple(conditions), tuple(effects))

    def read_duration(self, node) -> DurationConstraint:
        node = self.s_list(node, "a duration constraint")
        items = node.items
        if len(items) != 3 or node.head() not in (_FIXED, _UPPER_BOUNDED) or \
           not isinstance(items[1], _Atom) or items[1].kw != _DURATION_VAR:
            raise self.syntax(node, "expected '(= ?duration <n>)' or '(<= ?duration <n>)'")
        value = self.number(items[2])
        if value is None:
            raise self.syntax(items[2], "the duration bound must be a number")
        if value <= 0:
            raise self.semantic(items[2], "the duration bound must be positive")
        return DurationConstraint(node.head(), value)

    def time_spec(self, node, allowed) -> _Tuple[TimeSpec, _SList]:
        node = self.s_list(node, "a timed condition or effect")
        words = [i.kw for i in node.items[:2] if isinstance(i, _Atom)]
        if len(node.items) != 3 or len(words) != 2:
            raise self.syntax(node, "expected '(at start ...)', '(at end ...)' or '(over all ...)'")
        try:
            spec = TimeSpec(" ".join(words))
        except ValueError:
            raise self.syntax(node, f"unknown time specifier '{' '.join(words)}'") from None
        if spec not in allowed:
            raise self.syntax(node, f"'{spec.value}' is not allowed here")
        return spec, self.s_list(node.items[2], "a condition or effect")

    def read_timed_condition(self, node, params):
        spec, body = self.time_spec(node, tuple(TimeSpec))
        return spec, self.read_condition(body, params)

    def read_timed_effect(self, node, params):
        spec, body = self.time_spec(node, (TimeSpec.AT_START, TimeSpec.AT_END))
        return spec, self.read_effect(body, params)

    def read_condition(self, node, params, ground=False) -> Condition:
        head = node.head()
        if head in _COMPARISONS:
            if len(node.items) != 3:
                raise self.syntax(node, f"'{head}' takes two arguments")
            return Comparison(head,
                              self.read_expr(node.items[1], params, False, ground),
                              self.read_expr(node.items[2], params, False, ground))
        if head in _NUMERIC_EFFECTS:
            raise self.syntax(node, f"effect '{head}' used as a condition")
        if head == "not":
            if len(node.items) != 2:
                raise self.syntax(node, "'not' takes one argument")
            inner = self.s_list(node.items[1], "a literal")
            lit = self.read_literal(inner, params, ground)
            return Literal(lit.predicate, lit.args, False)
        if head in ("at", "over"):
            raise self.syntax(node, "time specifiers cannot be nested")
        return self.read_literal(node, params, ground)

    def read_effect(self, node, params) -> Effect:
        head = node.head()
        if head in _NUMERIC_EFFECTS:
            if len(node.items) != 3:
                raise self.syntax(node, f"'{head}' takes a fluent and an amount")
            fluent = self.read_fluent(self.s_list(node.items[1], "a fluent"), params, False)
            return NumericEffect(head, fluent, self.read_expr(node.items[2], params, True, False))
        if head in _COMPARISONS:
            raise self.syntax(node, f"comparison '{head}' used as an effect")
        if head == "not":
            if len(node.items) != 2:
                raise self.syntax(node, "'not' takes one argument")
            return DeleteEffect(self.read_literal(self.s_list(node.items[1], "a literal"), params))
        return AddEffect(self.read_literal(node, params))

    def argument_type(self, node, params, ground) -> str:
        value = node.value
        if value.startswith("?"):
            if value.lower() == _DURATION_VAR:
                raise self.semantic(node, "?duration can only appear in numeric effects")
            if ground:
                raise self.semantic(node, f"variable '{value}' in a ground expression")
            if value not in params:
                raise self.semantic(node, f"variable '{value}' is not a parameter")
            return params[value]
        if value in params:
            return params[value]
        if value not in self.constants:
            raise self.semantic(node, f"unknown object '{value}'")
        return self.constants[value]

    def check_args(self, node, sig, args, params, ground, what):
        if len(args) != sig.arity:
            raise self.semantic(node, f"{what} '{sig.name}' takes {sig.arity} "
                                      f"argument(s), {len(args)} given")
        for arg, p in zip(args, sig.params):
            t = self.argument_type(arg, params, ground)
            if not self.is_subtype(t, p.type):
                raise self.semantic(arg, f"'{arg.value}' of type '{t}' does not match "
                                         f"'{p.type}' in {what} '{sig.name}'")

    def read_literal(self, node, params, ground=False) -> Literal:
        if not node.items:
            raise self.syntax(node, "empty literal")
        name = self.atom(node.items[0], "a predicate name")
        sig = self.predicates.get(name.value)
        if sig is None:
            raise self.semantic(name, f"predicate '{name.value}' is not declared")
        args = [self.atom(a, "an argument") for a in node.items[1:]]
        self.check_args(node, sig, args, params, ground, "predicate")
        return Literal(name.value, tuple(a.value for a in args))

    def read_fluent(self, node, params, ground) -> FluentRef:
        if not node.items:
            raise self.syntax(node, "empty fluent")
        name = self.atom(node.items[0], "a function name")
        sig = self.functions.get(name.value)
        if sig is None:
            raise self.semantic(name, f"function '{name.value}' is not declared")
        args = [self.atom(a, "an argument") for a in node.items[1:]]
        self.check_args(node, sig, args, params, ground, "function")
        return FluentRef(name.value, tuple(a.value for a in args))

    def read_expr(self, node, params, allow_duration, ground) -> NumericExpr:
        if isinstance(node, _Atom):
            if node.kw == _DURATION_VAR:
                if not allow_duration:
                    raise self.semantic(node, "?duration can only appear in numeric effects")
                return DurationVar()
            value = self.number(node)
            if value is None:
                raise self.syntax(node, f"expected a number or a fluent, found '{node.value}'")
            return Constant(value)

        head = node.head()
        if head in _ARITHMETIC:
            if len(node.items) != 3:
                raise self.syntax(node, f"'{head}' takes exactly two operands")
            left = self.read_expr(node.items[1], params, allow_duration, ground)
            right = self.read_expr(node.items[2], params, allow_duration, ground)
            if head == "/" and isinstance(right, Constant) and right.value == 0:
                raise self.semantic(node.items[2], "division by the constant zero")
            return BinaryOp(head, left, right)
        return self.read_fluent(node, params, ground)

    def check_contradictions(self, section, effects):
        added = {(spec, e.literal.key) for spec, e in effects if isinstance(e, AddEffect)}
        for spec, e in effects:
            if isinstance(e, DeleteEffect) and (spec, e.literal.key) in added:
                raise self.semantic(section, f"'{e.literal}' is both added and deleted "
                                             f"'{spec.value}'")


class _ProblemReader(_DomainReader):
    def __init__(self, dom, file):
        super().__init__(file)
        self.dom = dom
        self.parents.update(dom._parents)
        self.constants.update({c.name: c.type for c in dom.constants})
        self.predicates.update({p.name: p for p in dom.predicates})
        self.functions.update({f.name: f for f in dom.functions})

    def read(self, tree) -> Problem:
        tree = self.s_list(tree, "'(define ...)'")
        if tree.head() != "define" or len(tree.items) < 2:
            raise self.syntax(tree, "expected '(define (problem <name>) ...)'")

        header = self.s_list(tree.items[1], "'(problem <name>)'")
        if header.head() != "problem" or len(header.items) != 2:
            raise self.syntax(header, "expected '(problem <name>)'")
        name = self.atom(header.items[1], "the problem name").value

        domain_name = None
        objects = []
        facts = []
        fluents = []
        goal = []
        for section in tree.items[2:]:
            section = self.s_list(section, "a problem section")
            kind = section.head()
            if kind == ":domain":
                if len(section.items) != 2:
                    raise self.syntax(section, "expected '(:domain <name>)'")
                node = self.atom(section.items[1], "the domain name")
                domain_name = node.value
                if domain_name != self.dom.name:
                    raise self.semantic(node, f"the problem is for domain '{domain_name}', "
                                              f"not '{self.dom.name}'")
            elif kind == ":requirements":
                continue
            elif kind == ":objects":
                for node, t in self.typed_list(section.items[1:], _ROOT_TYPE):
                    self.check_type(node, t)
                    if node.value in self.constants:
                        raise self.semantic(node, f"object '{node.value}' is declared twice")
                    self.constants[node.value] = t
                    objects.append(TypedName(node.value, t))
            elif kind == ":init":
                self.read_init(section, facts, fluents)
            elif kind == ":goal":
                if len(section.items) != 2:
                    raise self.syntax(section, "expected '(:goal <condition>)'")
                for node in self.conjunction(section.items[1]):
                    goal.append(self.read_condition(self.s_list(node, "a goal condition"), {}, True))
            else:
                raise self.syntax(section, f"unsupported problem section '{kind or '('}'")

        if domain_name is None:
            raise self.syntax(tree, "the problem has no '(:domain <name>)'")

        return Problem(name, domain_name, tuple(objects), tuple(facts), tuple(fluents), tuple(goal))

    def read_init(self, section, facts, fluents):
        assigned = set()
        for node in section.items[1:]:
            node = self.s_list(node, "an initial fact")
            if node.head() == "=":
                if len(node.items) != 3:
                    raise self.syntax(node, "expected '(= (<function> ...) <number>)'")
                fluent = self.read_fluent(self.s_list(node.items[1], "a fluent"), {}, True)
                value = self.number(node.items[2])
                if value is None:
                    raise self.syntax(node.items[2], "initial fluent values must be numbers")
                if fluent.key in assigned:
                    raise self.semantic(node, f"fluent '{fluent}' is assigned twice")
                assigned.add(fluent.key)
                fluents.append((fluent, value))
            elif node.head() == "not":
                raise self.syntax(node, "negative initial facts are not supported")
            else:
                facts.append(self.read_literal(node, {}, True))


def parse_domain(text: str, file: str = "<string>") -> Domain:
    """
    parse_domain(text, file='<string>')

    Type: function

    Description: parses the text of a domain file

    Args:
        'text' (str): the domain file contents
        'file' (str): the name shown in error messages

    Raises:
        PddlSyntaxError: the text is not in the supported grammar
        SemanticError: an undeclared name, a duplicate or an arity or
            type mismatch

    Return type: Domain
    """
    dom = _DomainReader(file).read(_read_tree(text, file))
    _log.debug("parsed domain '%s' with %d action(s)", dom.name, len(dom.actions))
    return dom


def parse_problem(text: str, dom: Domain, file: str = "<string>") -> Problem:
    """
    parse_problem(text, dom, file='<string>')

    Type: function

    Description: parses the text of a problem file against its domain

    Args:
        'text' (str): the problem file contents
        'dom' (Domain): the domain the problem is written for
        'file' (str): the name shown in error messages

    Return type: Problem
    """
    prob = _ProblemReader(dom, file).read(_read_tree(text, file))
    _log.debug("parsed problem '%s' with %d object(s)", prob.name, len(prob.objects))
    return prob


def load_domain(path: _path, encoding: str = "utf-8") -> Domain:
    return parse_domain(_read_text(path, encoding), str(path))


def load_problem(path: _path, dom: Domain, encoding: str = "utf-8") -> Problem:
    return parse_problem(_read_text(path, encoding), dom, str(path))
