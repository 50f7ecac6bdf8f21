#!/usr/bin/env python3


class PddlError(Exception):
    """Base class of the errors raised while reading a PDDL file"""
    def __init__(self, line, column, msg, file="<string>"):
        self.line = line
        self.column = column
        self.msg = msg
        self.file = file
        super().__init__(f"File \"{file}\", line {line}, column {column} - {msg}")


class PddlSyntaxError(PddlError):
    """Exception raised when the text is not a well-formed PDDL fragment"""
    pass


class SemanticError(PddlError):
    """
    Exception raised when the text is well-formed but refers to something
    undeclared, repeats a name or uses the wrong arity
    """
    pass


class PlanSyntaxError(Exception):
    """Exception raised when a line of a plan file cannot be parsed"""
    def __init__(self, l_no, msg, file="<string>"):
        self.line = l_no
        super().__init__(f"File \"{file}\", line {l_no} - {msg}")


class MissingFluent(KeyError):
    """Exception raised when reading a fluent that was never assigned"""
    def __init__(self, fluent):
        self.fluent = fluent
        super().__init__(f"fluent '{fluent}' has no value")

    def __str__(self):
        return self.args[0]


class DivisionByZero(ZeroDivisionError):
    """Exception raised when a numeric expression divides by zero"""
    pass


class UnboundDuration(ValueError):
    """Exception raised when ?duration is evaluated without a duration"""
    pass


class EmptyAgendaError(Exception):
    """Exception raised when advancing a state that has no running actions"""
    pass


class UnclassifiedEmotion(ValueError):
    """Exception raised when a strategy is asked for an unclassified state"""
    def __init__(self, pad):
        self.pad = pad
        super().__init__(f"no strategy effect is defined for {pad}")


class InvalidPlan(Exception):
    """Exception raised when simulating a plan that does not validate"""
    def __init__(self, report):
        self.report = report
        first = report.violations[0].describe() if report.violations else "goal unsatisfied"
        super().__init__(f"the plan is not valid: {first}")
