#!/usr/bin/env python3

"""
pp.pddl

Type: package

Description: the syntax tree, the reader and the canonical printer of the
    PDDL 2.1 fragment used by the planner
"""

from .model import *
from .parser import parse_domain, parse_problem, load_domain, load_problem
from .printer import print_domain, print_problem, requirements
