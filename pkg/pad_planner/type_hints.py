#!/usr/bin/env python3

from os import PathLike
from typing import Tuple, Union

_path = Union[str, PathLike]
_pad = Tuple[float, float, float]
_col_type = Union[Tuple[int, int, int], Tuple[int, int, int, int]]
_fact = Tuple[str, ...]
_fluent_key = Tuple[str, ...]
