#!/usr/bin/env python3

import os as _os

from .type_hints import _path


def read_text(path: _path, encoding: str = "utf-8") -> str:
    """
    read_text(path, encoding='utf-8')

    Type: function

    Description: given a path, it opens the file and returns its contents

    Args:
        'path' (str, os.PathLike): the path of the file
        'encoding' (str): default UTF-8, encoding used to open the file
    """
    with open(path, encoding=encoding) as f:
        return f.read()


def write_text(path: _path, text: str, encoding: str = "utf-8") -> str:
    """
    write_text(path, text, encoding='utf-8')

    Type: function

    Description: writes text to a file, creating the missing directories,
        and returns the path as a string

    Args:
        'path' (str, os.PathLike): the path of the file
        'text' (str): the new contents of the file
        'encoding' (str): default UTF-8, encoding used to write the file
    """
    path = _os.fspath(path)
    parent = _os.path.dirname(path)
    if parent: _os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding=encoding) as f:
        f.write(text)
    return path
