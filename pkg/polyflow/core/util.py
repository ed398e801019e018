# -*- coding: utf-8 -*-
"""Index arithmetic for blocks laid end to end, and a singleton helper."""
import itertools


def singleton(cls):
    """Replaces a class by its only instance."""
    obj = cls()
    obj.__name__ = cls.__name__
    return obj


def offsets(sizes):
    """Start index of each block when blocks of the given sizes are laid
    end to end."""
    return tuple(itertools.accumulate([0] + list(sizes)))[:-1]


def locate(sizes, index):
    """Turns a flat index into ``(block, local index)``."""
    for block, (start, size) in enumerate(zip(offsets(sizes), sizes)):
        if start <= index < start + size:
            return block, index - start
    raise IndexError(index)


def invert(perm):
    """Inverse of a permutation given as a tuple of indices."""
    res = [None] * len(perm)
    for i, j in enumerate(perm):
        res[j] = i
    return tuple(res)
