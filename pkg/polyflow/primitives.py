# -*- coding: utf-8 -*-
"""Named fillers over the integers, for programs like factorial."""
import logging

from .core import Bot, Poly
from .core.failure import UnknownPrimitive
from .operad import IntObject
from .para import ADD, DEC, IF, MUL, ONE
from .semantics import Elem, PrimitiveFiller


logger = logging.getLogger(__name__)


class Registry(object):
    """A mapping of names to primitive fillers, which is also used as a
    decorator taking the box the function fills:

    @registry(IntObject(Poly.of(['N']), Poly.of(['N'])))
    def dec(e):
        ...
    """
    def __init__(self):
        self.registry = {}

    def __call__(self, box, name=None):
        def register(f):
            key = name or f.__name__
            self.registry[key] = PrimitiveFiller(key, box, f)
            return f
        return register

    def __getitem__(self, name):
        try:
            return self.registry[name]
        except KeyError:
            raise UnknownPrimitive("no primitive named %r" % (name,))

    def __contains__(self, name):
        return name in self.registry

    def names(self):
        return sorted(self.registry)


registry = Registry()


@registry(ONE)
def const1(e):
    return Elem(0, (1,))


@registry(IF)
def if_le1(e):
    """Leaves through the constant summand when ``N <= 1``."""
    n, = e.values
    return Elem(1, ()) if n <= 1 else Elem(0, (n,))


@registry(MUL)
def mul(e):
    a, b = e.values
    return Elem(0, (a * b,))


@registry(DEC)
def dec(e):
    n, = e.values
    return Elem(0, (n - 1,))


@registry(ADD)
def add(e):
    a, b = e.values
    return Elem(0, (a + b,))


@registry(IntObject(Poly.of(['x']), Poly.of(['x1', 'x2'])))
def dup(e):
    x, = e.values
    return Elem(0, (x, x))


@registry(IntObject(Poly.of(['a', 'b']), Poly.of(['b', 'a'])))
def swap(e):
    a, b = e.values
    return Elem(0, (b, a))


@registry(IntObject(Poly.of(['x']), Poly.one()))
def discard(e):
    return Elem(0, ())


@registry(IntObject(Poly.of(['x']), Poly.of(['x'])))
def nowhere(e):
    return Bot


def primitives_registry():
    return registry


def factorial_fillers():
    """Fillers for `para.factorial_program`, in box order."""
    return [registry[name] for name in ('const1', 'if_le1', 'mul', 'dec')]


def bypass_fillers():
    return [registry['dec'], registry['add']]
