# -*- coding: utf-8 -*-
"""Loose maps of ``Int(FinSet*)``: the set-level shadow of wiring diagrams.

A pair ``(A-, A+)`` of finite sets is a `SetPair`; a loose map
``P -|-> Q`` is a partial map ``Q- + P+ -> Q+ + P-`` over tagged coproducts.
"""
import logging

from .case_classes import CaseClass
from .core import Bot
from .core.failure import BlockMismatch, CodMismatch, ShapeMismatch
from .core.sets import EMPTY, FinPartialMap, FinSet, coproduct
from .trace import trace_set


logger = logging.getLogger(__name__)


class SetPair(CaseClass):
    _fields = ('minus', 'plus')

    def dual(self):
        return SetPair(self.plus, self.minus)

    def __add__(self, other):
        return pair_sum(self, other)


UNIT_PAIR = SetPair(EMPTY, EMPTY)


def pair_sum(*pairs):
    return SetPair(coproduct(*[p.minus for p in pairs]),
                   coproduct(*[p.plus for p in pairs]))


def split_pair(pair):
    """``(A, B)`` from a two-fold `pair_sum`."""
    try:
        return (SetPair(pair.minus.part(0), pair.plus.part(0)),
                SetPair(pair.minus.part(1), pair.plus.part(1)))
    except (TypeError, ValueError):
        raise BlockMismatch("%r is not a sum of two pairs" % (pair,))


class LooseMap(CaseClass):
    _fields = ('dom', 'cod', 'map')

    def _check(self):
        if self.map.dom != coproduct(self.cod.minus, self.dom.plus) or \
           self.map.cod != coproduct(self.cod.plus, self.dom.minus):
            raise ShapeMismatch("a loose map needs Q- + P+ -> Q+ + P-")

    def then(self, other):
        return loose_compose(self, other)


def loose_id(pair):
    return LooseMap(pair, pair, FinPartialMap.tabulate(
        coproduct(pair.minus, pair.plus), coproduct(pair.plus, pair.minus),
        lambda x: (1 - x[0], x[1])))


def loose_compose(f, g):
    """``f ; g`` by tracing out the middle ``Q-``."""
    if f.cod != g.dom:
        raise CodMismatch("loose maps do not meet in the middle")
    p, q, r = f.dom, f.cod, g.cod

    def through_g(y):
        z = g.map(y)
        if z is Bot or z[0] == 0:
            return z if z is Bot else (0, (0, z[1]))
        return (1, z[1])

    def through_f(y):
        z = f.map(y)
        if z is Bot:
            return Bot
        if z[0] == 0:
            return through_g((1, z[1]))
        return (0, (1, z[1]))

    def image(x):
        k, e = x
        if k == 1:
            return through_f((0, e))
        j, inner = e
        return through_g((0, inner)) if j == 0 else through_f((1, inner))

    looped = FinPartialMap.tabulate(
        coproduct(coproduct(r.minus, p.plus), q.minus),
        coproduct(coproduct(r.plus, p.minus), q.minus), image)
    return LooseMap(p, r, trace_set(looped))


def loose_tensor(*fs):
    def retag(k, z):
        return z if z is Bot else (z[0], (k, z[1]))

    def image(x):
        side, (k, e) = x
        return retag(k, fs[k].map((side, e)))

    dom = pair_sum(*[f.dom for f in fs])
    cod = pair_sum(*[f.cod for f in fs])
    return LooseMap(dom, cod, FinPartialMap.tabulate(
        coproduct(cod.minus, dom.plus), coproduct(cod.plus, dom.minus),
        image))


def loose_transpose(f):
    """``A + B -|-> C`` becomes ``A -|-> B* + C``."""
    a, b = split_pair(f.dom)
    c = f.cod
    cod = pair_sum(b.dual(), c)

    def out(z):
        if z is Bot:
            return Bot
        if z[0] == 0:
            return (0, (1, z[1]))
        k, e = z[1]
        return (1, e) if k == 0 else (0, (0, e))

    def image(x):
        if x[0] == 1:
            return out(f.map((1, (0, x[1]))))
        k, e = x[1]
        return out(f.map((1, (1, e)) if k == 0 else (0, e)))

    return LooseMap(a, cod, FinPartialMap.tabulate(
        coproduct(cod.minus, a.plus), coproduct(cod.plus, a.minus), image))


def filler_map(pair, fn):
    """The loose map ``(0, 0) -|-> P`` of a partial function
    ``P- -> P+``."""
    def image(x):
        y = fn(x[1])
        return Bot if y is Bot or y not in pair.plus else (0, y)
    return LooseMap(UNIT_PAIR, pair, FinPartialMap.tabulate(
        coproduct(pair.minus, EMPTY), coproduct(pair.plus, EMPTY), image))


def filler_function(f):
    """The partial function ``P- -> P+`` of a loose map
    ``(0, 0) -|-> P``."""
    if f.dom.minus or f.dom.plus:
        raise ShapeMismatch("fillers start from the unit pair")
    return FinPartialMap.tabulate(
        f.cod.minus, f.cod.plus,
        lambda x: _untag(f.map((0, x))))


def _untag(z):
    return z if z is Bot else z[1]


__all__ = ['SetPair', 'UNIT_PAIR', 'pair_sum', 'split_pair', 'LooseMap',
           'loose_id', 'loose_compose', 'loose_tensor', 'loose_transpose',
           'filler_map', 'filler_function']
