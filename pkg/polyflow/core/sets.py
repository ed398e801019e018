# -*- coding: utf-8 -*-
"""Finite pointed sets: the ``FinSet*`` side of polyflow.

A partial map is stored as the image of each domain element, in domain
order, with `Bot` where it is undefined. Coproducts tag their elements with
the index of the summand they come from: ``coproduct(A, B)`` has elements
``(0, a)`` and ``(1, b)``.
"""
import logging

from ..case_classes import CaseClass
from . import Bot
from .failure import CodMismatch, ShapeMismatch


logger = logging.getLogger(__name__)


class FinSet(CaseClass):
    _fields = ('elements',)
    _defaults = {'elements': ()}

    def _check(self):
        self._index = {}
        for k, e in enumerate(self.elements):
            if e in self._index:
                raise ShapeMismatch("element %r repeats" % (e,))
            self._index[e] = k

    def __len__(self):
        return len(self.elements)

    def __contains__(self, e):
        return e in self._index

    def index(self, e):
        return self._index[e]

    def part(self, tag):
        """The summand with the given tag of a coproduct."""
        return FinSet([e for (k, e) in self.elements if k == tag])


EMPTY = FinSet(())
POINT = FinSet(('*',))


def coproduct(*sets):
    return FinSet([(k, e) for k, s in enumerate(sets) for e in s.elements])


class FinPartialMap(CaseClass):
    _fields = ('dom', 'cod', 'images')

    def _check(self):
        if len(self.images) != len(self.dom):
            raise ShapeMismatch("%d images for %d elements" %
                                (len(self.images), len(self.dom)))
        for x, y in zip(self.dom.elements, self.images):
            if y is not Bot and y not in self.cod:
                raise ShapeMismatch("%r maps outside the codomain: %r" %
                                    (x, y))

    @classmethod
    def tabulate(cls, dom, cod, fn):
        """Tabulates a Python function returning a codomain element or
        `Bot`."""
        return cls(dom, cod, [fn(x) for x in dom.elements])

    @classmethod
    def from_dict(cls, dom, cod, table):
        """Elements missing from ``table`` map to `Bot`."""
        return cls(dom, cod, [table.get(x, Bot) for x in dom.elements])

    def __call__(self, x):
        if x is Bot:
            return Bot
        return self.images[self.dom.index(x)]

    def as_dict(self):
        return dict(zip(self.dom.elements, self.images))

    def is_total(self):
        return all(y is not Bot for y in self.images)

    def defined(self):
        return FinSet([x for x, y in zip(self.dom.elements, self.images)
                       if y is not Bot])

    def then(self, other):
        return set_compose(self, other)


def set_identity(a):
    return FinPartialMap(a, a, a.elements)


def set_compose(f, *gs):
    for g in gs:
        if f.cod != g.dom:
            raise CodMismatch("cannot compose a map into %d elements with "
                              "one out of %d" % (len(f.cod), len(g.dom)))
        f = FinPartialMap(f.dom, g.cod, [g(y) for y in f.images])
    return f


def set_sum(*fs):
    """``f + g + ...`` on tagged coproducts."""
    def image(x):
        k, e = x
        y = fs[k](e)
        return Bot if y is Bot else (k, y)
    return FinPartialMap.tabulate(coproduct(*[f.dom for f in fs]),
                                  coproduct(*[f.cod for f in fs]), image)


def set_permute(sets, order):
    """``A_0 + ... + A_n -> A_order[0] + ... + A_order[n]``."""
    position = {b: t for t, b in enumerate(order)}
    return FinPartialMap.tabulate(
        coproduct(*sets), coproduct(*[sets[k] for k in order]),
        lambda x: (position[x[0]], x[1]))


def set_sym(a, b):
    return set_permute([a, b], (1, 0))


def set_inject(sets, k):
    return FinPartialMap.tabulate(sets[k], coproduct(*sets),
                                  lambda x: (k, x))


def set_copair(*fs):
    cod = fs[0].cod if fs else FinSet(())
    return FinPartialMap.tabulate(coproduct(*[f.dom for f in fs]), cod,
                                  lambda x: fs[x[0]](x[1]))


def set_fold(a, n=2):
    return set_copair(*[set_identity(a)] * n)


def set_bang(a):
    return FinPartialMap(FinSet(()), a, ())


def reassociate(a, b, c):
    """``(A + B) + C -> A + (B + C)`` on tagged elements."""
    def image(x):
        k, e = x
        if k == 1:
            return (1, (1, e))
        j, inner = e
        return (0, inner) if j == 0 else (1, (0, inner))
    return FinPartialMap.tabulate(coproduct(coproduct(a, b), c),
                                  coproduct(a, coproduct(b, c)), image)


class UnionFind(object):
    """Disjoint sets with path compression and union by size."""

    def __init__(self, elements=()):
        self.parent = {}
        self.size = {}
        for e in elements:
            self.add(e)

    def add(self, e):
        if e not in self.parent:
            self.parent[e] = e
            self.size[e] = 1

    def find(self, e):
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra

    def classes(self):
        """Members of each class, keyed by representative, in insertion
        order."""
        res = {}
        for e in self.parent:
            res.setdefault(self.find(e), []).append(e)
        return res
