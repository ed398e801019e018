# -*- coding: utf-8 -*-
"""Running wiring diagrams as programs.

Evaluating a polynomial at a domain ``X`` of values gives the set ``p(X)``
of elements: a summand (the control region) plus one value per direction
(the data). Inner boxes are filled with partial functions
``P-(X) -> P+(X)``; a diagram is then run either denotationally, by
composing loose maps of finite sets, or operationally, by pushing a token
through the body one routing at a time.
"""
import itertools
import logging

import polyflow
from .case_classes import CaseClass
from .core import Bot
from .core.failure import (BoxMismatch, DomainTooLarge, IllFormedElem,
                           ShapeMismatch)
from .core.sets import FinPartialMap, FinSet, coproduct
from .core.util import locate, offsets
from .core.walkers import CYCLE, FUEL, Walker
from .loose import (LooseMap, SetPair, filler_function, filler_map,
                    loose_compose)
from .operad import IntObject, int_sum, iota, kappa
from .para import ParaMorphism, scale


logger = logging.getLogger(__name__)


class Domain(CaseClass):
    """Values a direction can carry, by label.

    A tuple of values is a finite domain; ``None`` stands for all the
    integers. ``bindings`` overrides ``default`` for some labels.
    """
    _fields = ('default', 'bindings')
    _defaults = {'default': None, 'bindings': ()}

    def _check(self):
        for label, values in self.bindings:
            if values is not None and not isinstance(values, tuple):
                raise ShapeMismatch("domain of %r is not a tuple" % label)

    @classmethod
    def of(cls, default=None, **labels):
        return cls(_values(default),
                   sorted((k, _values(v)) for k, v in labels.items()))

    def values(self, label):
        for name, values in self.bindings:
            if name == label:
                return values
        return self.default

    def contains(self, label, value):
        values = self.values(label)
        if values is None:
            return isinstance(value, int)
        return value in values


def _values(v):
    return None if v is None else tuple(v)


INTEGERS = Domain()
POINT = Domain((0,))


class Elem(CaseClass):
    """An element of ``p(X)``: a summand index and one value per direction,
    in direction order."""
    _fields = ('position', 'values')
    _defaults = {'values': ()}

    def data(self, p):
        return dict(zip(p.summands[self.position].names, self.values))

    @classmethod
    def from_data(cls, p, position, data):
        try:
            names = p.dirs(position)
        except IndexError:
            raise IllFormedElem("%s has no summand %r" % (p, position))
        keys = [d.name for d in names]
        if sorted(keys) != sorted(data):
            raise IllFormedElem("summand %d of %s has directions %s, got %s"
                                % (position, p, keys, sorted(data)))
        return cls(position, tuple(data[k] for k in keys))

    def __str__(self):
        return 'Elem(%d, %r)' % (self.position, self.values)


def check_elem(p, e):
    if not isinstance(e, Elem) or not 0 <= e.position < len(p) or \
       len(e.values) != len(p.summands[e.position]):
        raise IllFormedElem("%r is not an element of %s" % (e, p))
    return e


def count_elements(p, domain):
    """``|p(X)|``, or None when it is infinite."""
    total = 0
    for s in p.summands:
        n = 1
        for label in s.labels:
            values = domain.values(label)
            if values is None:
                return None
            n *= len(values)
        total += n
    return total


def elements(p, domain):
    """``p(X)`` as a finite set, summand by summand."""
    n = count_elements(p, domain)
    if n is None:
        raise DomainTooLarge("%s has infinitely many elements" % p)
    if n > polyflow.max_domain_size:
        raise DomainTooLarge("%s has %d elements, more than %d" %
                             (p, n, polyflow.max_domain_size))
    return FinSet([Elem(i, values)
                   for i, s in enumerate(p.summands)
                   for values in itertools.product(
                       *[domain.values(label) for label in s.labels])])


def apply_kleisli(f, e):
    check_elem(f.dom, e)
    route = f.routes[e.position]
    if route is Bot:
        return Bot
    return Elem(route.target, tuple(e.values[k] for k in route.pull))


def _size(block):
    if isinstance(block, (list, tuple)):
        return sum(_size(b) for b in block)
    return len(block)


def _block_set(block, domain):
    if isinstance(block, (list, tuple)):
        return coproduct(*[_block_set(b, domain) for b in block])
    return elements(block, domain)


def _tag(block, e):
    if not isinstance(block, (list, tuple)):
        return e
    k, i = locate([_size(b) for b in block], e.position)
    return (k, _tag(block[k], Elem(i, e.values)))


def _untag(block, x):
    if not isinstance(block, (list, tuple)):
        return x
    k, inner = x
    e = _untag(block[k], inner)
    start = offsets([_size(b) for b in block])[k]
    return Elem(start + e.position, e.values)


def evaluate(f, domain, dom_block=None, cod_block=None):
    """The partial map ``dom(X) -> cod(X)`` of ``f``.

    A block given as a list of polynomials (nested as deep as needed) is
    evaluated as the tagged coproduct of its parts.
    """
    dom_block = f.dom if dom_block is None else dom_block
    cod_block = f.cod if cod_block is None else cod_block
    if _size(dom_block) != len(f.dom) or _size(cod_block) != len(f.cod):
        raise ShapeMismatch("the blocks do not cover the map")

    def image(x):
        y = apply_kleisli(f, _untag(dom_block, x))
        return y if y is Bot else _tag(cod_block, y)
    return FinPartialMap.tabulate(_block_set(dom_block, domain),
                                  _block_set(cod_block, domain), image)


def eval_loose(phi, domain, inner=None):
    """The loose map of finite sets of ``phi: P -|-> Q`` at ``X``.

    With ``inner``, a list of boxes summing to ``P``, the ``P`` side is the
    sum of the boxes' pairs rather than one flat pair.
    """
    q = phi.cod
    if inner is None:
        minus, plus = phi.dom.minus, phi.dom.plus
    else:
        if int_sum(*inner) != phi.dom:
            raise BoxMismatch("the boxes do not sum to the domain")
        minus = [p.minus for p in inner]
        plus = [p.plus for p in inner]
    m = evaluate(phi.map, domain, [q.minus, plus], [q.plus, minus])
    return LooseMap(SetPair(_block_set(minus, domain),
                            _block_set(plus, domain)),
                    SetPair(elements(q.minus, domain),
                            elements(q.plus, domain)),
                    m)


class Filler(object):
    """What fills an inner box: ``box`` and a partial function from
    elements of ``box.minus`` to elements of ``box.plus``."""

    def lift(self, m):
        return LiftedFiller(m, self)

    def as_map(self, domain):
        box = self.box
        cod = elements(box.plus, domain)

        def image(e):
            y = self(e)
            return y if y is Bot or y in cod else Bot
        return FinPartialMap.tabulate(elements(box.minus, domain), cod,
                                      image)

    def as_loose(self, domain):
        """The loose map ``(0, 0) -|-> box(X)``."""
        box = self.box
        return filler_map(SetPair(elements(box.minus, domain),
                                  elements(box.plus, domain)), self)


class TableFiller(Filler, CaseClass):
    """A finite table; inputs missing from it are undefined."""
    _fields = ('box', 'table')

    def _check(self):
        self._lookup = {}
        for e, y in self.table:
            check_elem(self.box.minus, e)
            if y is not Bot:
                check_elem(self.box.plus, y)
            if e in self._lookup:
                raise ShapeMismatch("%r appears twice in the table" % (e,))
            self._lookup[e] = y

    def __call__(self, e):
        return self._lookup.get(e, Bot)

    @classmethod
    def from_function(cls, box, fn, domain):
        return cls.from_map(box, FinPartialMap.tabulate(
            elements(box.minus, domain), elements(box.plus, domain),
            lambda e: _clip(fn(e), box, domain)))

    @classmethod
    def from_map(cls, box, pm):
        return cls(box, [(e, y) for e, y in zip(pm.dom.elements, pm.images)
                         if y is not Bot])


def _clip(y, box, domain):
    if y is Bot:
        return Bot
    check_elem(box.plus, y)
    labels = box.plus.summands[y.position].labels
    if all(domain.contains(l, v) for l, v in zip(labels, y.values)):
        return y
    return Bot


class PrimitiveFiller(Filler, CaseClass):
    """A named Python function over elements."""
    _fields = ('name', 'box', 'fn')

    def __call__(self, e):
        y = self.fn(e)
        return y if y is Bot else check_elem(self.box.plus, y)


class LiftedFiller(Filler, CaseClass):
    """``base`` scaled by ``bypass``: the bypass values ride along."""
    _fields = ('bypass', 'base')

    @property
    def box(self):
        return scale(self.bypass, self.base.box)

    def __call__(self, e):
        a, i = divmod(e.position, len(self.base.box.minus))
        k = len(self.bypass.summands[a])
        y = self.base(Elem(i, e.values[k:]))
        if y is Bot:
            return Bot
        return Elem(a * len(self.base.box.plus) + y.position,
                    e.values[:k] + y.values)


def _shape(box):
    return box.minus.shape(), box.plus.shape()


def program(diagram, fillers):
    """The plain diagram and one filler per box, lifted along bypasses."""
    fillers = list(fillers)
    if len(fillers) != len(diagram.inner):
        raise BoxMismatch("%d fillers for %d boxes" %
                          (len(fillers), len(diagram.inner)))
    if isinstance(diagram, ParaMorphism):
        fillers = [f if _shape(f.box) == _shape(p) else f.lift(m)
                   for f, m, p in zip(fillers, diagram.bypass,
                                      diagram.scaled())]
        diagram = diagram.as_diagram()
    for k, (f, p) in enumerate(zip(fillers, diagram.inner)):
        if _shape(f.box) != _shape(p):
            raise BoxMismatch("the filler of box %s has interface %s, not %s"
                              % (diagram.box_name(k), f.box, p))
    return diagram, fillers


def _box_step(inner, fillers):
    """The partial function ``sum P-(X) -> sum P+(X)`` of all fillers."""
    minus_sizes = [len(p.minus) for p in inner]
    plus_starts = offsets([len(p.plus) for p in inner])

    def step(e):
        k, i = locate(minus_sizes, e.position)
        y = fillers[k](Elem(i, e.values))
        if y is Bot:
            return Bot
        return Elem(plus_starts[k] + y.position, y.values)
    return step


def eval_denot(diagram, fillers, domain):
    """The partial map ``Q-(X) -> Q+(X)`` of a filled diagram, by
    composing its fillers with its body."""
    diagram, fillers = program(diagram, fillers)
    body = eval_loose(diagram.body, domain)
    filled = filler_map(body.dom, _box_step(diagram.inner, fillers))
    logger.debug('Evaluating %d boxes at %d entrances', len(fillers),
                 len(body.cod.minus))
    return filler_function(loose_compose(filled, body))


class Returned(CaseClass):
    _fields = ('value',)


class Undefined(CaseClass):
    pass


class FuelExhausted(CaseClass):
    pass


class Diverged(CaseClass):
    pass


OUTER = 'Outer'


class TrajectoryPoint(CaseClass):
    """A control region: ``box`` is an inner box index or None for the
    outer box, ``side`` is ``'in'`` or ``'out'``."""
    _fields = ('box', 'side', 'region')

    def name(self, names=()):
        if self.box is None:
            box = OUTER
        elif names:
            box = names[self.box]
        else:
            box = 'Box%d' % (self.box + 1)
        return '%s.%s%d' % (box, self.side, self.region + 1)


class RunResult(CaseClass):
    _fields = ('outcome', 'steps', 'trajectory')

    def names(self, names=()):
        return [p.name(names) for p in self.trajectory]


@Walker
def _token(state, body, boxes, n_out, n_in, minus_sizes, plus_starts,
           collect, stop, **kw):
    y = apply_kleisli(body, state)
    if y is Bot:
        stop()
        return Undefined()
    if y.position < n_out:
        collect(TrajectoryPoint(None, 'out', y.position))
        stop()
        return Returned(y)
    k, i = locate(minus_sizes, y.position - n_out)
    collect(TrajectoryPoint(k, 'in', i))
    out = boxes[k](Elem(i, y.values))
    if out is Bot:
        stop()
        return Undefined()
    collect(TrajectoryPoint(k, 'out', out.position))
    return Elem(n_in + plus_starts[k] + out.position, out.values)


def eval_operational(diagram, fillers, input, fuel=None,
                     detect_cycles=False):
    """Push ``input`` through the diagram, one body routing per step."""
    diagram, fillers = program(diagram, fillers)
    outer = diagram.outer
    check_elem(outer.minus, input)
    if fuel is None and not detect_cycles:
        fuel = polyflow.fuel_default
    walk = _token.run(input, fuel=fuel,
                      key=_state if detect_cycles else None,
                      body=diagram.body.map, boxes=fillers,
                      n_out=len(outer.plus), n_in=len(outer.minus),
                      minus_sizes=[len(p.minus) for p in diagram.inner],
                      plus_starts=offsets([len(p.plus)
                                           for p in diagram.inner]))
    if walk.status == CYCLE:
        outcome = Diverged()
    elif walk.status == FUEL:
        outcome = FuelExhausted()
    else:
        outcome = walk.state
    logger.debug('Run ended with %s after %d steps', outcome, walk.steps)
    start = TrajectoryPoint(None, 'in', input.position)
    return RunResult(outcome, walk.steps, (start,) + walk.collected)


def _state(e):
    return e


class _Recording(Filler):
    """``base``, noting the values of every defined output in ``seen``."""

    def __init__(self, base, seen):
        self.base = base
        self.seen = seen

    @property
    def box(self):
        return self.base.box

    def __call__(self, e):
        y = self.base(e)
        if y is not Bot:
            self.seen.update(y.values)
        return y


def run_domain(diagram, fillers, input, fuel=None):
    """The finite domain of the values a run from ``input`` carries.

    The body only moves values around, so these are the values of
    ``input`` and whatever the fillers hand back. Evaluating the diagram
    at this domain follows the same path as `eval_operational`.
    """
    seen = set(input.values)
    eval_operational(diagram, [_Recording(f, seen) for f in fillers], input,
                     fuel=polyflow.trajectory_max_steps if fuel is None
                     else fuel, detect_cycles=True)
    logger.debug('A run from %s carries %d values', input, len(seen))
    return Domain(tuple(sorted(seen, key=repr)))


def category_identity(a, domain):
    """The identity on ``a`` of the category of the evaluation algebra."""
    return TableFiller.from_map(IntObject(a, a),
                                eval_denot(iota(a), [], domain))


def category_compose(f, g, domain):
    """``f ; g`` in the category of the evaluation algebra."""
    a, b, c = f.box.minus, f.box.plus, g.box.plus
    if g.box.minus.shape() != b.shape():
        raise BoxMismatch("cannot compose %s with %s" % (f.box, g.box))
    pm = eval_denot(kappa(a, b, c), [f, g], domain)
    return TableFiller.from_map(IntObject(a, c), pm)
