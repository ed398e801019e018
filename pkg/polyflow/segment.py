# -*- coding: utf-8 -*-
"""Cells of ``IInt(FinSet*)`` and the segmentation of a cell.

A cell is a square with loose maps on top and bottom and tight maps (pairs
of total functions) on the sides; it exists when the square commutes.
Segmenting a cell whose left leg keeps the minus set and whose right leg
keeps the plus set factors it through a middle loose map that is as small
as possible. Each step of a control-flow trajectory is one such
segmentation: the marked element in the middle is the region control has
reached.
"""
import logging

import polyflow
from .case_classes import CaseClass
from .core import Bot, KleisliMap, Poly, Route, poly_sum
from .core.failure import (BoxMismatch, CodMismatch, IllFormedStart,
                           InvariantFailure, PreconditionViolated,
                           ShapeMismatch)
from .core.sets import (EMPTY, POINT, FinPartialMap, FinSet, UnionFind,
                        coproduct, set_compose, set_identity, set_sum)
from .core.walkers import CYCLE, FUEL, Walker
from .loose import (LooseMap, SetPair, UNIT_PAIR, loose_compose,
                    loose_tensor, loose_transpose, pair_sum)
from .operad import IntMorphism, IntObject, WiringDiagram, int_sum
from .semantics import (POINT as POINT_DOMAIN, Diverged, Elem,
                        FuelExhausted, Returned, TableFiller,
                        TrajectoryPoint, Undefined, elements, eval_loose,
                        program)


logger = logging.getLogger(__name__)


class TightMap(CaseClass):
    _fields = ('dom', 'cod', 'minus', 'plus')

    def _check(self):
        for part, f in (('minus', self.minus), ('plus', self.plus)):
            if f.dom != getattr(self.dom, part) or \
               f.cod != getattr(self.cod, part):
                raise ShapeMismatch("the %s map of a tight map does not "
                                    "join its endpoints" % part)
            if not f.is_total():
                raise ShapeMismatch("the %s map of a tight map is partial"
                                    % part)

    @classmethod
    def identity(cls, pair):
        return cls(pair, pair, set_identity(pair.minus),
                   set_identity(pair.plus))

    def then(self, other):
        if self.cod != other.dom:
            raise CodMismatch("tight maps do not meet")
        return TightMap(self.dom, other.cod,
                        set_compose(self.minus, other.minus),
                        set_compose(self.plus, other.plus))

    def keeps_minus(self):
        """In ``I-``: the minus map is an identity."""
        return self.minus == set_identity(self.dom.minus)

    def keeps_plus(self):
        """In ``I+``: the plus map is an identity."""
        return self.plus == set_identity(self.dom.plus)


def tight_sum(*ts):
    return TightMap(pair_sum(*[t.dom for t in ts]),
                    pair_sum(*[t.cod for t in ts]),
                    set_sum(*[t.minus for t in ts]),
                    set_sum(*[t.plus for t in ts]))


def tight_dual(t):
    return TightMap(t.dom.dual(), t.cod.dual(), t.plus, t.minus)


def factor_tight(t, order='-+'):
    """``t = first ; second`` with ``first`` in ``I-`` and ``second`` in
    ``I+`` (``order='-+'``), or the other way round (``'+-'``)."""
    if order == '-+':
        middle = SetPair(t.dom.minus, t.cod.plus)
        first = TightMap(t.dom, middle, set_identity(t.dom.minus), t.plus)
        second = TightMap(middle, t.cod, t.minus, set_identity(t.cod.plus))
    elif order == '+-':
        middle = SetPair(t.cod.minus, t.dom.plus)
        first = TightMap(t.dom, middle, t.minus, set_identity(t.dom.plus))
        second = TightMap(middle, t.cod, set_identity(t.cod.minus), t.plus)
    else:
        raise PreconditionViolated("unknown factorization order %r" %
                                   (order,))
    return first, second


class Cell(CaseClass):
    _fields = ('top', 'bottom', 'left', 'right')

    def _check(self):
        if self.left.dom != self.top.dom or \
           self.right.dom != self.top.cod or \
           self.left.cod != self.bottom.dom or \
           self.right.cod != self.bottom.cod:
            raise ShapeMismatch("the sides of the cell do not meet at the "
                                "corners")


def _down(right, left):
    """``right- + left+`` on ``B- + A+``."""
    return lambda z: (0, right.minus(z[1])) if z[0] == 0 \
        else (1, left.plus(z[1]))


def _up(right, left):
    """``right+ + left-`` on ``B+ + A-``."""
    def image(y):
        if y is Bot:
            return Bot
        return (0, right.plus(y[1])) if y[0] == 0 else (1, left.minus(y[1]))
    return image


def check_cell(c):
    """Whether ``(right- + left+) ; bottom = top ; (right+ + left-)``."""
    down = _down(c.right, c.left)
    up = _up(c.right, c.left)
    for z in c.top.map.dom.elements:
        if c.bottom.map(down(z)) != up(c.top.map(z)):
            return False
    return True


def paste_vertical(upper, lower):
    if upper.bottom != lower.top:
        raise CodMismatch("the cells do not share a loose map")
    return Cell(upper.top, lower.bottom, upper.left.then(lower.left),
                upper.right.then(lower.right))


def paste_horizontal(first, second):
    if first.right != second.left:
        raise CodMismatch("the cells do not share a tight map")
    return Cell(loose_compose(first.top, second.top),
                loose_compose(first.bottom, second.bottom),
                first.left, second.right)


def transpose_cell(c):
    """The cell of the transposed loose maps; the left legs must be sums
    of two tight maps."""
    left_a, left_b = _split_tight(c.left)
    return Cell(loose_transpose(c.top), loose_transpose(c.bottom), left_a,
                tight_sum(tight_dual(left_b), c.right))


def _split_tight(t):
    def part(f, k):
        return FinPartialMap.tabulate(f.dom.part(k), f.cod.part(k),
                                      lambda x: _same_tag(f((k, x)), k))
    try:
        return tuple(TightMap(SetPair(t.dom.minus.part(k),
                                      t.dom.plus.part(k)),
                              SetPair(t.cod.minus.part(k),
                                      t.cod.plus.part(k)),
                              part(t.minus, k), part(t.plus, k))
                     for k in (0, 1))
    except (TypeError, ValueError):
        raise ShapeMismatch("the tight map is not a sum of two")


def _same_tag(y, k):
    if y[0] != k:
        raise ShapeMismatch("the tight map mixes the summands")
    return y[1]


class Pushout(CaseClass):
    _fields = ('apex', 'in_a', 'in_b')


_BOTTOM = ('bot',)


def _class_name(members):
    return tuple(sorted(members, key=repr))


def pushout_star(f, g):
    """The pushout of ``A <- Z -> B`` in pointed sets, ``f`` partial and
    ``g`` total. Whatever is glued to the base point is sent to `Bot`;
    every other class is named by its sorted members."""
    if f.dom != g.dom:
        raise CodMismatch("the span has two different apexes")
    uf = UnionFind([('a', x) for x in f.cod.elements] +
                   [('b', y) for y in g.cod.elements] + [_BOTTOM])
    for z in f.dom.elements:
        fz = f(z)
        uf.union(('b', g(z)), _BOTTOM if fz is Bot else ('a', fz))
    names = {}
    apex = []
    for members in uf.classes().values():
        if _BOTTOM in members:
            name = Bot
        else:
            name = _class_name(members)
            apex.append(name)
        for x in members:
            names[x] = name
    logger.debug('Pushout of %d + %d elements has %d classes',
                 len(f.cod), len(g.cod), len(apex))
    apex = FinSet(sorted(apex, key=repr))
    return Pushout(apex,
                   FinPartialMap.tabulate(f.cod, apex,
                                          lambda x: names[('a', x)]),
                   FinPartialMap.tabulate(g.cod, apex,
                                          lambda y: names[('b', y)]))


class RSFactorization(CaseClass):
    _fields = ('r', 's', 'section')


def factor_rs(h):
    """``h = r ; s``: ``r`` restricts to where ``h`` is defined, ``s`` is
    total, and ``section`` splits ``r``."""
    x = h.defined()
    return RSFactorization(
        FinPartialMap.tabulate(h.dom, x,
                               lambda p: p if p in x else Bot),
        FinPartialMap.tabulate(x, h.cod, h),
        FinPartialMap.tabulate(x, h.dom, lambda p: p))


class Segmentation(CaseClass):
    _fields = ('upper', 'lower', 'middle', 'a2_minus', 'b2_plus')


class Factorization(CaseClass):
    _fields = ('upper', 'lower')


class CounterExample(CaseClass):
    _fields = ('reason',)


def _splits(cell, left_split, right_split):
    s1, s2 = left_split or factor_tight(cell.left, '-+')
    t1, t2 = right_split or factor_tight(cell.right, '+-')
    if not s1.keeps_minus():
        raise PreconditionViolated("the left leg must start in I-")
    if not t1.keeps_plus():
        raise PreconditionViolated("the right leg must start in I+")
    if s1.then(s2) != cell.left or t1.then(t2) != cell.right:
        raise PreconditionViolated("the splits do not compose to the legs")
    return s1, s2, t1, t2


def segment_cell(cell, left_split=None, right_split=None):
    """Factor ``cell`` through the smallest middle loose map.

    The top map and the ``I-``/``I+`` halves of the legs form a span whose
    pushout, cut down to where the bottom map is defined, is the middle.
    """
    if not check_cell(cell):
        raise PreconditionViolated("the cell does not commute")
    s1, s2, t1, t2 = _splits(cell, left_split, right_split)
    f, g = cell.top.map, cell.bottom.map
    a2_plus, b2_minus = s1.cod.plus, t1.cod.minus
    span = FinPartialMap.tabulate(f.dom, coproduct(b2_minus, a2_plus),
                                  _down(t1, s1))
    po = pushout_star(f, span)

    up = _up(cell.right, cell.left)
    down = _down(t2, s2)

    def induced(name):
        images = set()
        for side, x in name:
            images.add(up(x) if side == 'a' else g(down(x)))
        if len(images) != 1:
            raise InvariantFailure("the pushout class %r has images %r" %
                                   (name, images))
        return images.pop()

    h = FinPartialMap.tabulate(po.apex, g.cod, induced)
    rs = factor_rs(h)
    a2_minus = FinSet([x for x in rs.s.dom.elements if rs.s(x)[0] == 1])
    b2_plus = FinSet([x for x in rs.s.dom.elements if rs.s(x)[0] == 0])
    a2 = SetPair(a2_minus, a2_plus)
    b2 = SetPair(b2_minus, b2_plus)

    def middle_image(z):
        x = rs.r(po.in_b(z))
        if x is Bot:
            return Bot
        return (0, x) if x in b2_plus else (1, x)
    middle = LooseMap(a2, b2, FinPartialMap.tabulate(
        coproduct(b2_minus, a2_plus), coproduct(b2_plus, a2_minus),
        middle_image))

    def into_middle(x):
        return rs.r(po.in_a(x))

    a1, b1 = cell.top.dom, cell.top.cod
    upper = Cell(cell.top, middle,
                 TightMap(a1, a2,
                          FinPartialMap.tabulate(
                              a1.minus, a2_minus,
                              lambda a: into_middle((1, a))),
                          s1.plus),
                 TightMap(b1, b2, t1.minus,
                          FinPartialMap.tabulate(
                              b1.plus, b2_plus,
                              lambda b: into_middle((0, b)))))
    lower = Cell(middle, cell.bottom,
                 TightMap(a2, cell.bottom.dom,
                          FinPartialMap.tabulate(a2_minus, s2.cod.minus,
                                                 lambda x: rs.s(x)[1]),
                          s2.plus),
                 TightMap(b2, cell.bottom.cod, t2.minus,
                          FinPartialMap.tabulate(b2_plus, t2.cod.plus,
                                                 lambda x: rs.s(x)[1])))
    if not (check_cell(upper) and check_cell(lower) and
            paste_vertical(upper, lower) == cell):
        raise InvariantFailure("the segmentation does not paste back")
    return Segmentation(upper, lower, middle, a2_minus, b2_plus)


def universality_check(cell, alt, left_split=None, right_split=None):
    """The comparison cell from the segmentation of ``cell`` to the middle
    of ``alt``, or a `CounterExample` saying where that fails."""
    up_alt, low_alt = alt.upper, alt.lower
    if up_alt.top != cell.top or low_alt.bottom != cell.bottom or \
       up_alt.bottom != low_alt.top or not check_cell(up_alt) or \
       not check_cell(low_alt) or \
       paste_vertical(up_alt, low_alt) != cell:
        raise PreconditionViolated("the alternative is not a factorization "
                                   "of the cell")
    seg = segment_cell(cell, left_split, right_split)
    a2, b2 = seg.middle.dom, seg.middle.cod
    c2, d2 = up_alt.bottom.dom, up_alt.bottom.cod
    if c2.plus != a2.plus or d2.minus != b2.minus or \
       up_alt.left.plus != seg.upper.left.plus or \
       up_alt.right.minus != seg.upper.right.minus:
        raise PreconditionViolated("the alternative does not factor "
                                   "through the same split legs")
    cocone_a = _up(up_alt.right, up_alt.left)
    cocone_b = up_alt.bottom.map

    values = {}
    for x in seg.middle.cod.plus.elements + seg.middle.dom.minus.elements:
        images = set(cocone_a(m) if side == 'a' else cocone_b(m)
                     for side, m in x)
        if len(images) != 1:
            return CounterExample("class %r has images %r" % (x, images))
        values[x] = images.pop()

    def part(xs, tag):
        out = {}
        for x in xs.elements:
            y = values[x]
            if y is Bot or y[0] != tag:
                return None
            out[x] = y[1]
        return out

    minus = part(a2.minus, 1)
    plus = part(b2.plus, 0)
    if minus is None or plus is None:
        return CounterExample("the middle does not land in the alternative")
    psi = Cell(seg.middle, up_alt.bottom,
               TightMap(a2, c2, FinPartialMap.from_dict(a2.minus, c2.minus,
                                                        minus),
                        set_identity(a2.plus)),
               TightMap(b2, d2, set_identity(b2.minus),
                        FinPartialMap.from_dict(b2.plus, d2.plus, plus)))
    if not check_cell(psi):
        return CounterExample("the comparison square does not commute")
    if paste_vertical(seg.upper, psi) != up_alt:
        return CounterExample("the comparison does not restore the upper "
                              "cell")
    if paste_vertical(psi, low_alt) != seg.lower:
        return CounterExample("the comparison does not restore the lower "
                              "cell")
    return psi


class SetDiagram(CaseClass):
    """A wiring diagram of finite pointed sets: ``body`` is a loose map
    from the sum of the ``inner`` pairs to ``outer``."""
    _fields = ('inner', 'outer', 'body', 'names')
    _defaults = {'names': ()}

    def _check(self):
        if self.body.dom != pair_sum(*self.inner) or \
           self.body.cod != self.outer:
            raise BoxMismatch("the body does not wire the boxes into the "
                              "outer pair")


class Trajectory(CaseClass):
    _fields = ('outcome', 'points', 'steps')

    def names(self, names=()):
        return [p.name(names) for p in self.points]


_ENTERING = 'in'
_LEAVING = 'out'


def _nothing(pair):
    return TightMap(UNIT_PAIR, pair,
                    FinPartialMap(EMPTY, pair.minus, ()),
                    FinPartialMap(EMPTY, pair.plus, ()))


def _empty_top():
    return LooseMap(UNIT_PAIR, UNIT_PAIR, FinPartialMap(
        coproduct(EMPTY, EMPTY), coproduct(EMPTY, EMPTY), ()))


def _entering(outer, x):
    """Right leg ``(0, 0) -> (1, 0) -> outer`` marking ``x``."""
    mark = SetPair(POINT, EMPTY)
    t1 = TightMap(UNIT_PAIR, mark, FinPartialMap(EMPTY, POINT, ()),
                  set_identity(EMPTY))
    t2 = TightMap(mark, outer, FinPartialMap(POINT, outer.minus, [x]),
                  FinPartialMap(EMPTY, outer.plus, ()))
    return t1, t2


def _leaving(inner, x):
    """Left leg ``(0, 0) -> (0, 1) -> inner`` marking ``x``."""
    mark = SetPair(EMPTY, POINT)
    s1 = TightMap(UNIT_PAIR, mark, set_identity(EMPTY),
                  FinPartialMap(EMPTY, POINT, ()))
    s2 = TightMap(mark, inner, FinPartialMap(EMPTY, inner.minus, ()),
                  FinPartialMap(POINT, inner.plus, [x]))
    return s1, s2


def _only(s):
    return s.elements[0] if len(s) == 1 else None


@Walker
def _segment(state, diagram, filled, region, collect, stop, **kw):
    kind, x = state
    inner = diagram.body.dom
    outer = diagram.outer
    top = _empty_top()
    if kind == _ENTERING:
        left = (TightMap.identity(UNIT_PAIR), _nothing(inner))
        right = _entering(outer, x)
    else:
        left = _leaving(inner, x)
        right = (TightMap.identity(UNIT_PAIR), _nothing(outer))
    cell = Cell(top, diagram.body, left[0].then(left[1]),
                right[0].then(right[1]))
    seg = segment_cell(cell, left, right)
    exit_mark = _only(seg.b2_plus)
    if exit_mark is not None:
        y = seg.lower.right.plus(exit_mark)
        collect(TrajectoryPoint(None, 'out', region(outer.plus, y)))
        stop()
        return Returned(y)
    entry = _only(seg.a2_minus)
    if entry is None:
        stop()
        return Undefined()
    k, e = seg.lower.left.minus(entry)
    collect(TrajectoryPoint(k, 'in', region(diagram.inner[k].minus, e)))

    mark = _entering(inner, (k, e))
    box_cell = Cell(top, filled, TightMap.identity(UNIT_PAIR),
                    mark[0].then(mark[1]))
    box_seg = segment_cell(box_cell, None, mark)
    out_mark = _only(box_seg.b2_plus)
    if out_mark is None:
        stop()
        return Undefined()
    j, o = box_seg.lower.right.plus(out_mark)
    collect(TrajectoryPoint(j, 'out', region(diagram.inner[j].plus, o)))
    return (_LEAVING, (j, o))


def _index(s, x):
    return s.index(x)


def run_trajectory(diagram, fillers, start, max_steps=None, region=None):
    """Follow control from ``start`` by repeated segmentation.

    ``fillers`` are loose maps ``(0, 0) -|-> P_k``. ``region`` numbers an
    element within its set; by default its index there.
    """
    if len(fillers) != len(diagram.inner):
        raise BoxMismatch("%d fillers for %d boxes" %
                          (len(fillers), len(diagram.inner)))
    for k, (f, p) in enumerate(zip(fillers, diagram.inner)):
        if f.cod != p or f.dom != UNIT_PAIR:
            raise BoxMismatch("filler %d does not fill its box" % k)
    if start not in diagram.outer.minus:
        raise IllFormedStart("%r is not an entrance of the outer box" %
                             (start,))
    region = region or _index
    filled = loose_tensor(*fillers)
    walk = _segment.run((_ENTERING, start),
                        fuel=(polyflow.trajectory_max_steps
                              if max_steps is None else max_steps),
                        key=_same, diagram=diagram, filled=filled,
                        region=region)
    if walk.status == CYCLE:
        outcome = Diverged()
    elif walk.status == FUEL:
        outcome = FuelExhausted()
    else:
        outcome = walk.state
    first = TrajectoryPoint(None, 'in', region(diagram.outer.minus, start))
    return Trajectory(outcome, (first,) + walk.collected, walk.steps)


def _same(x):
    return x


def trajectory_of(diagram, fillers, start, domain=POINT_DOMAIN,
                  max_steps=None):
    """`run_trajectory` on the finite-set shadow of a filled polynomial
    diagram; regions are summand indices."""
    diagram, fillers = program(diagram, fillers)
    inner = [SetPair(elements(p.minus, domain), elements(p.plus, domain))
             for p in diagram.inner]
    outer = SetPair(elements(diagram.outer.minus, domain),
                    elements(diagram.outer.plus, domain))
    shadow = SetDiagram(inner, outer,
                        eval_loose(diagram.body, domain, diagram.inner),
                        diagram.names)
    loose_fillers = [f.as_loose(domain) for f in fillers]
    if start not in outer.minus:
        raise IllFormedStart("%r is not an entrance of the outer box" %
                             (start,))
    return run_trajectory(shadow, loose_fillers, start, max_steps,
                          region=_position)


def _position(s, e):
    return e.position


TRAJ_OUTER = IntObject(Poly.constant(2), Poly.constant(2))
TRAJ_A = IntObject(Poly.constant(1), Poly.constant(2))
TRAJ_B = IntObject(Poly.constant(2), Poly.constant(2))


def trajectory_example(loop=False):
    """Two data-free boxes ``A`` and ``B`` and their fillers.

    From ``Outer.in2`` control visits ``A.in1, A.out1, B.in2, B.out1`` and
    leaves through ``Outer.out1``. With ``loop``, ``B`` answers ``in2``
    on ``out2``, which feeds ``A`` again, and control never leaves.
    """
    inner = [TRAJ_A, TRAJ_B]
    dom = int_sum(*inner)
    routes = [
        Route(3, ()),           # Outer.in1 -> B.in1
        Route(2, ()),           # Outer.in2 -> A.in1
        Route(4, ()),           # A.out1 -> B.in2
        Route(1, ()),           # A.out2 -> Outer.out2
        Route(0, ()),           # B.out1 -> Outer.out1
        Route(2, ()),           # B.out2 -> A.in1
    ]
    body = IntMorphism(dom, TRAJ_OUTER,
                       KleisliMap(poly_sum(TRAJ_OUTER.minus, dom.plus),
                                  poly_sum(TRAJ_OUTER.plus, dom.minus),
                                  routes))
    diagram = WiringDiagram(inner, TRAJ_OUTER, body, ['A', 'B'])
    fill_a = TableFiller(TRAJ_A, [(Elem(0), Elem(0))])
    fill_b = TableFiller(TRAJ_B, [(Elem(0), Elem(1)),
                                  (Elem(1), Elem(1 if loop else 0))])
    return diagram, [fill_a, fill_b]
