# -*- coding: utf-8 -*-
"""The compact category ``Int(Poly*)`` and the operad of wiring diagrams.

An object is a signed pair ``(P-, P+)``. A loose map ``P -|-> Q`` is a
Kleisli map ``Q- + P+ -> Q+ + P-``; the block of the codomain object always
comes first. Composition traces out the middle ``Q-``.

A `WiringDiagram` is a loose map from the sum of its inner boxes to its
outer box, with the boxes kept explicitly so that diagrams can be nested
(`operad_compose_n`) and run.
"""
import functools
import logging

from .case_classes import CaseClass
from .core import (Poly, all_maps, bottom, compose, coproduct_map, identity,
                   permute_blocks, poly_sum, split_head, split_sum, sym)
from .core.failure import (BoxMismatch, CodMismatch, IndexOutOfRange,
                           ShapeMismatch)
from .trace import trace_poly


logger = logging.getLogger(__name__)


class IntObject(CaseClass):
    _fields = ('minus', 'plus')

    def dual(self):
        return IntObject(self.plus, self.minus)

    def __add__(self, other):
        return int_sum(self, other)

    def __str__(self):
        return '(%s, %s)' % (self.minus, self.plus)


UNIT = IntObject(Poly.zero(), Poly.zero())


def int_sum(*objs):
    """The monoidal product ``P + P' + ...``, componentwise."""
    return IntObject(poly_sum(*[o.minus for o in objs]),
                     poly_sum(*[o.plus for o in objs]))


class IntMorphism(CaseClass):
    _fields = ('dom', 'cod', 'map')

    def _check(self):
        if self.map.dom != poly_sum(self.cod.minus, self.dom.plus):
            raise ShapeMismatch("a loose map %s -|-> %s must start from "
                                "Q- + P+, not %s" %
                                (self.dom, self.cod, self.map.dom))
        if self.map.cod != poly_sum(self.cod.plus, self.dom.minus):
            raise ShapeMismatch("a loose map %s -|-> %s must land in "
                                "Q+ + P-, not %s" %
                                (self.dom, self.cod, self.map.cod))

    def then(self, other):
        return int_compose(self, other)

    def normalized(self):
        return IntMorphism(_normal(self.dom), _normal(self.cod),
                           self.map.normalized())


def _normal(obj):
    return IntObject(obj.minus.normalized(), obj.plus.normalized())


def int_id(p):
    return IntMorphism(p, p, sym(p.minus, p.plus))


def int_dual(p):
    return p.dual()


def int_compose(f, g):
    """``f ; g``, tracing out the middle ``Q-``."""
    if f.cod != g.dom:
        raise CodMismatch("cannot compose a loose map into %s with one out "
                          "of %s" % (f.cod, g.dom))
    p, q, r = f.dom, f.cod, g.cod
    looped = compose(
        permute_blocks([r.minus, p.plus, q.minus], (0, 2, 1)),
        coproduct_map(identity(r.minus), f.map),
        coproduct_map(g.map, identity(p.minus)),
        permute_blocks([r.plus, q.minus, p.minus], (0, 2, 1)))
    return IntMorphism(p, r, trace_poly(looped, q.minus))


def int_compose_plus(f, g):
    """``f ; g``, tracing out the middle ``Q+`` instead."""
    if f.cod != g.dom:
        raise CodMismatch("cannot compose a loose map into %s with one out "
                          "of %s" % (f.cod, g.dom))
    p, q, r = f.dom, f.cod, g.cod
    looped = compose(
        permute_blocks([r.minus, p.plus, q.plus], (0, 2, 1)),
        coproduct_map(g.map, identity(p.plus)),
        coproduct_map(identity(r.plus), f.map),
        permute_blocks([r.plus, q.plus, p.minus], (0, 2, 1)))
    return IntMorphism(p, r, trace_poly(looped, q.plus))


def int_compose_both(f, g):
    """``f ; g``, tracing out ``Q+ + Q-`` at once."""
    if f.cod != g.dom:
        raise CodMismatch("cannot compose a loose map into %s with one out "
                          "of %s" % (f.cod, g.dom))
    p, q, r = f.dom, f.cod, g.cod
    looped = compose(
        permute_blocks([r.minus, p.plus, q.plus, q.minus], (0, 2, 3, 1)),
        coproduct_map(g.map, f.map),
        permute_blocks([r.plus, q.minus, q.plus, p.minus], (0, 3, 2, 1)))
    return IntMorphism(p, r, trace_poly(looped, poly_sum(q.plus, q.minus)))


def _tensor2(f, g):
    p, q, p2, q2 = f.dom, f.cod, g.dom, g.cod
    m = compose(
        permute_blocks([q.minus, q2.minus, p.plus, p2.plus], (0, 2, 1, 3)),
        coproduct_map(f.map, g.map),
        permute_blocks([q.plus, p.minus, q2.plus, p2.minus], (0, 2, 1, 3)))
    return IntMorphism(p + p2, q + q2, m)


def int_tensor(*fs):
    """``f + g + ...`` side by side."""
    if not fs:
        return int_id(UNIT)
    return functools.reduce(_tensor2, fs)


def int_transpose(f, q):
    """``P + Q -|-> R`` becomes ``P -|-> Q* + R``."""
    r = f.cod
    p = IntObject(split_sum(f.dom.minus, q.minus),
                  split_sum(f.dom.plus, q.plus))
    m = compose(
        permute_blocks([q.plus, r.minus, p.plus], (1, 2, 0)),
        f.map,
        permute_blocks([r.plus, p.minus, q.minus], (2, 0, 1)))
    return IntMorphism(p, q.dual() + r, m)


def int_untranspose(g, q):
    """Inverse of `int_transpose`: ``P -|-> Q* + R`` back to
    ``P + Q -|-> R``."""
    p = g.dom
    r = IntObject(split_head(g.cod.minus, q.plus),
                  split_head(g.cod.plus, q.minus))
    m = compose(
        permute_blocks([r.minus, p.plus, q.plus], (2, 0, 1)),
        g.map,
        permute_blocks([q.minus, r.plus, p.minus], (1, 2, 0)))
    return IntMorphism(p + q, r, m)


def cup_cap(p):
    """``(eta: I -|-> P + P*, eps: P* + P -|-> I)``."""
    eta = IntMorphism(UNIT, p + p.dual(), sym(p.minus, p.plus))
    eps = IntMorphism(p.dual() + p, UNIT, sym(p.minus, p.plus))
    return eta, eps


def int_trace(f, u):
    """The canonical trace of a compact category: bend ``U`` round with a
    cup and a cap."""
    a = IntObject(split_sum(f.dom.minus, u.minus),
                  split_sum(f.dom.plus, u.plus))
    b = IntObject(split_sum(f.cod.minus, u.minus),
                  split_sum(f.cod.plus, u.plus))
    eta, _ = cup_cap(u)
    _, eps = cup_cap(u.dual())
    res = functools.reduce(int_compose, [
        int_tensor(int_id(a), eta),
        int_tensor(f, int_id(u.dual())),
        int_tensor(int_id(b), eps)])
    return IntMorphism(a, b, res.map)


def embed(f):
    """``a -> b`` as the loose map ``(0, a) -|-> (0, b)``."""
    zero = Poly.zero()
    return IntMorphism(IntObject(zero, f.dom), IntObject(zero, f.cod), f)


def int_iso(alpha, beta):
    """The loose isomorphism ``(X-, X+) -|-> (Y-, Y+)`` of Poly isos
    ``alpha: X- -> Y-`` and ``beta: X+ -> Y+``."""
    x = IntObject(alpha.dom, beta.dom)
    y = IntObject(alpha.cod, beta.cod)
    return IntMorphism(x, y, compose(coproduct_map(alpha.inverse(), beta),
                                     sym(x.minus, y.plus)))


def find_copairing(f, g):
    """A loose map ``h: P + Q -|-> R`` restricting to ``f`` and ``g`` along
    the injections, or None. ``+`` is not a coproduct, so this is often
    None."""
    if f.cod != g.cod:
        raise CodMismatch("copairing maps into different objects")
    p, q, r = f.dom, g.dom, f.cod
    inj_p = int_tensor(int_id(p), _nothing(q))
    inj_q = int_tensor(_nothing(p), int_id(q))
    for h in all_maps(poly_sum(r.minus, p.plus, q.plus),
                      poly_sum(r.plus, p.minus, q.minus)):
        candidate = IntMorphism(p + q, r, h)
        if int_compose(inj_p, candidate) == f and \
           int_compose(inj_q, candidate) == g:
            return candidate
    return None


def _nothing(q):
    return IntMorphism(UNIT, q, bottom(q.minus, q.plus))


class WiringDiagram(CaseClass):
    """Boxes ``inner`` wired into the box ``outer`` by ``body``.

    ``names`` optionally names the inner boxes, for rendering trajectories
    and documents.
    """
    _fields = ('inner', 'outer', 'body', 'names')
    _defaults = {'names': ()}

    def _check(self):
        if self.body.dom != int_sum(*self.inner):
            raise BoxMismatch("the body does not start from the sum of the "
                              "%d inner boxes" % len(self.inner))
        if self.body.cod != self.outer:
            raise BoxMismatch("the body does not land in the outer box")
        _check_names(self.names, self.inner)

    def __len__(self):
        return len(self.inner)

    def box_name(self, k):
        return self.names[k] if self.names else 'Box%d' % (k + 1)

    def normalized(self):
        return WiringDiagram([_normal(p) for p in self.inner],
                             _normal(self.outer), self.body.normalized(),
                             self.names)


def _check_names(names, inner):
    if not names:
        return
    if len(names) != len(inner):
        raise BoxMismatch("%d names for %d boxes" % (len(names), len(inner)))
    if len(set(names)) != len(names) or 'Outer' in names:
        raise BoxMismatch("box names must be distinct and not 'Outer': %r" %
                          (names,))


def _nested_names(outer_names, n, inner_names):
    if not outer_names or not inner_names:
        return ()
    rest = outer_names[:n] + outer_names[n + 1:]
    if set(inner_names) & set(rest):
        inner_names = tuple('%s.%s' % (outer_names[n], x)
                            for x in inner_names)
    return outer_names[:n] + tuple(inner_names) + outer_names[n + 1:]


def _slot(psi, n, phi):
    if not 0 <= n < len(psi.inner):
        raise IndexOutOfRange("slot %d of a diagram with %d boxes" %
                              (n, len(psi.inner)))
    if phi.outer != psi.inner[n]:
        raise BoxMismatch("a diagram with outer box %s cannot fill slot %d "
                          "of type %s" % (phi.outer, n, psi.inner[n]))
    return (int_sum(*psi.inner[:n]), psi.inner[n],
            int_sum(*psi.inner[n + 1:]))


def operad_compose_n(psi, n, phi):
    """``psi o_n phi``: the boxes of ``phi`` replace box ``n`` of ``psi``
    and the wires through its boundary are traced out."""
    before, q, after = _slot(psi, n, phi)
    r = psi.outer
    p = int_sum(*phi.inner)
    looped = compose(
        permute_blocks([r.minus, before.plus, p.plus, after.plus, q.plus],
                       (0, 1, 4, 3, 2)),
        coproduct_map(psi.body.map, identity(p.plus)),
        permute_blocks([r.plus, before.minus, q.minus, after.minus, p.plus],
                       (0, 1, 3, 2, 4)),
        coproduct_map(identity(poly_sum(r.plus, before.minus, after.minus)),
                      phi.body.map),
        permute_blocks([r.plus, before.minus, after.minus, q.plus, p.minus],
                       (0, 1, 4, 2, 3)))
    inner = psi.inner[:n] + phi.inner + psi.inner[n + 1:]
    logger.debug('Nesting %d boxes into slot %d of %d', len(phi.inner), n,
                 len(psi.inner))
    return WiringDiagram(inner, r,
                         IntMorphism(int_sum(*inner), r,
                                     trace_poly(looped, q.plus)),
                         _nested_names(psi.names, n, phi.names))


def tensor_then_compose(psi, n, phi):
    """``psi o_n phi`` computed as ``(id + phi + id) ; psi`` in
    ``Int(Poly*)``."""
    before, q, after = _slot(psi, n, phi)
    body = int_compose(int_tensor(int_id(before), phi.body, int_id(after)),
                       psi.body)
    inner = psi.inner[:n] + phi.inner + psi.inner[n + 1:]
    return WiringDiagram(inner, psi.outer, body,
                         _nested_names(psi.names, n, phi.names))


def identity_diagram(q):
    """The operad unit: one box wired straight through."""
    return WiringDiagram([q], q, int_id(q))


def iota(a):
    """No boxes, outer box ``(a, a)``: the identity on ``a``."""
    outer = IntObject(a, a)
    return WiringDiagram([], outer, IntMorphism(UNIT, outer, identity(a)))


def kappa(a, b, c):
    """Boxes ``(a, b)`` and ``(b, c)`` in series inside ``(a, c)``."""
    outer = IntObject(a, c)
    inner = [IntObject(a, b), IntObject(b, c)]
    return WiringDiagram(inner, outer,
                         IntMorphism(int_sum(*inner), outer,
                                     permute_blocks([a, b, c], (2, 0, 1))))
