# -*- coding: utf-8 -*-
"""Wiring diagrams with bypass storage.

Box ``k`` of a `ParaMorphism` is scaled by its bypass polynomial ``m_k``:
the diagram sees ``m_k x P_k``, so whatever sits in the ``m_k`` directions
while the box runs comes back out unchanged. That is how the factorial
program keeps ``N`` around while ``One`` or ``Mul`` run.
"""
import logging

from .case_classes import CaseClass
from .core import (KleisliMap, Poly, Route, associator, compose,
                   coproduct_map, distributor, poly_sum, product,
                   product_map)
from .core.failure import BoxMismatch, IndexOutOfRange
from .operad import (IntMorphism, IntObject, WiringDiagram, int_compose,
                     int_iso, int_sum, operad_compose_n, _check_names,
                     _nested_names)


logger = logging.getLogger(__name__)


def scale(m, p):
    """``m . (P-, P+) = (m x P-, m x P+)``."""
    return IntObject(product(m, p.minus), product(m, p.plus))


def scale_morphism(m, f):
    """``m . f`` for a loose map ``f``, through the distributors."""
    p, q = f.dom, f.cod
    m_map = compose(distributor(m, [q.minus, p.plus]).inverse(),
                    product_map(m, f.map),
                    distributor(m, [q.plus, p.minus]))
    return IntMorphism(scale(m, p), scale(m, q), m_map)


class ParaMorphism(CaseClass):
    """Boxes ``inner`` scaled by ``bypass`` and wired into ``outer``."""
    _fields = ('inner', 'bypass', 'outer', 'body', 'names')
    _defaults = {'names': ()}

    def _check(self):
        if len(self.bypass) != len(self.inner):
            raise BoxMismatch("%d bypass polynomials for %d boxes" %
                              (len(self.bypass), len(self.inner)))
        if self.body.dom != int_sum(*self.scaled()):
            raise BoxMismatch("the body does not start from the scaled "
                              "boxes")
        if self.body.cod != self.outer:
            raise BoxMismatch("the body does not land in the outer box")
        _check_names(self.names, self.inner)

    def scaled(self):
        return [scale(m, p) for m, p in zip(self.bypass, self.inner)]

    def as_diagram(self):
        return WiringDiagram(self.scaled(), self.outer, self.body,
                             self.names)

    @classmethod
    def from_diagram(cls, d):
        """Every bypass is ``1``."""
        return cls(d.inner, [Poly.one()] * len(d.inner), d.outer, d.body,
                   d.names)

    def __len__(self):
        return len(self.inner)

    def box_name(self, k):
        return self.as_diagram().box_name(k)

    def normalized(self):
        """Boxes, bypasses and the outer box renamed; the body keeps its
        routes and is rebuilt over the rescaled boxes."""
        inner = [_normal(p) for p in self.inner]
        bypass = [m.normalized() for m in self.bypass]
        outer = _normal(self.outer)
        dom = int_sum(*[scale(m, p) for m, p in zip(bypass, inner)])
        body = IntMorphism(dom, outer,
                           KleisliMap(poly_sum(outer.minus, dom.plus),
                                      poly_sum(outer.plus, dom.minus),
                                      self.body.map.routes))
        return ParaMorphism(inner, bypass, outer, body, self.names)


def _normal(p):
    return IntObject(p.minus.normalized(), p.plus.normalized())


def _regroup(m, blocks, bypasses):
    """``m x (l_0 x b_0 + ...) -> (m x l_0) x b_0 + ...``."""
    scaled = [product(l, b) for l, b in zip(bypasses, blocks)]
    return compose(distributor(m, scaled),
                   coproduct_map(*[associator(m, l, b)
                                   for l, b in zip(bypasses, blocks)]))


def para_compose_n(psi, n, phi):
    """``psi o_n phi``; the boxes of ``phi`` end up scaled by
    ``m_n x l_j``."""
    if not 0 <= n < len(psi.inner):
        raise IndexOutOfRange("slot %d of a diagram with %d boxes" %
                              (n, len(psi.inner)))
    if phi.outer != psi.inner[n]:
        raise BoxMismatch("a diagram with outer box %s cannot fill slot %d "
                          "of type %s" % (phi.outer, n, psi.inner[n]))
    m = psi.bypass[n]
    bypass = [product(m, l) for l in phi.bypass]
    regrouped = int_iso(
        _regroup(m, [p.minus for p in phi.inner], phi.bypass).inverse(),
        _regroup(m, [p.plus for p in phi.inner], phi.bypass).inverse())
    inner = [scale(b, p) for b, p in zip(bypass, phi.inner)]
    moved = WiringDiagram(inner, scale(m, phi.outer),
                          int_compose(regrouped,
                                      scale_morphism(m, phi.body)))
    nested = operad_compose_n(psi.as_diagram(), n, moved)
    logger.debug('Nested a %d-box program into slot %d under bypass %s',
                 len(phi.inner), n, m)
    return ParaMorphism(psi.inner[:n] + phi.inner + psi.inner[n + 1:],
                        psi.bypass[:n] + tuple(bypass) + psi.bypass[n + 1:],
                        psi.outer, nested.body,
                        _nested_names(psi.names, n, phi.names))


STORE = Poly.of(['s'])

ONE = IntObject(Poly.one(), Poly.of(['T']))
IF = IntObject(Poly.of(['N']), Poly.of(['N'], []))
MUL = IntObject(Poly.of(['a', 'b']), Poly.of(['p']))
DEC = IntObject(Poly.of(['N']), Poly.of(['N']))
ADD = IntObject(Poly.of(['a', 'b']), Poly.of(['p']))
FAC = IntObject(Poly.of(['N']), Poly.of(['T']))


def factorial_program():
    """``Fac`` from boxes ``One, If, Mul, Dec``, each storing one value.

    Dom summands of the body: ``Fac-{N}``, ``One+{s,T}``, ``If+{s,N}``,
    ``If+{s}``, ``Mul+{s,p}``, ``Dec+{s,N}``. Cod summands: ``Fac+{T}``,
    ``One-{s}``, ``If-{s,N}``, ``Mul-{s,a,b}``, ``Dec-{s,N}``.
    """
    inner = [ONE, IF, MUL, DEC]
    bypass = [STORE] * len(inner)
    routes = [
        Route(1, (0,)),         # store N, start with T = 1
        Route(2, (1, 0)),       # store T, test N
        Route(3, (1, 1, 0)),    # store N, multiply N by T
        Route(0, (0,)),         # emit T
        Route(4, (1, 0)),       # store the product, decrement N
        Route(2, (0, 1)),       # loop
    ]
    dom = int_sum(*[scale(m, p) for m, p in zip(bypass, inner)])
    body = IntMorphism(dom, FAC, KleisliMap(poly_sum(FAC.minus, dom.plus),
                                            poly_sum(FAC.plus, dom.minus),
                                            routes))
    return ParaMorphism(inner, bypass, FAC, body,
                        ['One', 'If', 'Mul', 'Dec'])


BYPASS_OUTER = IntObject(Poly.of(['u', 'v']), Poly.of(['w']))


def bypass_example():
    """``u`` rides past ``Dec`` in its bypass and meets ``Dec(v)`` in
    ``Add``."""
    inner = [DEC, ADD]
    bypass = [STORE, Poly.one()]
    dom = int_sum(*[scale(m, p) for m, p in zip(bypass, inner)])
    routes = [Route(1, (0, 1)), Route(2, (0, 1)), Route(0, (0,))]
    body = IntMorphism(dom, BYPASS_OUTER,
                       KleisliMap(poly_sum(BYPASS_OUTER.minus, dom.plus),
                                  poly_sum(BYPASS_OUTER.plus, dom.minus),
                                  routes))
    return ParaMorphism(inner, bypass, BYPASS_OUTER, body, ['Dec', 'Add'])


__all__ = ['scale', 'scale_morphism', 'ParaMorphism', 'para_compose_n',
           'factorial_program', 'bypass_example']
