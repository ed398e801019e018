# -*- coding: utf-8 -*-
import unittest

import hypothesis

from polyflow.core import Bot, KleisliMap, Poly, Route, identity, sym
from polyflow.core.failure import (BoxMismatch, CodMismatch,
                                   IndexOutOfRange, ShapeMismatch)
from polyflow.operad import (UNIT, IntMorphism, IntObject, WiringDiagram,
                             cup_cap, embed, find_copairing, identity_diagram,
                             int_compose, int_id, int_iso, int_sum,
                             int_tensor, int_transpose, int_untranspose,
                             iota, kappa, operad_compose_n,
                             tensor_then_compose)
from . import strategies


Y = Poly.of(['a'])
Y2 = Poly.of(['a', 'b'])
P = IntObject(Y, Y2)


def wd_full():
    """Two boxes ``P1 = (y^2, y + y^3)`` and ``P2 = (y + y, y + y^2)``
    inside ``Q = (y + y, 1 + y^3)``."""
    p1 = IntObject(Poly.of(['u', 'v']), Poly.of(['a'], ['a', 'b', 'c']))
    p2 = IntObject(Poly.of(['d'], ['d']), Poly.of(['a'], ['p', 'q']))
    q = IntObject(Poly.of(['x'], ['x']), Poly.of([], ['r', 's', 't']))
    dom = int_sum(p1, p2)
    routes = [
        Route(3, (0,)),         # Q.in1 -> P2.in1
        Route(2, (0, 0)),       # Q.in2 -> P1.in1, both slots from one
        Route(4, (0,)),         # P1.out1 -> P2.in2
        Route(1, (0, 1, 1)),    # P1.out2 -> Q.out2
        Route(0, ()),           # P2.out1 -> Q.out1
        Route(2, (0, 1)),       # P2.out2 -> P1.in1
    ]
    body = IntMorphism(dom, q, KleisliMap(q.minus + dom.plus,
                                          q.plus + dom.minus, routes))
    return WiringDiagram([p1, p2], q, body, ['P1', 'P2'])


class Tests(unittest.TestCase):

    def test_objects(self):
        assert str(P) == '(y, y^2)'
        assert P.dual() == IntObject(Y2, Y)
        assert P.dual().dual() == P
        assert P + UNIT == P
        assert int_sum(P, P).minus == Y + Y

    def test_morphism_shapes(self):
        with self.assertRaises(ShapeMismatch):
            IntMorphism(P, P, identity(Y + Y2))
        assert int_id(P).map == sym(Y, Y2)
        with self.assertRaises(CodMismatch):
            int_compose(int_id(P), int_id(P.dual()))

    def test_wd_full(self):
        d = wd_full()
        assert len(d) == 2
        assert d.box_name(1) == 'P2'
        assert d.body.map.dom == Poly.of(['x'], ['x'], ['a'],
                                         ['a', 'b', 'c'], ['a'], ['p', 'q'])
        assert d.normalized().normalized() == d.normalized()

    def test_names(self):
        d = wd_full()
        assert WiringDiagram(d.inner, d.outer, d.body).box_name(0) == 'Box1'
        with self.assertRaises(BoxMismatch):
            WiringDiagram(d.inner, d.outer, d.body, ['P1'])
        with self.assertRaises(BoxMismatch):
            WiringDiagram(d.inner, d.outer, d.body, ['P', 'P'])
        with self.assertRaises(BoxMismatch):
            WiringDiagram(d.inner, d.outer, d.body, ['P1', 'Outer'])
        with self.assertRaises(BoxMismatch):
            WiringDiagram(d.inner[:1], d.outer, d.body)

    def test_nesting_identities(self):
        a = IntObject(Y, Y)
        assert operad_compose_n(kappa(Y, Y, Y), 0, iota(Y)) == \
            identity_diagram(a)
        assert tensor_then_compose(kappa(Y, Y, Y), 1, iota(Y)) == \
            identity_diagram(a)
        d = wd_full()
        assert operad_compose_n(d, 1, identity_diagram(d.inner[1])) \
            .body == d.body

    def test_serial_boxes(self):
        a, b = Poly.of(['x'], []), Poly.of(['p', 'q'])
        c, d = Poly.one() + Y, Poly.of(['r'])
        ab = IntObject(a, b)
        assert operad_compose_n(kappa(a, a, b), 0, iota(a)) == \
            identity_diagram(ab)
        assert operad_compose_n(kappa(a, b, b), 1, iota(b)) == \
            identity_diagram(ab)
        left = operad_compose_n(kappa(a, c, d), 0, kappa(a, b, c))
        right = operad_compose_n(kappa(a, b, d), 1, kappa(b, c, d))
        assert left.inner == right.inner == (ab, IntObject(b, c),
                                             IntObject(c, d))
        assert left == right

    def test_nesting_three_boxes(self):
        d = wd_full()
        p2 = d.inner[1]
        x = Poly.of(['d'], ['d'])
        phi = operad_compose_n(kappa(p2.minus, x, p2.plus), 0,
                               kappa(p2.minus, x, x))
        assert len(phi.inner) == 3 and phi.outer == p2
        nested = operad_compose_n(d, 1, phi)
        assert nested.inner == (d.inner[0],) + phi.inner
        assert nested == tensor_then_compose(d, 1, phi)
        routes = nested.body.map.routes
        assert routes[0] == Route(3, (0,))          # Q.in1 -> B1.in1
        assert routes[2] == Route(4, (0,))          # P1.out1 -> B1.in2
        assert routes[4] == Route(5, (0,))          # B1.out1 -> B2.in1
        assert routes[8] == Route(0, ())            # B3.out1 -> Q.out1
        assert routes[9] == Route(2, (0, 1))        # B3.out2 -> P1.in1

    def test_nesting_names(self):
        d = wd_full()
        inner = WiringDiagram([d.inner[1]], d.inner[1],
                              int_id(d.inner[1]), ['P1'])
        nested = operad_compose_n(d, 1, inner)
        assert nested.names == ('P1', 'P2.P1')
        anonymous = operad_compose_n(d, 1, identity_diagram(d.inner[1]))
        assert anonymous.names == ()

    def test_nesting_errors(self):
        d = wd_full()
        with self.assertRaises(IndexOutOfRange):
            operad_compose_n(d, 2, identity_diagram(d.inner[0]))
        with self.assertRaises(BoxMismatch):
            operad_compose_n(d, 0, identity_diagram(d.inner[1]))

    def test_compact_structure(self):
        eta, eps = cup_cap(P)
        assert eta.dom == UNIT and eta.cod == P + P.dual()
        assert eps.dom == P.dual() + P and eps.cod == UNIT
        f = IntMorphism(P + P, P, KleisliMap(Y + Y2 + Y2, Y2 + Y + Y,
                                              [Bot, Route(0, (0, 1)), Bot]))
        assert int_untranspose(int_transpose(f, P), P) == f
        assert int_transpose(f, P).cod == P.dual() + P

    def test_embed_and_isos(self):
        f = KleisliMap(Y2, Y, [Route(0, (1,))])
        e = embed(f)
        assert e.dom == IntObject(Poly.zero(), Y2)
        assert int_compose(e, embed(identity(Y))) == e
        assert int_iso(identity(Y), identity(Y2)) == int_id(P)
        assert int_tensor() == int_id(UNIT)

    def test_find_copairing(self):
        r = IntObject(Y, Y)
        nowhere = IntMorphism(UNIT, r, KleisliMap(Y, Y, [Bot]))
        through = IntMorphism(UNIT, r, identity(Y))
        assert find_copairing(nowhere, nowhere) == nowhere
        assert find_copairing(nowhere, through) is None

    @hypothesis.settings(deadline=None, max_examples=200)
    @hypothesis.given(strategies.int_morphisms())
    def test_units(self, f):
        assert int_compose(int_id(f.dom), f) == f
        assert int_compose(f, int_id(f.cod)) == f

    @hypothesis.settings(deadline=None, max_examples=100)
    @hypothesis.given(strategies.diagrams(min_boxes=1))
    def test_operad_unit(self, d):
        for n in range(len(d.inner)):
            assert operad_compose_n(d, n, identity_diagram(d.inner[n])) == d

    @hypothesis.settings(deadline=None, max_examples=100)
    @hypothesis.given(strategies.law_cases('operad.monoidal'))
    def test_monoidal(self, bad):
        assert bad is None, bad
