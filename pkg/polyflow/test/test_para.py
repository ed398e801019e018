# -*- coding: utf-8 -*-
import unittest

import hypothesis

from polyflow.core import Bot, KleisliMap, Poly, Route
from polyflow.core.failure import BoxMismatch, IndexOutOfRange
from polyflow.operad import (IntMorphism, IntObject, identity_diagram,
                             int_id, int_sum)
from polyflow.para import (ADD, BYPASS_OUTER, DEC, FAC, IF, STORE,
                           ParaMorphism, bypass_example, factorial_program,
                           para_compose_n, scale, scale_morphism)
from polyflow.primitives import bypass_fillers, factorial_fillers, registry
from polyflow.semantics import (Domain, Elem, FuelExhausted, PrimitiveFiller,
                                Returned, TableFiller, Undefined,
                                eval_denot, eval_operational)
from . import strategies


def storing():
    """One box of type ``BYPASS_OUTER`` that keeps ``k`` in its bypass."""
    outer = IntObject(Poly.of(['k', 'u', 'v']), Poly.of(['k', 'w']))
    box = scale(STORE, BYPASS_OUTER)
    body = IntMorphism(box, outer, KleisliMap(
        outer.minus + box.plus, outer.plus + box.minus,
        [Route(1, (0, 1, 2)), Route(0, (0, 1))]))
    return ParaMorphism([BYPASS_OUTER], [STORE], outer, body, ['Sum'])


class Tests(unittest.TestCase):

    def test_scale(self):
        s = scale(STORE, DEC)
        assert s.minus == Poly.of(['m.s', 'N'])
        assert s.plus == Poly.of(['m.s', 'N'])
        assert scale(Poly.one(), IF) == IF
        assert len(scale(STORE + Poly.one(), IF).plus) == 4

    def test_scale_morphism(self):
        p = IntObject(Poly.of(['a']), Poly.of(['a', 'b']))
        scaled = scale_morphism(STORE, int_id(p))
        assert scaled.dom == scale(STORE, p)
        assert scaled == int_id(scale(STORE, p))

    def test_factorial_program(self):
        fac = factorial_program()
        assert fac.names == ('One', 'If', 'Mul', 'Dec')
        assert fac.outer == FAC
        assert len(fac) == 4
        d = fac.as_diagram()
        assert d.inner[1] == scale(STORE, IF)
        assert fac.box_name(3) == 'Dec'
        assert fac.normalized().inner[2].minus == Poly.of(['d0', 'd1'])

    def test_from_diagram(self):
        d = identity_diagram(DEC)
        para = ParaMorphism.from_diagram(d)
        assert para.bypass == (Poly.one(),)
        assert para.as_diagram() == d

    def test_checks(self):
        fac = factorial_program()
        with self.assertRaises(BoxMismatch):
            ParaMorphism(fac.inner, fac.bypass[:3], fac.outer, fac.body)
        with self.assertRaises(BoxMismatch):
            ParaMorphism(fac.inner, [Poly.one()] * 4, fac.outer, fac.body)
        with self.assertRaises(IndexOutOfRange):
            para_compose_n(fac, 4, bypass_example())
        with self.assertRaises(BoxMismatch):
            para_compose_n(fac, 0, bypass_example())

    def test_nesting_under_a_unit_bypass(self):
        psi = ParaMorphism.from_diagram(identity_diagram(BYPASS_OUTER))
        nested = para_compose_n(psi, 0, bypass_example())
        assert nested.inner == bypass_example().inner
        assert [m.sizes for m in nested.bypass] == [(1,), (0,)]
        run = eval_operational(nested, bypass_fillers(), Elem(0, (3, 5)))
        assert run.outcome == Returned(Elem(0, (7,)))

    def test_nesting_under_storage(self):
        nested = para_compose_n(storing(), 0, bypass_example())
        assert nested.outer == storing().outer
        assert nested.names == ('Dec', 'Add')
        assert [m.sizes for m in nested.bypass] == [(2,), (1,)]
        run = eval_operational(nested, bypass_fillers(), Elem(0, (9, 3, 5)))
        assert run.outcome == Returned(Elem(0, (9, 7)))

    def test_bypass_example(self):
        ex = bypass_example()
        assert ex.bypass == (STORE, Poly.one())
        assert int_sum(*ex.scaled()).minus == \
            Poly.of(['m.s', 'N'], ['a', 'b'])
        run = eval_operational(ex, bypass_fillers(), Elem(0, (3, 5)))
        assert run.outcome == Returned(Elem(0, (7,)))

    def test_normalized(self):
        for ex, fillers, start, end in [
                (factorial_program(), factorial_fillers(), (5,), (120,)),
                (bypass_example(), bypass_fillers(), (3, 5), (7,))]:
            n = ex.normalized()
            assert n.normalized() == n
            assert n.bypass == tuple(m.normalized() for m in ex.bypass)
            assert n.body.map.routes == ex.body.map.routes
            assert n.names == ex.names
            run = eval_operational(n, fillers, Elem(0, start))
            assert run.outcome == Returned(Elem(0, end))
        assert bypass_example().normalized().scaled()[0].minus == \
            Poly.of(['m.d0', 'd0'])

    def test_bypass_tables(self):
        x = Domain(tuple(range(5)))
        dec = TableFiller.from_function(DEC, registry['dec'], x)
        add = TableFiller.from_function(ADD, registry['add'], x)
        ex = bypass_example()
        pm = eval_denot(ex, [dec, add], x)
        stored = dec.lift(STORE)
        for u in x.default:
            for v in x.default:
                # whatever is stored comes back unchanged
                y = stored(Elem(0, (u, v)))
                if v == 0:
                    assert y is Bot
                else:
                    assert y == Elem(0, (u, v - 1))
                run = eval_operational(ex, [dec, add], Elem(0, (u, v)))
                if 0 < v and u + v - 1 < 5:
                    assert run.outcome == Returned(Elem(0, (u + v - 1,)))
                    assert pm(Elem(0, (u, v))) == Elem(0, (u + v - 1,))
                else:
                    assert run.outcome == Undefined()
                    assert pm(Elem(0, (u, v))) is Bot

    def test_broken_dec(self):
        fac = factorial_program()
        stuck = PrimitiveFiller('stuck', DEC, lambda e: Elem(0, e.values))
        fillers = factorial_fillers()[:3] + [stuck]
        run = eval_operational(fac, fillers, Elem(0, (3,)), fuel=200)
        assert run.outcome == FuelExhausted()
        assert run.names(fac.names).count('Dec.in1') > 10
        # the running product keeps growing, so no state repeats
        run = eval_operational(fac, fillers, Elem(0, (3,)), fuel=200,
                               detect_cycles=True)
        assert run.outcome == FuelExhausted()
        run = eval_operational(fac, fillers, Elem(0, (1,)), fuel=200)
        assert run.outcome == Returned(Elem(0, (1,)))

    @hypothesis.settings(deadline=None, max_examples=100)
    @hypothesis.given(strategies.law_cases('para.unit_bypass'))
    def test_unit_bypass(self, bad):
        assert bad is None, bad

    @hypothesis.settings(deadline=None, max_examples=100)
    @hypothesis.given(strategies.law_cases('para.unit'))
    def test_unit(self, bad):
        assert bad is None, bad

    @hypothesis.settings(deadline=None, max_examples=60)
    @hypothesis.given(strategies.law_cases('para.associativity'))
    def test_associativity(self, bad):
        assert bad is None, bad

    @hypothesis.settings(deadline=None, max_examples=50)
    @hypothesis.given(strategies.paras(min_boxes=1))
    def test_normalized_random(self, para):
        n = para.normalized()
        assert n.normalized() == n
        assert n.as_diagram().normalized() == para.as_diagram().normalized()
