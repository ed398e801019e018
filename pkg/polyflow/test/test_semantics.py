# -*- coding: utf-8 -*-
import random
import unittest

import hypothesis

import polyflow
from polyflow.core import Bot, KleisliMap, Poly, Route
from polyflow.core.failure import (BoxMismatch, DomainTooLarge,
                                   IllFormedElem, ShapeMismatch)
from polyflow.core.sets import FinSet
from polyflow.laws import random_diagram, random_table_filler
from polyflow.operad import IntObject, identity_diagram, iota, kappa
from polyflow.para import DEC, IF, bypass_example, factorial_program
from polyflow.primitives import (bypass_fillers, factorial_fillers,
                                 registry)
from polyflow.segment import trajectory_example
from polyflow.semantics import (INTEGERS, POINT, Diverged, Domain, Elem,
                                FuelExhausted, Returned, TableFiller,
                                TrajectoryPoint, Undefined, apply_kleisli,
                                category_compose, category_identity,
                                check_elem, count_elements, elements,
                                eval_denot, eval_operational, evaluate,
                                program, run_domain)
from . import strategies


SMALL = Domain(tuple(range(4)))


def factorial(n):
    res = 1
    while n > 1:
        res *= n
        n -= 1
    return res


class Tests(unittest.TestCase):

    def test_domains(self):
        d = Domain.of((0, 1), z=[5])
        assert d.values('y') == (0, 1)
        assert d.values('z') == (5,)
        assert d.contains('z', 5) and not d.contains('z', 0)
        assert INTEGERS.contains('y', -3)
        assert not INTEGERS.contains('y', 'x')
        with self.assertRaises(ShapeMismatch):
            Domain(None, [('y', 'abc')])

    def test_elements(self):
        p = Poly.of(['a', 'b'], [])
        assert count_elements(p, SMALL) == 17
        assert count_elements(p, INTEGERS) is None
        assert elements(p, POINT) == FinSet([Elem(0, (0, 0)), Elem(1)])
        with self.assertRaises(DomainTooLarge):
            elements(p, INTEGERS)
        old = polyflow.max_domain_size
        polyflow.max_domain_size = 10
        try:
            with self.assertRaises(DomainTooLarge):
                elements(p, SMALL)
        finally:
            polyflow.max_domain_size = old

    def test_elem(self):
        p = Poly.of(['a', 'b'], [])
        e = Elem.from_data(p, 0, {'b': 2, 'a': 1})
        assert e == Elem(0, (1, 2))
        assert e.data(p) == {'a': 1, 'b': 2}
        assert str(e) == 'Elem(0, (1, 2))'
        with self.assertRaises(IllFormedElem):
            Elem.from_data(p, 0, {'a': 1})
        with self.assertRaises(IllFormedElem):
            Elem.from_data(p, 2, {})
        with self.assertRaises(IllFormedElem):
            check_elem(p, Elem(1, (3,)))

    def test_apply(self):
        f = KleisliMap(Poly.of(['a', 'b']), Poly.of(['x']) + Poly.one(),
                       [Route(0, (1,))])
        assert apply_kleisli(f, Elem(0, (1, 2))) == Elem(0, (2,))
        g = KleisliMap(f.dom, f.cod, [Bot])
        assert apply_kleisli(g, Elem(0, (1, 2))) is Bot
        m = evaluate(f, SMALL)
        assert len(m.dom) == 16 and m(Elem(0, (3, 1))) == Elem(0, (1,))
        with self.assertRaises(ShapeMismatch):
            evaluate(f, SMALL, [f.dom, f.dom])

    def test_table_filler(self):
        t = TableFiller(DEC, [(Elem(0, (1,)), Elem(0, (0,)))])
        assert t(Elem(0, (1,))) == Elem(0, (0,))
        assert t(Elem(0, (2,))) is Bot
        with self.assertRaises(ShapeMismatch):
            TableFiller(DEC, [(Elem(0, (1,)), Bot), (Elem(0, (1,)), Bot)])
        with self.assertRaises(IllFormedElem):
            TableFiller(DEC, [(Elem(0, (1, 2)), Bot)])
        dec = TableFiller.from_function(DEC, registry['dec'], SMALL)
        # 0 - 1 leaves the domain
        assert dec(Elem(0, (0,))) is Bot
        assert dec(Elem(0, (3,))) == Elem(0, (2,))
        assert len(dec.table) == 3

    def test_factorial(self):
        fac, fillers = factorial_program(), factorial_fillers()
        for n in range(11):
            run = eval_operational(fac, fillers, Elem(0, (n,)), fuel=10 ** 5)
            assert run.outcome == Returned(Elem(0, (factorial(n),))), n
            names = run.names(fac.names)
            assert names.count('If.in1') == max(n, 1), (n, names)
            assert names[0] == 'Outer.in1' and names[-1] == 'Outer.out1'

    def test_factorial_trajectory(self):
        fac, fillers = factorial_program(), factorial_fillers()
        names = eval_operational(fac, fillers, Elem(0, (2,))).names(
            fac.names)
        assert names == ['Outer.in1', 'One.in1', 'One.out1', 'If.in1',
                         'If.out1', 'Mul.in1', 'Mul.out1', 'Dec.in1',
                         'Dec.out1', 'If.in1', 'If.out2', 'Outer.out1']

    def test_outcomes(self):
        fac, fillers = factorial_program(), factorial_fillers()
        run = eval_operational(fac, fillers, Elem(0, (30,)), fuel=5)
        assert run.outcome == FuelExhausted()
        assert run.steps == 5
        d, fill = trajectory_example(loop=True)
        assert eval_operational(d, fill, Elem(1),
                                detect_cycles=True).outcome == Diverged()
        assert eval_operational(d, fill, Elem(1), fuel=50).outcome == \
            FuelExhausted()
        stuck = [fillers[0], registry['nowhere'], fillers[2], fillers[3]]
        with self.assertRaises(BoxMismatch):
            eval_operational(fac, stuck, Elem(0, (3,)))
        d, fill = trajectory_example()
        run = eval_operational(d, fill, Elem(0))
        # B answers in1 on out2, which feeds A, then B on in2
        assert run.outcome == Returned(Elem(0))
        empty = [fill[0], TableFiller(fill[1].box, [])]
        assert eval_operational(d, empty, Elem(1)).outcome == Undefined()

    def test_trajectory_points(self):
        assert TrajectoryPoint(None, 'in', 1).name() == 'Outer.in2'
        assert TrajectoryPoint(0, 'out', 0).name() == 'Box1.out1'
        assert TrajectoryPoint(1, 'in', 0).name(['A', 'B']) == 'B.in1'

    def test_program(self):
        fac, fillers = factorial_program(), factorial_fillers()
        d, lifted = program(fac, fillers)
        assert d == fac.as_diagram()
        assert lifted[1].box == d.inner[1]
        with self.assertRaises(BoxMismatch):
            program(fac, fillers[:3])

    def test_denotational(self):
        x = Domain(tuple(range(8)))
        ex = bypass_example()
        pm = eval_denot(ex, bypass_fillers(), x)
        assert pm(Elem(0, (3, 4))) == Elem(0, (6,))
        # 5 + 4 leaves the domain
        assert pm(Elem(0, (5, 5))) is Bot
        d, fill = trajectory_example()
        assert eval_denot(d, fill, POINT).images == (Elem(0), Elem(0))

    def test_denotational_matches_operational(self):
        d, fill = trajectory_example(loop=True)
        pm = eval_denot(d, fill, POINT)
        for e in pm.dom.elements:
            run = eval_operational(d, fill, e, detect_cycles=True)
            y = pm(e)
            if y is Bot:
                assert not isinstance(run.outcome, Returned)
            else:
                assert run.outcome == Returned(y)

    def test_denotational_sweep(self):
        rng = random.Random(5)
        for _ in range(300):
            x = Domain(tuple(range(rng.randint(1, 2))))
            d = random_diagram(rng, min_boxes=1, max_boxes=2)
            fill = [random_table_filler(rng, p, x) for p in d.inner]
            pm = eval_denot(d, fill, x)
            for e in pm.dom.elements:
                run = eval_operational(d, fill, e, detect_cycles=True)
                y = pm(e)
                if y is Bot:
                    assert not isinstance(run.outcome, Returned), (d, e)
                else:
                    assert run.outcome == Returned(y), (d, e)

    def test_run_domain(self):
        fac, fillers = factorial_program(), factorial_fillers()
        assert set(run_domain(fac, fillers, Elem(0, (3,))).default) == \
            {1, 2, 3, 6}
        x = run_domain(bypass_example(), bypass_fillers(), Elem(0, (3, 5)))
        assert set(x.default) == {3, 4, 5, 7}
        d, fill = trajectory_example(loop=True)
        assert run_domain(d, fill, Elem(1)).default == ()

    def test_category_of_the_algebra(self):
        x = Domain((0, 1, 2))
        a = IF.minus
        ident = category_identity(a, x)
        assert ident.as_map(x) == TableFiller.from_function(
            IntObject(a, a), lambda e: e, x).as_map(x)
        dec = TableFiller.from_function(DEC, registry['dec'], x)
        twice = category_compose(dec, dec, x)
        assert twice(Elem(0, (2,))) == Elem(0, (0,))
        assert twice(Elem(0, (1,))) is Bot
        back = category_identity(DEC.plus, x)
        for unit in [category_compose(ident, dec, x),
                     category_compose(dec, back, x)]:
            assert unit.as_map(x) == dec.as_map(x)
        with self.assertRaises(BoxMismatch):
            category_compose(dec, TableFiller(IF.dual(), []), x)

    def test_boxes(self):
        assert eval_denot(iota(Poly.of(['a'])), [], POINT).is_total()
        k = kappa(Poly.one(), Poly.one(), Poly.one())
        one = IntObject(Poly.one(), Poly.one())
        idt = TableFiller(one, [(Elem(0), Elem(0))])
        assert eval_denot(k, [idt, idt], POINT).images == (Elem(0),)
        assert eval_denot(identity_diagram(one), [idt], POINT).images == \
            (Elem(0),)

    @hypothesis.settings(deadline=None, max_examples=150)
    @hypothesis.given(strategies.law_cases('eval.functoriality'))
    def test_functoriality(self, bad):
        assert bad is None, bad

    @hypothesis.settings(deadline=None, max_examples=100)
    @hypothesis.given(strategies.law_cases('eval.algebra'))
    def test_algebra(self, bad):
        assert bad is None, bad
