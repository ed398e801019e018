# -*- coding: utf-8 -*-
import itertools
import random
import unittest

import hypothesis

from polyflow.core import Bot
from polyflow.core.failure import (IllFormedStart, PreconditionViolated,
                                   ShapeMismatch)
from polyflow.core.sets import (EMPTY, FinPartialMap, FinSet,
                                coproduct, set_identity)
from polyflow.laws import random_cell, random_tight
from polyflow.loose import (LooseMap, SetPair, UNIT_PAIR, filler_function,
                            filler_map, loose_compose, loose_id,
                            loose_tensor, loose_transpose)
from polyflow.semantics import (Diverged, Elem, Returned, TrajectoryPoint,
                                eval_operational)
from polyflow.segment import (Cell, CounterExample, Factorization,
                              SetDiagram, TightMap, check_cell,
                              factor_tight, paste_horizontal,
                              paste_vertical, pushout_star, run_trajectory,
                              segment_cell, tight_dual, tight_sum,
                              trajectory_example, trajectory_of,
                              transpose_cell, universality_check)
from . import strategies


def _loose(dom, cod, table):
    return LooseMap(dom, cod, FinPartialMap.from_dict(
        coproduct(cod.minus, dom.plus), coproduct(cod.plus, dom.minus),
        table))


def _identity_cell(f):
    return Cell(f, f, TightMap.identity(f.dom), TightMap.identity(f.cod))


def _maps(a, b):
    """Every partial map ``a -> b``."""
    for images in itertools.product((Bot,) + b.elements, repeat=len(a)):
        yield FinPartialMap(a, b, images)


class Tests(unittest.TestCase):

    def test_tight_maps(self):
        a = SetPair(FinSet(['a']), FinSet(['p', 'q']))
        b = SetPair(FinSet(['b', 'c']), FinSet(['r']))
        t = TightMap(a, b, FinPartialMap(a.minus, b.minus, ['c']),
                     FinPartialMap(a.plus, b.plus, ['r', 'r']))
        assert TightMap.identity(a).then(t) == t
        assert TightMap.identity(a).keeps_minus()
        assert not t.keeps_plus()
        with self.assertRaises(ShapeMismatch):
            TightMap(a, b, FinPartialMap(a.minus, b.minus, [Bot]),
                     t.plus)
        assert tight_dual(tight_dual(t)) == t
        assert tight_sum(t, t).dom == SetPair(coproduct(a.minus, a.minus),
                                              coproduct(a.plus, a.plus))
        first, second = factor_tight(t, '-+')
        assert first.keeps_minus() and second.keeps_plus()
        assert first.then(second) == t
        first, second = factor_tight(t, '+-')
        assert first.keeps_plus() and second.keeps_minus()
        assert first.then(second) == t
        with self.assertRaises(PreconditionViolated):
            factor_tight(t, '++')

    def test_loose_maps(self):
        a = SetPair(FinSet(['a']), FinSet(['p']))
        f = _loose(a, a, {(0, 'a'): (1, 'a'), (1, 'p'): (0, 'p')})
        assert f == loose_id(a)
        assert loose_compose(f, f) == f
        g = filler_map(a, lambda x: 'p')
        assert filler_function(g).images == ('p',)
        assert loose_compose(g, loose_id(a)) == g
        assert loose_tensor(g).cod == SetPair(coproduct(a.minus),
                                              coproduct(a.plus))
        with self.assertRaises(ShapeMismatch):
            filler_function(f)

    def test_check_cell(self):
        a = SetPair(FinSet(['a']), EMPTY)
        b = SetPair(EMPTY, FinSet(['b']))
        top = _loose(a, b, {})
        assert check_cell(_identity_cell(top))
        bottom = _loose(a, b, {})
        cell = Cell(top, bottom, TightMap.identity(a), TightMap.identity(b))
        assert check_cell(cell)
        with self.assertRaises(ShapeMismatch):
            Cell(top, bottom, TightMap.identity(b), TightMap.identity(b))

    def test_pasting(self):
        rng = random.Random(5)
        cell = random_cell(rng)
        upper = _identity_cell(cell.top)
        assert paste_vertical(upper, cell) == cell
        beside = Cell(loose_id(cell.top.dom), loose_id(cell.bottom.dom),
                      cell.left, cell.left)
        assert check_cell(beside)
        glued = paste_horizontal(beside, cell)
        assert check_cell(glued)
        assert (glued.left, glued.right) == (cell.left, cell.right)

    def test_transpose_cell(self):
        pair = SetPair(FinSet(['a']), FinSet(['p']))
        two = SetPair(coproduct(pair.minus, pair.minus),
                      coproduct(pair.plus, pair.plus))
        f = _loose(two, UNIT_PAIR, {(1, (0, 'p')): (1, (1, 'a')),
                                    (1, (1, 'p')): (1, (0, 'a'))})
        cell = _identity_cell(f)
        t = transpose_cell(cell)
        assert check_cell(t)
        assert t.top == loose_transpose(f)

    def test_pushout(self):
        z = FinSet(['z0', 'z1', 'z2'])
        a = FinSet(['a0', 'a1'])
        b = FinSet(['b0', 'b1', 'b2'])
        f = FinPartialMap(z, a, ['a0', 'a0', Bot])
        g = FinPartialMap(z, b, ['b0', 'b1', 'b2'])
        po = pushout_star(f, g)
        assert len(po.apex) == 2
        assert po.in_b('b0') == po.in_b('b1') == po.in_a('a0')
        assert po.in_b('b2') is Bot
        assert po.in_a('a1') != po.in_a('a0')
        for x in z.elements:
            assert po.in_b(g(x)) == po.in_a(f(x))

    def test_segment_identity(self):
        rng = random.Random(2)
        cell = random_cell(rng)
        seg = segment_cell(cell)
        assert check_cell(seg.upper) and check_cell(seg.lower)
        assert paste_vertical(seg.upper, seg.lower) == cell
        assert seg.upper.left.plus == cell.left.plus
        assert seg.upper.right.minus == cell.right.minus
        assert seg.lower.left.plus == set_identity(cell.left.cod.plus)

    def test_segment_rejects(self):
        a = SetPair(FinSet(['a']), EMPTY)
        top = _loose(a, UNIT_PAIR, {})
        c = SetPair(FinSet(['c']), FinSet(['x']))
        bottom = _loose(c, UNIT_PAIR, {(1, 'x'): (1, 'c')})
        left = TightMap(a, c, FinPartialMap(a.minus, c.minus, ['c']),
                        FinPartialMap(EMPTY, c.plus, ()))
        cell = Cell(top, bottom, left, TightMap.identity(UNIT_PAIR))
        assert check_cell(cell)
        split = factor_tight(left, '+-')
        with self.assertRaises(PreconditionViolated):
            segment_cell(cell, left_split=split)
        bad = Cell(top, _loose(c, UNIT_PAIR, {}), left,
                   TightMap.identity(UNIT_PAIR))
        assert check_cell(bad)
        seg = segment_cell(bad)
        assert len(seg.a2_minus) == 1 and len(seg.b2_plus) == 0
        assert seg.middle.map.images == (Bot,)

    def test_exhaustive_small_cells(self):
        """Every cell over a fixed frame with sets of at most two
        elements."""
        a = SetPair(FinSet(['a']), FinSet(['p']))
        b = SetPair(FinSet(['b']), FinSet(['r']))
        c = SetPair(FinSet(['c0', 'c1']), FinSet(['p']))
        d = SetPair(FinSet(['b']), FinSet(['s0', 's1']))
        left = TightMap(a, c, FinPartialMap(a.minus, c.minus, ['c1']),
                        set_identity(a.plus))
        right = TightMap(b, d, set_identity(b.minus),
                         FinPartialMap(b.plus, d.plus, ['s0']))
        count = 0
        for top_map in _maps(coproduct(b.minus, a.plus),
                             coproduct(b.plus, a.minus)):
            for bottom_map in _maps(coproduct(d.minus, c.plus),
                                    coproduct(d.plus, c.minus)):
                cell = Cell(LooseMap(a, b, top_map),
                            LooseMap(c, d, bottom_map), left, right)
                if not check_cell(cell):
                    continue
                count += 1
                seg = segment_cell(cell)
                assert paste_vertical(seg.upper, seg.lower) == cell
                psi = universality_check(
                    cell, Factorization(seg.upper, seg.lower))
                assert not isinstance(psi, CounterExample), psi.reason
        assert count > 0

    @hypothesis.settings(deadline=None, max_examples=150)
    @hypothesis.given(strategies.cells())
    def test_segment_pastes(self, cell):
        seg = segment_cell(cell)
        assert check_cell(seg.upper)
        assert check_cell(seg.lower)
        assert paste_vertical(seg.upper, seg.lower) == cell

    @hypothesis.settings(deadline=None, max_examples=100)
    @hypothesis.given(strategies.law_cases('segment.universal'))
    def test_universal(self, bad):
        assert bad is None, bad

    def test_factorizations(self):
        rng = random.Random(8)
        for _ in range(50):
            t = random_tight(rng)
            for order in ('-+', '+-'):
                first, second = factor_tight(t, order)
                assert first.then(second) == t

    def test_trajectory_example(self):
        d, fillers = trajectory_example()
        traj = trajectory_of(d, fillers, Elem(1))
        assert traj.names(d.names) == ['Outer.in2', 'A.in1', 'A.out1',
                                       'B.in2', 'B.out1', 'Outer.out1']
        assert traj.outcome == Returned(Elem(0))
        run = eval_operational(d, fillers, Elem(1))
        assert run.trajectory == traj.points

    def test_trajectory_loop(self):
        d, fillers = trajectory_example(loop=True)
        traj = trajectory_of(d, fillers, Elem(1))
        assert traj.outcome == Diverged()
        assert traj.points[:4] == (TrajectoryPoint(None, 'in', 1),
                                   TrajectoryPoint(0, 'in', 0),
                                   TrajectoryPoint(0, 'out', 0),
                                   TrajectoryPoint(1, 'in', 1))
        with self.assertRaises(IllFormedStart):
            trajectory_of(d, fillers, Elem(2))

    def test_run_trajectory_on_sets(self):
        box = SetPair(FinSet(['go']), FinSet(['done']))
        outer = SetPair(FinSet(['start']), FinSet(['end']))
        inner = SetPair(coproduct(box.minus), coproduct(box.plus))
        body = _loose(inner, outer, {(0, 'start'): (1, (0, 'go')),
                                     (1, (0, 'done')): (0, 'end')})
        diagram = SetDiagram([box], outer, body, ['Task'])
        filler = filler_map(box, lambda x: 'done')
        traj = run_trajectory(diagram, [filler], 'start')
        assert traj.names(diagram.names) == ['Outer.in1', 'Task.in1',
                                             'Task.out1', 'Outer.out1']
        assert traj.outcome == Returned('end')
        with self.assertRaises(IllFormedStart):
            run_trajectory(diagram, [filler], 'stop')
        idle = filler_map(box, lambda x: Bot)
        assert not isinstance(
            run_trajectory(diagram, [idle], 'start').outcome, Returned)

    @hypothesis.settings(deadline=None, max_examples=100)
    @hypothesis.given(strategies.law_cases('segment.trajectory'))
    def test_trajectory_agrees(self, bad):
        assert bad is None, bad
