# -*- coding: utf-8 -*-
"""Seeded random checks of the equations the engine relies on.

Each law is a function of a `random.Random` that builds one small instance,
checks it and returns None, or returns a description of the counterexample.
`law_suite` runs every registered law a number of times and collects a
`LawReport`. The generators are also what the hypothesis strategies in the
tests draw from.
"""
import itertools
import logging
import random

from .case_classes import CaseClass
from .core import (Bot, Direction, KleisliMap, Poly, Route, Summand,
                   all_maps, coproduct_map, compose, copair, distributor,
                   identity, inject, product, product_map, sym)
from .core.failure import PolyflowError
from .core.sets import (FinPartialMap, FinSet, coproduct, reassociate,
                        set_compose, set_identity, set_sum, set_sym)
from .loose import LooseMap, SetPair
from .operad import (IntMorphism, IntObject, WiringDiagram, cup_cap,
                     embed, identity_diagram, int_compose, int_compose_both,
                     int_compose_plus, int_id, int_sum, int_tensor,
                     int_trace, int_transpose, int_untranspose,
                     operad_compose_n, tensor_then_compose)
from .para import ParaMorphism, para_compose_n, scale
from .semantics import (POINT, Domain, Elem, TableFiller, category_compose,
                        category_identity, elements, eval_denot,
                        eval_operational, evaluate)
from .segment import (Cell, CounterExample, Factorization, TightMap, _down,
                      _up, check_cell, factor_tight, paste_vertical,
                      segment_cell, trajectory_of, universality_check)
from .trace import (iter_from_trace, iter_poly, iter_set, trace_from_iter,
                    trace_poly, trace_set)


logger = logging.getLogger(__name__)

LABELS = ('y', 'y', 'y', 'z')


def random_summand(rng, max_dirs=3, labels=LABELS):
    return Summand([Direction('d%d' % k, rng.choice(labels))
                    for k in range(rng.randint(0, max_dirs))])


def random_poly(rng, max_summands=4, max_dirs=3, min_summands=0):
    return Poly([random_summand(rng, max_dirs)
                 for _ in range(rng.randint(min_summands, max_summands))])


def random_map(rng, p, q, bot=0.2):
    """A random label-preserving map ``p -> q + 1``."""
    routes = []
    for i in range(len(p)):
        source = p.dirs(i)
        have = set(d.label for d in source)
        targets = [j for j in range(len(q))
                   if all(t.label in have for t in q.dirs(j))]
        if not targets or rng.random() < bot:
            routes.append(Bot)
            continue
        j = rng.choice(targets)
        routes.append(Route(j, tuple(
            rng.choice([k for k, d in enumerate(source)
                        if d.label == t.label])
            for t in q.dirs(j))))
    return KleisliMap(p, q, routes)


def random_set(rng, tag, max_size=5, min_size=0):
    return FinSet(['%s%d' % (tag, k)
                   for k in range(rng.randint(min_size, max_size))])


def random_set_map(rng, a, b, bot=0.25):
    return FinPartialMap.tabulate(
        a, b, lambda x: Bot if not len(b) or rng.random() < bot
        else rng.choice(b.elements))


def random_total(rng, a, b):
    return FinPartialMap.tabulate(a, b, lambda x: rng.choice(b.elements))


def random_injection(rng, a, b):
    return FinPartialMap(a, b, rng.sample(b.elements, len(a)))


def random_int_object(rng, max_summands=2, max_dirs=2):
    return IntObject(random_poly(rng, max_summands, max_dirs),
                     random_poly(rng, max_summands, max_dirs))


def random_int_morphism(rng, p, q, bot=0.2):
    return IntMorphism(p, q, random_map(rng, q.minus + p.plus,
                                        q.plus + p.minus, bot))


def random_diagram(rng, outer=None, min_boxes=0, max_boxes=3,
                   max_summands=2, max_dirs=2):
    inner = [random_int_object(rng, max_summands, max_dirs)
             for _ in range(rng.randint(min_boxes, max_boxes))]
    if outer is None:
        outer = random_int_object(rng, max_summands, max_dirs)
    return WiringDiagram(inner, outer,
                         random_int_morphism(rng, int_sum(*inner), outer))


def random_para(rng, outer=None, min_boxes=0, max_boxes=2):
    """A diagram whose boxes each store a random nonzero bypass."""
    inner = [random_int_object(rng)
             for _ in range(rng.randint(min_boxes, max_boxes))]
    bypass = [random_poly(rng, 2, 1, min_summands=1) for _ in inner]
    if outer is None:
        outer = random_int_object(rng)
    dom = int_sum(*[scale(m, p) for m, p in zip(bypass, inner)])
    return ParaMorphism(inner, bypass, outer,
                        random_int_morphism(rng, dom, outer))


def random_table_filler(rng, box, domain, bot=0.2):
    cod = elements(box.plus, domain)
    return TableFiller.from_map(
        box, FinPartialMap.tabulate(
            elements(box.minus, domain), cod,
            lambda e: Bot if not len(cod) or rng.random() < bot
            else rng.choice(cod.elements)))


def _pair(rng, tag, max_size=3):
    return SetPair(random_set(rng, tag + '-', max_size),
                   random_set(rng, tag + '+', max_size))


def _at_least(rng, tag, n, max_size=3):
    return FinSet(['%s%d' % (tag, k)
                   for k in range(rng.randint(n, max(n, max_size)))])


def random_cell(rng, max_size=3):
    """A commuting cell, built by choosing the legs so that the bottom map
    can be defined through them."""
    a1, b1 = _pair(rng, 'a', max_size), _pair(rng, 'b', max_size)
    c = SetPair(_at_least(rng, 'c-', 1 if len(a1.minus) else 0, max_size),
                _at_least(rng, 'c+', len(a1.plus), max_size + 1))
    d = SetPair(_at_least(rng, 'd-', len(b1.minus), max_size + 1),
                _at_least(rng, 'd+', 1 if len(b1.plus) else 0, max_size))
    left = TightMap(a1, c, random_total(rng, a1.minus, c.minus),
                    random_injection(rng, a1.plus, c.plus))
    right = TightMap(b1, d, random_injection(rng, b1.minus, d.minus),
                     random_total(rng, b1.plus, d.plus))
    top = LooseMap(a1, b1, random_set_map(
        rng, coproduct(b1.minus, a1.plus), coproduct(b1.plus, a1.minus)))
    down, up = _down(right, left), _up(right, left)
    forced = dict((down(z), up(top.map(z)))
                  for z in top.map.dom.elements)
    free = random_set_map(rng, coproduct(d.minus, c.plus),
                          coproduct(d.plus, c.minus))
    bottom = LooseMap(c, d, FinPartialMap.tabulate(
        free.dom, free.cod, lambda x: forced[x] if x in forced
        else free(x)))
    return Cell(top, bottom, left, right)


def random_tight(rng, max_size=3):
    dom = _pair(rng, 'a', max_size)
    cod = SetPair(_at_least(rng, 'b-', 1 if len(dom.minus) else 0,
                            max_size),
                  _at_least(rng, 'b+', 1 if len(dom.plus) else 0,
                            max_size))
    return TightMap(dom, cod, random_total(rng, dom.minus, cod.minus),
                    random_total(rng, dom.plus, cod.plus))


class Laws(object):
    """Registry of law checks, also used as a decorator:

    @laws('trace.yanking')
    def yanking(rng):
        ...
    """
    def __init__(self):
        self.registry = {}

    def __call__(self, name):
        def register(f):
            self.registry[name] = f
            return f
        return register

    def __getitem__(self, name):
        return self.registry[name]

    def names(self):
        return sorted(self.registry)


laws = Laws()


def _differ(what, lhs, rhs):
    if lhs == rhs:
        return None
    return '%s: %r != %r' % (what, lhs, rhs)


def _first(*results):
    for r in results:
        if r is not None:
            return r
    return None


def _small(rng):
    return random_poly(rng, 2, 2)


def _unassociate(a, b, c):
    """``A + (B + C) -> (A + B) + C``."""
    def image(x):
        k, e = x
        if k == 0:
            return (0, (0, e))
        j, inner = e
        return (0, (1, inner)) if j == 0 else (1, inner)
    return FinPartialMap.tabulate(coproduct(a, coproduct(b, c)),
                                  coproduct(coproduct(a, b), c), image)


@laws('poly.category')
def poly_category(rng):
    p, q, r, s = [random_poly(rng) for _ in range(4)]
    f, g, h = random_map(rng, p, q), random_map(rng, q, r), \
        random_map(rng, r, s)
    return _first(
        _differ('associativity', compose(compose(f, g), h),
                compose(f, compose(g, h))),
        _differ('left unit', compose(identity(p), f), f),
        _differ('right unit', compose(f, identity(q)), f))


@laws('poly.eval_compose')
def poly_eval_compose(rng):
    p, q, r = [random_poly(rng) for _ in range(3)]
    f, g = random_map(rng, p, q), random_map(rng, q, r)
    x = Domain(tuple(range(rng.randint(0, 3))))
    return _differ('evaluation of a composite',
                   evaluate(compose(f, g), x),
                   set_compose(evaluate(f, x), evaluate(g, x)))


def _by_names(h, x):
    """``h`` at ``x``, moving values by direction name."""
    def image(e):
        route = h.routes[e.position]
        if route is Bot:
            return Bot
        names = h.dom.summands[e.position].names
        values = e.data(h.dom)
        target = h.cod.summands[route.target]
        return Elem.from_data(h.cod, route.target,
                              dict((t.name, values[names[k]])
                                   for t, k in zip(target.dirs, route.pull)))
    return FinPartialMap.tabulate(elements(h.dom, x), elements(h.cod, x),
                                  image)


@laws('poly.pointwise')
def poly_pointwise(rng):
    p, q = random_poly(rng, 2, 2), random_poly(rng, 2, 2)
    f = random_map(rng, p, q)
    x = Domain(tuple(range(rng.randint(0, 3))))
    tables = [(h.routes, _by_names(h, x)) for h in all_maps(p, q)]
    mine = [t for routes, t in tables if routes == f.routes]
    if len(mine) != 1:
        return '%r is not among the natural transformations' % (f,)
    bad = _differ('positional evaluation', evaluate(f, x), mine[0])
    if bad is not None or len(x.default) < max(p.sizes + (1,)):
        return bad
    # enough values to tell every transformation apart
    for (_, s), (_, t) in itertools.combinations(tables, 2):
        if s == t:
            return 'two transformations agree at %d values' % len(x.default)
    return None


@laws('poly.symmetry')
def poly_symmetry(rng):
    p, q = random_poly(rng), random_poly(rng)
    return _first(
        _differ('sym ; sym', compose(sym(p, q), sym(q, p)),
                identity(p + q)),
        _differ('coproduct of identities',
                coproduct_map(identity(p), identity(q)), identity(p + q)))


@laws('trace.naturality')
def trace_naturality(rng):
    a, a2, b, b2, u = [random_poly(rng) for _ in range(5)]
    f = random_map(rng, a + u, b + u)
    g, h = random_map(rng, a2, a), random_map(rng, b, b2)
    return _differ(
        'naturality',
        trace_poly(compose(coproduct_map(g, identity(u)), f,
                           coproduct_map(h, identity(u))), u),
        compose(g, trace_poly(f, u), h))


@laws('trace.dinaturality')
def trace_dinaturality(rng):
    a, b, u, v = [random_poly(rng) for _ in range(4)]
    f = random_map(rng, a + u, b + v)
    h = random_map(rng, v, u)
    return _differ(
        'dinaturality',
        trace_poly(compose(f, coproduct_map(identity(b), h)), u),
        trace_poly(compose(coproduct_map(identity(a), h), f), v))


@laws('trace.vanishing')
def trace_vanishing(rng):
    a, b, u, v = [random_poly(rng) for _ in range(4)]
    f = random_map(rng, a + b, b + a)
    g = random_map(rng, a + u + v, b + u + v)
    return _first(
        _differ('empty trace', trace_poly(f, Poly.zero()), f),
        _differ('trace over a sum', trace_poly(g, u + v),
                trace_poly(trace_poly(g, v), u)))


@laws('trace.superposing')
def trace_superposing(rng):
    a, b, c, d, u = [random_poly(rng) for _ in range(5)]
    f, g = random_map(rng, a + u, b + u), random_map(rng, c, d)
    return _differ('superposing', trace_poly(coproduct_map(g, f), u),
                   coproduct_map(g, trace_poly(f, u)))


@laws('trace.yanking')
def trace_yanking(rng):
    u = random_poly(rng)
    return _differ('yanking', trace_poly(sym(u, u), u), identity(u))


@laws('trace.iteration')
def trace_iteration(rng):
    a, b = random_poly(rng), random_poly(rng)
    f = random_map(rng, a, b + a)
    it = iter_poly(f)
    return _differ('fixed point', it, compose(f, copair(identity(b), it)))


@laws('trace.uniformity')
def trace_uniformity(rng):
    a, b, u, w = [random_poly(rng) for _ in range(4)]
    f = random_map(rng, a + u, b + u)
    s = inject([u, w], 0)
    v = u + w
    widened = compose(f, coproduct_map(identity(b), s))
    g = copair(widened, random_map(rng, w, b + v))
    return _first(
        _differ('the square', compose(coproduct_map(identity(a), s), g),
                widened),
        _differ('uniformity', trace_poly(f, u), trace_poly(g, v)))


@laws('trace.actegory')
def trace_actegory(rng):
    m, a, b, u = [_small(rng) for _ in range(4)]
    f = random_map(rng, a + u, b + u)
    scaled = compose(distributor(m, [a, u]).inverse(), product_map(m, f),
                     distributor(m, [b, u]))
    return _differ('trace of a scaled map',
                   trace_poly(scaled, product(m, u)).normalized(),
                   product_map(m, trace_poly(f, u)).normalized())


@laws('trace.pointwise')
def trace_pointwise(rng):
    a, b, u = [random_poly(rng, 3, 2) for _ in range(3)]
    f = random_map(rng, a + u, b + u)
    x = Domain(tuple(range(rng.randint(0, 3))))
    return _differ('pointwise trace', evaluate(trace_poly(f, u), x),
                   trace_set(evaluate(f, x, [a, u], [b, u])))


@laws('sets.yanking')
def sets_yanking(rng):
    u = random_set(rng, 'u')
    return _differ('yanking', trace_set(set_sym(u, u)), set_identity(u))


@laws('sets.naturality')
def sets_naturality(rng):
    a, a2, b, b2, u = [random_set(rng, t) for t in
                       ('a', 'a2', 'b', 'b2', 'u')]
    f = random_set_map(rng, coproduct(a, u), coproduct(b, u))
    g, h = random_set_map(rng, a2, a), random_set_map(rng, b, b2)
    return _differ(
        'naturality',
        trace_set(set_compose(set_sum(g, set_identity(u)), f,
                              set_sum(h, set_identity(u)))),
        set_compose(g, trace_set(f), h))


@laws('sets.dinaturality')
def sets_dinaturality(rng):
    a, b, u, v = [random_set(rng, t) for t in ('a', 'b', 'u', 'v')]
    f = random_set_map(rng, coproduct(a, u), coproduct(b, v))
    h = random_set_map(rng, v, u)
    return _differ(
        'dinaturality',
        trace_set(set_compose(f, set_sum(set_identity(b), h))),
        trace_set(set_compose(set_sum(set_identity(a), h), f)))


@laws('sets.superposing')
def sets_superposing(rng):
    a, b, c, d, u = [random_set(rng, t) for t in ('a', 'b', 'c', 'd', 'u')]
    f = random_set_map(rng, coproduct(a, u), coproduct(b, u))
    g = random_set_map(rng, c, d)
    return _differ(
        'superposing',
        trace_set(set_compose(reassociate(c, a, u), set_sum(g, f),
                              _unassociate(d, b, u))),
        set_sum(g, trace_set(f)))


@laws('sets.vanishing')
def sets_vanishing(rng):
    a, b, u, v = [random_set(rng, t, 3) for t in ('a', 'b', 'u', 'v')]
    f = random_set_map(rng, coproduct(a, coproduct(u, v)),
                       coproduct(b, coproduct(u, v)))
    return _differ(
        'trace over a sum', trace_set(f),
        trace_set(trace_set(set_compose(reassociate(a, u, v), f,
                                        _unassociate(b, u, v)))))


@laws('sets.iteration')
def sets_iteration(rng):
    a, b, u = [random_set(rng, t) for t in ('a', 'b', 'u')]
    f = random_set_map(rng, a, coproduct(b, a))
    g = random_set_map(rng, coproduct(a, u), coproduct(b, u))
    return _first(
        _differ('iteration through the trace', iter_from_trace(f),
                iter_set(f)),
        _differ('trace through the iteration', trace_from_iter(g),
                trace_set(g)))


@laws('int.category')
def int_category(rng):
    p, q, r, s = [random_int_object(rng) for _ in range(4)]
    f, g, h = random_int_morphism(rng, p, q), \
        random_int_morphism(rng, q, r), random_int_morphism(rng, r, s)
    return _first(
        _differ('associativity', int_compose(int_compose(f, g), h),
                int_compose(f, int_compose(g, h))),
        _differ('left unit', int_compose(int_id(p), f), f),
        _differ('right unit', int_compose(f, int_id(q)), f))


@laws('int.composites')
def int_composites(rng):
    p, q, r = [random_int_object(rng) for _ in range(3)]
    f, g = random_int_morphism(rng, p, q), random_int_morphism(rng, q, r)
    minus = int_compose(f, g)
    return _first(_differ('tracing Q+', int_compose_plus(f, g), minus),
                  _differ('tracing both', int_compose_both(f, g), minus))


@laws('int.snakes')
def int_snakes(rng):
    p = random_int_object(rng, 3)
    eta, eps = cup_cap(p)
    star = p.dual()
    return _first(
        _differ('first snake',
                int_compose(int_tensor(eta, int_id(p)),
                            int_tensor(int_id(p), eps)), int_id(p)),
        _differ('second snake',
                int_compose(int_tensor(int_id(star), eta),
                            int_tensor(eps, int_id(star))), int_id(star)))


@laws('int.transpose')
def int_transpose_law(rng):
    p, q, r = [random_int_object(rng) for _ in range(3)]
    f = random_int_morphism(rng, p + q, r)
    return _first(
        _differ('untranspose', int_untranspose(int_transpose(f, q), q), f),
        _differ('double dual', p.dual().dual(), p))


@laws('int.trace')
def int_trace_law(rng):
    a, b, u = [_small(rng) for _ in range(3)]
    f = random_map(rng, a + u, b + u)
    return _differ('trace of the compact structure',
                   int_trace(embed(f), IntObject(Poly.zero(), u))
                   .normalized(),
                   embed(trace_poly(f, u)).normalized())


def _slot_and_diagrams(rng):
    psi = random_diagram(rng, min_boxes=1)
    n = rng.randrange(len(psi.inner))
    phi = random_diagram(rng, outer=psi.inner[n])
    return psi, n, phi


@laws('operad.unit')
def operad_unit(rng):
    psi = random_diagram(rng, min_boxes=1)
    n = rng.randrange(len(psi.inner))
    return _first(
        _differ('right unit',
                operad_compose_n(psi, n, identity_diagram(psi.inner[n])),
                psi),
        _differ('left unit',
                operad_compose_n(identity_diagram(psi.outer), 0, psi), psi))


@laws('operad.associativity')
def operad_associativity(rng):
    psi = random_diagram(rng, min_boxes=1, max_boxes=2)
    n = rng.randrange(len(psi.inner))
    phi = random_diagram(rng, outer=psi.inner[n], min_boxes=1, max_boxes=2)
    m = rng.randrange(len(phi.inner))
    chi = random_diagram(rng, outer=phi.inner[m], max_boxes=2)
    return _differ('associativity',
                   operad_compose_n(operad_compose_n(psi, n, phi), n + m,
                                    chi),
                   operad_compose_n(psi, n, operad_compose_n(phi, m, chi)))


@laws('operad.monoidal')
def operad_monoidal(rng):
    psi, n, phi = _slot_and_diagrams(rng)
    return _differ('nesting against tensor then compose',
                   operad_compose_n(psi, n, phi),
                   tensor_then_compose(psi, n, phi))


@laws('para.unit_bypass')
def para_unit_bypass(rng):
    psi, n, phi = _slot_and_diagrams(rng)
    nested = para_compose_n(ParaMorphism.from_diagram(psi), n,
                            ParaMorphism.from_diagram(phi))
    return _differ('nesting with unit bypasses',
                   nested.as_diagram().normalized(),
                   operad_compose_n(psi, n, phi).normalized())


@laws('para.unit')
def para_unit(rng):
    psi = random_para(rng, min_boxes=1)
    n = rng.randrange(len(psi.inner))
    unit = ParaMorphism.from_diagram
    return _first(
        _differ('right unit',
                para_compose_n(psi, n, unit(identity_diagram(psi.inner[n])))
                .normalized(), psi.normalized()),
        _differ('left unit',
                para_compose_n(unit(identity_diagram(psi.outer)), 0, psi)
                .normalized(), psi.normalized()))


@laws('para.associativity')
def para_associativity(rng):
    psi = random_para(rng, min_boxes=1)
    n = rng.randrange(len(psi.inner))
    phi = random_para(rng, outer=psi.inner[n], min_boxes=1)
    m = rng.randrange(len(phi.inner))
    chi = random_para(rng, outer=phi.inner[m])
    return _differ('associativity',
                   para_compose_n(para_compose_n(psi, n, phi), n + m, chi)
                   .normalized(),
                   para_compose_n(psi, n, para_compose_n(phi, m, chi))
                   .normalized())


def _eval_domain(rng):
    return Domain(tuple(range(rng.randint(1, 2))))


@laws('eval.functoriality')
def eval_functoriality(rng):
    x = _eval_domain(rng)
    a, b, c = [_small(rng) for _ in range(3)]
    f = random_table_filler(rng, IntObject(a, b), x)
    g = random_table_filler(rng, IntObject(b, c), x)
    return _first(
        _differ('composite', category_compose(f, g, x).as_map(x),
                set_compose(f.as_map(x), g.as_map(x))),
        _differ('left identity',
                category_compose(category_identity(a, x), f, x).as_map(x),
                f.as_map(x)),
        _differ('right identity',
                category_compose(f, category_identity(b, x), x).as_map(x),
                f.as_map(x)))


@laws('eval.algebra')
def eval_algebra(rng):
    x = _eval_domain(rng)
    psi, n, phi = _slot_and_diagrams(rng)
    psi_fill = [random_table_filler(rng, p, x) for p in psi.inner]
    phi_fill = [random_table_filler(rng, p, x) for p in phi.inner]
    inner = TableFiller.from_map(phi.outer, eval_denot(phi, phi_fill, x))
    return _differ(
        'evaluating a nesting',
        eval_denot(operad_compose_n(psi, n, phi),
                   psi_fill[:n] + phi_fill + psi_fill[n + 1:], x),
        eval_denot(psi, psi_fill[:n] + [inner] + psi_fill[n + 1:], x))


@laws('segment.paste')
def segment_paste(rng):
    cell = random_cell(rng)
    seg = segment_cell(cell)
    return _first(
        None if check_cell(seg.upper) else 'upper cell does not commute',
        None if check_cell(seg.lower) else 'lower cell does not commute',
        _differ('pasting', paste_vertical(seg.upper, seg.lower), cell))


@laws('segment.universal')
def segment_universal(rng):
    cell = random_cell(rng)
    seg = segment_cell(cell)
    trivial = Factorization(cell, Cell(cell.bottom, cell.bottom,
                                       TightMap.identity(cell.bottom.dom),
                                       TightMap.identity(cell.bottom.cod)))
    for alt in (Factorization(seg.upper, seg.lower), trivial):
        psi = universality_check(cell, alt)
        if isinstance(psi, CounterExample):
            return psi.reason
    return None


@laws('segment.factorization')
def segment_factorization(rng):
    t = random_tight(rng)
    for order, first_keeps in (('-+', 'keeps_minus'), ('+-', 'keeps_plus')):
        first, second = factor_tight(t, order)
        second_keeps = 'keeps_plus' if order == '-+' else 'keeps_minus'
        if first.then(second) != t:
            return 'factoring %s does not compose back' % order
        if not getattr(first, first_keeps)() or \
           not getattr(second, second_keeps)():
            return 'factoring %s leaves the classes' % order
    return None


@laws('segment.trajectory')
def segment_trajectory(rng):
    outer = IntObject(random_poly(rng, 2, 1, min_summands=1),
                      random_poly(rng, 2, 1))
    d = random_diagram(rng, outer=outer, max_summands=2, max_dirs=1)
    fillers = [random_table_filler(rng, p, POINT) for p in d.inner]
    start = rng.choice(elements(outer.minus, POINT).elements)
    run = eval_operational(d, fillers, start, detect_cycles=True)
    traj = trajectory_of(d, fillers, start)
    return _first(
        _differ('regions', traj.points, run.trajectory),
        _differ('outcome', type(traj.outcome), type(run.outcome)))


class LawResult(CaseClass):
    _fields = ('name', 'cases', 'failures', 'counterexamples')


class LawReport(CaseClass):
    _fields = ('seed', 'cases', 'results')

    def ok(self):
        return all(r.failures == 0 for r in self.results)

    def as_dict(self):
        return {'seed': self.seed, 'cases': self.cases, 'ok': self.ok(),
                'laws': [{'name': r.name, 'cases': r.cases,
                          'failures': r.failures,
                          'counterexamples': list(r.counterexamples)}
                         for r in self.results]}


def check_law(name, seed=0, cases=100, keep=3):
    check = laws[name]
    rng = random.Random('%s:%s' % (seed, name))
    failures = 0
    found = []
    for _ in range(cases):
        try:
            bad = check(rng)
        except PolyflowError as ex:
            bad = '%s: %s' % (type(ex).__name__, ex)
        if bad is not None:
            failures += 1
            if len(found) < keep:
                found.append(bad)
    logger.debug('Law %s: %d cases, %d failures', name, cases, failures)
    return LawResult(name, cases, failures, found)


def law_suite(seed=0, cases=100, names=None):
    """Runs ``cases`` instances of every law (or of ``names``)."""
    names = laws.names() if names is None else names
    return LawReport(seed, cases,
                     [check_law(name, seed, cases) for name in names])
