# -*- coding: utf-8 -*-
"""Trace and iteration of pointed maps.

Both ``FinSet*`` and ``Poly*`` are cocartesian, so tracing out ``U`` is a
loop: apply the map, and while the output lands in ``U`` feed it back in.
Routing is deterministic and positions are finite, so a loop that meets a
position twice never leaves; the result there is `Bot`.
"""
import logging

from .core import Bot, KleisliMap, Route, compose, fold, split_sum
from .core.failure import BlockMismatch
from .core.sets import FinPartialMap, coproduct
from .core.walkers import CYCLE, Walker


logger = logging.getLogger(__name__)


@Walker
def _loop(state, f, feed, stop, **kw):
    y = f(state)
    if y is Bot or y[0] == 0:
        stop()
        return y
    return feed(y)


def _exit(walk):
    if walk.status == CYCLE or walk.state is Bot:
        return Bot
    return walk.state[1]


def _parts(s, what):
    try:
        return s.part(0), s.part(1)
    except (TypeError, ValueError):
        raise BlockMismatch("the %s is not a tagged coproduct" % what)


def iter_set(f):
    """``iter(f): A -> B`` for ``f: A -> B + A``."""
    b, a = _parts(f.cod, 'codomain')
    if a != f.dom:
        raise BlockMismatch("iteration needs f: A -> B + A")
    return FinPartialMap.tabulate(
        f.dom, b,
        lambda x: _exit(_loop.run(x, key=_same, f=f, feed=_untag)))


def trace_set(f):
    """``Tr(f): A -> B`` for ``f: A + U -> B + U``."""
    a, u = _parts(f.dom, 'domain')
    b, v = _parts(f.cod, 'codomain')
    if u != v:
        raise BlockMismatch("the traced block differs between domain and "
                            "codomain")
    return FinPartialMap.tabulate(
        a, b,
        lambda x: _exit(_loop.run((0, x), key=_same, f=f, feed=_same)))


def iter_from_trace(f):
    """``iter(f) = Tr(fold ; f)``."""
    b, a = _parts(f.cod, 'codomain')
    merged = FinPartialMap.tabulate(coproduct(a, a), f.cod,
                                    lambda x: f(x[1]))
    return trace_set(merged)


def trace_from_iter(g):
    """``Tr(g) = (A + !) ; iter(g ; (B + ! + U))``."""
    a, u = _parts(g.dom, 'domain')
    b, _ = _parts(g.cod, 'codomain')

    def widen(x):
        y = g(x)
        if y is Bot or y[0] == 0:
            return y
        return (1, y)
    looped = iter_set(FinPartialMap.tabulate(
        g.dom, coproduct(b, g.dom), widen))
    return FinPartialMap.tabulate(a, b, lambda x: looped((0, x)))


def _same(x):
    return x


def _untag(y):
    return y[1]


@Walker
def _follow(state, routes, n_out, n_in, stop, **kw):
    """One hop through a summand. ``acc`` maps the directions of the
    current summand back to those of the summand the walk started from."""
    index, acc = state
    route = routes[index]
    if route is Bot:
        stop()
        return Bot
    # the pull of the later hop is applied first
    acc = tuple(acc[k] for k in route.pull)
    if route.target < n_out:
        stop()
        return Route(route.target, acc)
    return (n_in + route.target - n_out, acc)


def _position(state):
    return state[0]


def trace_poly(f, u):
    """``Tr(f): a -> b`` for ``f: a + u -> b + u``.

    Walking ``a_0 -> u_k -> b_j`` with pulls ``p1`` (``u_k`` from ``a_0``)
    and ``p2`` (``b_j`` from ``u_k``) gives the pull ``p1[p2[i]]``.
    """
    a = split_sum(f.dom, u)
    b = split_sum(f.cod, u)
    routes = []
    for i in range(len(a)):
        start = (i, tuple(range(len(a.dirs(i)))))
        walk = _follow.run(start, key=_position, routes=f.routes,
                           n_out=len(b), n_in=len(a))
        routes.append(Bot if walk.status == CYCLE else walk.state)
    logger.debug('Traced %d summands out of %s', len(u), f.dom)
    return KleisliMap(a, b, routes)


def iter_poly(f):
    """``iter(f): a -> b`` for ``f: a -> b + a``."""
    a = f.dom
    split_sum(f.cod, a)
    return trace_poly(compose(fold(a), f), a)

