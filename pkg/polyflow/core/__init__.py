# -*- coding: utf-8 -*-
"""Finite polynomial functors and the pointed (Kleisli) maps between them.

A polynomial is an ordered list of summands (positions), each an ordered
list of labelled directions (data slots). A map ``p -> q`` sends every
summand of ``p`` either to `Bot` or to a `Route`: a target summand of ``q``
and a ``pull`` that names, for each direction of the target, the direction
of the source that feeds it. Directions flow backwards, so composing maps
composes pulls in the opposite order.

Sums are strictly associative: the summands of ``p + q`` are those of ``p``
followed by those of ``q``, and every block reordering is an explicit map
built by `permute_blocks`.
"""
import functools
import itertools
import logging
import operator

from ..case_classes import CaseClass
from .failure import (BlockMismatch, CodMismatch, DomainTooLarge,
                      IndexOutOfRange, LabelMismatch, PreconditionViolated,
                      ShapeMismatch)
from .util import invert, locate, offsets, singleton


logger = logging.getLogger(__name__)

DEFAULT_LABEL = 'y'


def check_label(name):
    """Labels are plain strings; the only requirement is that they are
    non-empty."""
    if not isinstance(name, str) or not name:
        raise ShapeMismatch("labels are non-empty strings, got %r" % (name,))
    return name


class Direction(CaseClass):
    _fields = ('name', 'label')
    _defaults = {'label': DEFAULT_LABEL}

    def _check(self):
        if not isinstance(self.name, str) or not self.name:
            raise ShapeMismatch("direction names are non-empty strings, "
                                "got %r" % (self.name,))
        check_label(self.label)


class Summand(CaseClass):
    _fields = ('dirs',)
    _defaults = {'dirs': ()}

    def _check(self):
        for d in self.dirs:
            if not isinstance(d, Direction):
                raise ShapeMismatch("expected a Direction, got %r" % (d,))
        names = self.names
        if len(set(names)) != len(names):
            raise ShapeMismatch("direction names repeat in summand %r" %
                                (names,))

    @property
    def names(self):
        return tuple(d.name for d in self.dirs)

    @property
    def labels(self):
        return tuple(d.label for d in self.dirs)

    def __len__(self):
        return len(self.dirs)


def _direction(d):
    if isinstance(d, Direction):
        return d
    if isinstance(d, str):
        return Direction(d)
    return Direction(*d)


class Poly(CaseClass):
    """A finite polynomial ``sum_i y^{A_i}``."""
    _fields = ('summands',)

    def _check(self):
        for s in self.summands:
            if not isinstance(s, Summand):
                raise ShapeMismatch("expected a Summand, got %r" % (s,))

    @classmethod
    def of(cls, *summands):
        """``Poly.of(['x'], [('r', 'y'), 's'])``: one list per summand,
        directions given as names, ``(name, label)`` pairs or
        `Direction` values."""
        return cls([Summand([_direction(d) for d in s]) for s in summands])

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def constant(cls, n):
        return cls([Summand(())] * n)

    @classmethod
    def monomial(cls, n, label=DEFAULT_LABEL, names=None):
        names = names or ['d%d' % k for k in range(n)]
        if len(names) != n:
            raise ShapeMismatch("%d names for y^%d" % (len(names), n))
        return cls.of([(name, label) for name in names])

    @classmethod
    def from_exponents(cls, exponents, label=DEFAULT_LABEL):
        return cls([cls.monomial(n, label).summands[0] for n in exponents])

    def __len__(self):
        return len(self.summands)

    def __getitem__(self, i):
        return self.summands[i]

    def dirs(self, i):
        if not 0 <= i < len(self.summands):
            raise IndexOutOfRange("summand %d of a polynomial with %d" %
                                  (i, len(self.summands)))
        return self.summands[i].dirs

    @property
    def sizes(self):
        return tuple(len(s) for s in self.summands)

    def shape(self):
        """The polynomial with direction names forgotten."""
        return tuple(s.labels for s in self.summands)

    def normalized(self):
        """Directions renamed ``d0, d1, ...`` in each summand."""
        return Poly([Summand([Direction('d%d' % k, d.label)
                              for k, d in enumerate(s.dirs)])
                     for s in self.summands])

    def __add__(self, other):
        return poly_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __str__(self):
        if not self.summands:
            return '0'
        return ' + '.join(_monomial_str(s) for s in self.summands)

    def __repr__(self):
        return CaseClass.__str__(self)


def _monomial_str(summand):
    if not summand.dirs:
        return '1'
    counts = {}
    for label in summand.labels:
        counts[label] = counts.get(label, 0) + 1
    return ' '.join(label if n == 1 else '%s^%d' % (label, n)
                    for label, n in counts.items())


@singleton
class Bot(object):
    """The undefined result of a pointed map."""

    def __repr__(self):
        return 'Bot'

    __str__ = __repr__

    def __reduce__(self):
        return 'Bot'


class Route(CaseClass):
    _fields = ('target', 'pull')

    def _check(self):
        if not isinstance(self.target, int):
            raise ShapeMismatch("route targets are summand indices, got %r" %
                                (self.target,))
        if not isinstance(self.pull, tuple) or \
           not all(isinstance(k, int) for k in self.pull):
            raise ShapeMismatch("pulls are tuples of direction indices, "
                                "got %r" % (self.pull,))


class KleisliMap(CaseClass):
    """A map ``dom -> cod + 1``; one entry of ``routes`` per summand of
    ``dom``."""
    _fields = ('dom', 'cod', 'routes')

    def _check(self):
        if len(self.routes) != len(self.dom):
            raise ShapeMismatch("%d routes for %d summands" %
                                (len(self.routes), len(self.dom)))
        for i, route in enumerate(self.routes):
            if route is Bot:
                continue
            if not isinstance(route, Route):
                raise ShapeMismatch("route %d is neither Bot nor a Route: %r"
                                    % (i, route))
            if not 0 <= route.target < len(self.cod):
                raise IndexOutOfRange("route %d targets summand %d of %d" %
                                      (i, route.target, len(self.cod)))
            source = self.dom.dirs(i)
            target = self.cod.dirs(route.target)
            if len(route.pull) != len(target):
                raise ShapeMismatch("route %d pulls %d directions into a "
                                    "summand with %d" %
                                    (i, len(route.pull), len(target)))
            for k, j in enumerate(route.pull):
                if not 0 <= j < len(source):
                    raise IndexOutOfRange("route %d pulls direction %d of %d"
                                          % (i, j, len(source)))
                if source[j].label != target[k].label:
                    raise LabelMismatch(
                        "route %d feeds %s:%s from %s:%s" %
                        (i, target[k].name, target[k].label,
                         source[j].name, source[j].label))

    def then(self, other):
        return compose(self, other)

    def is_total(self):
        return all(r is not Bot for r in self.routes)

    def is_iso(self):
        if len(self.dom) != len(self.cod) or not self.is_total():
            return False
        if sorted(r.target for r in self.routes) != list(range(len(self.cod))):
            return False
        return all(sorted(r.pull) == list(range(len(self.dom.dirs(i))))
                   for i, r in enumerate(self.routes))

    def inverse(self):
        if not self.is_iso():
            raise PreconditionViolated("only isomorphisms can be inverted")
        routes = [None] * len(self.cod)
        for i, r in enumerate(self.routes):
            routes[r.target] = Route(i, invert(r.pull))
        return KleisliMap(self.cod, self.dom, routes)

    def normalized(self):
        """The same map between polynomials with canonical direction
        names."""
        return KleisliMap(self.dom.normalized(), self.cod.normalized(),
                          self.routes)


def _identity_pull(n):
    return tuple(range(n))


def poly_sum(*polys):
    return Poly(tuple(s for p in polys for s in p.summands))


def _prefix(m, p):
    taken = set(d.name for s in p.summands for d in s.dirs)
    prefix = 'm.'
    while any(prefix + d.name in taken for s in m.summands for d in s.dirs):
        prefix = 'm' + prefix
    return prefix


def product(m, p):
    """``m x p``: summands are pairs in m-major order, each carrying the
    directions of the ``m`` summand (prefixed to stay unique) followed by
    those of the ``p`` summand."""
    prefix = _prefix(m, p)
    return Poly([Summand([Direction(prefix + d.name, d.label)
                          for d in ms.dirs] + list(ps.dirs))
                  for ms in m.summands for ps in p.summands])


def split_sum(poly, tail):
    """The head ``h`` with ``poly == h + tail``."""
    cut = len(poly) - len(tail)
    if cut < 0 or poly.summands[cut:] != tail.summands:
        raise BlockMismatch("%s does not end with %s" % (poly, tail))
    return Poly(poly.summands[:cut])


def split_head(poly, head):
    """The tail ``t`` with ``poly == head + t``."""
    cut = len(head)
    if cut > len(poly) or poly.summands[:cut] != head.summands:
        raise BlockMismatch("%s does not start with %s" % (poly, head))
    return Poly(poly.summands[cut:])


def identity(p):
    return KleisliMap(p, p, [Route(i, _identity_pull(len(s)))
                             for i, s in enumerate(p.summands)])


def compose(f, *gs):
    """Kleisli composite ``f ; g ; ...``."""
    for g in gs:
        if f.cod != g.dom:
            raise CodMismatch("cannot compose a map into %s with a map out "
                              "of %s" % (f.cod, g.dom))
        routes = []
        for r in f.routes:
            s = Bot if r is Bot else g.routes[r.target]
            if s is Bot:
                routes.append(Bot)
            else:
                routes.append(Route(s.target,
                                    tuple(r.pull[k] for k in s.pull)))
        f = KleisliMap(f.dom, g.cod, routes)
    return f


def coproduct_map(*fs):
    """``f + g + ...`` acting blockwise."""
    shifts = offsets([len(f.cod) for f in fs])
    routes = [Bot if r is Bot else Route(shift + r.target, r.pull)
              for f, shift in zip(fs, shifts) for r in f.routes]
    return KleisliMap(poly_sum(*[f.dom for f in fs]),
                      poly_sum(*[f.cod for f in fs]), routes)


def permute_blocks(blocks, order):
    """The reordering ``b_0 + ... + b_n -> b_order[0] + ... +
    b_order[n]`` with identity pulls."""
    order = tuple(order)
    if sorted(order) != list(range(len(blocks))):
        raise PreconditionViolated("%r is not a permutation of %d blocks" %
                                   (order, len(blocks)))
    arranged = [blocks[k] for k in order]
    starts = offsets([len(b) for b in arranged])
    position = invert(order)
    routes = [Route(starts[position[b]] + i, _identity_pull(len(s)))
              for b, block in enumerate(blocks)
              for i, s in enumerate(block.summands)]
    return KleisliMap(poly_sum(*blocks), poly_sum(*arranged), routes)


def sym(p, q):
    """The braiding ``p + q -> q + p``."""
    return permute_blocks([p, q], (1, 0))


def inject(blocks, k):
    """The coproduct inclusion of ``blocks[k]`` into their sum."""
    start = offsets([len(b) for b in blocks])[k]
    return KleisliMap(blocks[k], poly_sum(*blocks),
                      [Route(start + i, _identity_pull(len(s)))
                       for i, s in enumerate(blocks[k].summands)])


def copair(*fs):
    """``[f, g, ...]: p + p' + ... -> q``."""
    cods = set(f.cod for f in fs)
    if len(cods) > 1:
        raise CodMismatch("copairing maps with different codomains")
    cod = fs[0].cod if fs else Poly.zero()
    return KleisliMap(poly_sum(*[f.dom for f in fs]), cod,
                      [r for f in fs for r in f.routes])


def fold(p, n=2):
    """The codiagonal ``p + ... + p -> p``."""
    return copair(*[identity(p)] * n)


def bang(p):
    """The unique map out of ``0``."""
    return KleisliMap(Poly.zero(), p, ())


def bottom(p, q):
    """The everywhere undefined map."""
    return KleisliMap(p, q, [Bot] * len(p))


def product_map(m, f):
    """``m x f``: the ``m`` directions ride along untouched."""
    n = len(f.cod)
    routes = []
    for a, ms in enumerate(m.summands):
        k = len(ms)
        for r in f.routes:
            if r is Bot:
                routes.append(Bot)
            else:
                routes.append(Route(a * n + r.target,
                                    _identity_pull(k) +
                                    tuple(k + x for x in r.pull)))
    return KleisliMap(product(m, f.dom), product(m, f.cod), routes)


def distributor(m, blocks):
    """``m x (b_0 + ... + b_n) -> m x b_0 + ... + m x b_n``."""
    sizes = [len(b) for b in blocks]
    starts = offsets([len(m) * s for s in sizes])
    dom = product(m, poly_sum(*blocks))
    routes = []
    for a in range(len(m)):
        for s in range(sum(sizes)):
            b, i = locate(sizes, s)
            index = len(routes)
            routes.append(Route(starts[b] + a * sizes[b] + i,
                                _identity_pull(len(dom.dirs(index)))))
    return KleisliMap(dom, poly_sum(*[product(m, b) for b in blocks]), routes)


def associator(m, l, p):
    """``m x (l x p) -> (m x l) x p``; pair-major order makes it the
    identity on indices."""
    dom = product(m, product(l, p))
    return KleisliMap(dom, product(product(m, l), p),
                      [Route(i, _identity_pull(len(s)))
                       for i, s in enumerate(dom.summands)])


def all_maps(p, q, limit=100000):
    """Every map ``p -> q + 1``, for brute-force searches."""
    choices = []
    for i in range(len(p)):
        options = [Bot]
        source = p.dirs(i)
        for j in range(len(q)):
            candidates = [[k for k, d in enumerate(source)
                           if d.label == t.label] for t in q.dirs(j)]
            options.extend(Route(j, pull)
                           for pull in itertools.product(*candidates))
        choices.append(options)
    total = functools.reduce(operator.mul, map(len, choices), 1)
    if total > limit:
        raise DomainTooLarge("%d maps from %s to %s" % (total, p, q))
    logger.debug('Enumerating %d maps %s -> %s', total, p, q)
    for routes in itertools.product(*choices):
        yield KleisliMap(p, q, routes)
