# -*- coding: utf-8 -*-
"""Diagram and filler documents: JSON in, JSON out.

A diagram document names its boxes; the boxes are taken in name order. A
route goes ``from`` an entrance of the outer box (``side: "in"``, no
``box``) or an exit of an inner box (``side: "out"``) ``to`` an exit of the
outer box (``side: "out"``, no ``box``) or an entrance of an inner box
(``side: "in"``). Summands are counted from 0. ``pull`` names, for every
direction of the target summand, the direction of the source summand it
reads from. Summands with no route are undefined.

With a ``bypass`` object the document is a diagram with storage: every box
is scaled by its bypass polynomial (``1`` when left out) and routes address
the summands and directions of the scaled boxes.
"""
import json
import logging

from jsonschema import Draft202012Validator

from .core import (Bot, DEFAULT_LABEL, Direction, KleisliMap, Poly, Route,
                   Summand, poly_sum)
from .core.failure import ParseError, PolyflowError, ValidationError
from .operad import IntMorphism, IntObject, WiringDiagram, int_sum
from .para import ParaMorphism, scale
from .primitives import registry
from .semantics import (Diverged, Domain, Elem, FuelExhausted, OUTER,
                        Returned, TableFiller, Undefined, check_elem)


logger = logging.getLogger(__name__)

_DIRECTION = {
    "type": "object",
    "properties": {
        "dir": {"type": "string", "minLength": 1},
        "label": {"type": "string", "minLength": 1},
    },
    "required": ["dir"],
    "additionalProperties": False,
}

_POLY = {"type": "array", "items": {"type": "array", "items": _DIRECTION}}

_BOX = {
    "type": "object",
    "properties": {"minus": _POLY, "plus": _POLY},
    "required": ["minus", "plus"],
    "additionalProperties": False,
}

_END = {
    "type": "object",
    "properties": {
        "side": {"enum": ["in", "out"]},
        "box": {"type": "string"},
        "summand": {"type": "integer", "minimum": 0},
    },
    "required": ["side", "summand"],
    "additionalProperties": False,
}

DIAGRAM_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "boxes": {"type": "object", "additionalProperties": _BOX},
        "outer": _BOX,
        "wiring": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "from": _END,
                    "to": _END,
                    "pull": {"type": "object",
                             "additionalProperties": {"type": "string"}},
                },
                "required": ["from", "to"],
                "additionalProperties": False,
            },
        },
        "bypass": {"type": "object", "additionalProperties": _POLY},
    },
    "required": ["boxes", "outer", "wiring"],
    "additionalProperties": False,
}

_VALUES = {"oneOf": [{"const": "int"},
                     {"type": "array", "items": {"type": "integer"}}]}

FILLER_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": {
        "oneOf": [
            {
                "type": "object",
                "properties": {
                    "primitive": {"type": "string"},
                    "bind": {"type": "object",
                             "additionalProperties": _VALUES},
                },
                "required": ["primitive"],
                "additionalProperties": False,
            },
            {
                "type": "object",
                "properties": {
                    "table": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "properties": {
                                "in": {"type": "object"},
                                "out": {"type": ["object", "null"]},
                            },
                            "required": ["in", "out"],
                            "additionalProperties": False,
                        },
                    },
                },
                "required": ["table"],
                "additionalProperties": False,
            },
        ],
    },
}

diagram_validator = Draft202012Validator(DIAGRAM_SCHEMA)
filler_validator = Draft202012Validator(FILLER_SCHEMA)


def load_json(text, source='<string>'):
    try:
        return json.loads(text)
    except json.JSONDecodeError as ex:
        raise ParseError("%s is not JSON: %s" % (source, ex.msg), ex.lineno,
                         ex.colno)


def read_json(path):
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except OSError as ex:
        raise ParseError("cannot read %s: %s" % (path, ex.strerror))
    return load_json(text, path)


def dump_json(doc):
    """Canonical form: sorted keys, two-space indent, final newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + '\n'


def check_schema(doc, validator):
    errors = sorted(validator.iter_errors(doc),
                    key=lambda e: (str(list(e.absolute_path)), e.message))
    if errors:
        first = errors[0]
        raise ValidationError(first.message, first.absolute_path, 'schema')


def _poly(doc, path):
    try:
        return Poly([Summand([Direction(d['dir'],
                                        d.get('label', DEFAULT_LABEL))
                              for d in summand])
                     for summand in doc])
    except PolyflowError as ex:
        raise ValidationError(str(ex), path, 'distinct-directions')


def _box(doc, path):
    return IntObject(_poly(doc['minus'], path + ['minus']),
                     _poly(doc['plus'], path + ['plus']))


class _Blocks(object):
    """Where the summands of each side of the body start."""

    def __init__(self, outer, boxes, names):
        self.outer = outer
        self.boxes = boxes
        self.index = dict((name, k) for k, name in enumerate(names))

    def locate(self, end, path, sources):
        """The body summand an end addresses: a summand of ``Q- + P+``
        for sources, of ``Q+ + P-`` for targets."""
        outer_side, box_side = ('in', 'out') if sources else ('out', 'in')
        rule = "routes %s at an outer '%s' or a box '%s'" % (
            'start' if sources else 'end', outer_side, box_side)
        outer_poly = self.outer.minus if sources else self.outer.plus
        box = end.get('box')
        if box is None:
            if end['side'] != outer_side:
                raise ValidationError(rule, path + ['side'], 'side')
            return self._summand(outer_poly, 0, end['summand'], path)
        if end['side'] != box_side:
            raise ValidationError(rule, path + ['side'], 'side')
        if box not in self.index:
            raise ValidationError("no box named %r" % (box,), path + ['box'],
                                  'known-box')
        k = self.index[box]
        polys = [p.plus if sources else p.minus for p in self.boxes]
        start = len(outer_poly) + sum(len(p) for p in polys[:k])
        return self._summand(polys[k], start, end['summand'], path)

    def _summand(self, poly, start, summand, path):
        if summand >= len(poly):
            raise ValidationError("summand %d of a side with %d" %
                                  (summand, len(poly)),
                                  path + ['summand'], 'summand-exists')
        return start + summand


def parse_diagram(doc):
    """A `WiringDiagram`, or a `ParaMorphism` when ``doc`` has a
    ``bypass``."""
    check_schema(doc, diagram_validator)
    names = sorted(doc['boxes'])
    if OUTER in names:
        raise ValidationError("%r is reserved for the outer box" % OUTER,
                              ['boxes', OUTER], 'box-name')
    inner = [_box(doc['boxes'][name], ['boxes', name]) for name in names]
    outer = _box(doc['outer'], ['outer'])
    bypass = None
    if 'bypass' in doc:
        for name in doc['bypass']:
            if name not in doc['boxes']:
                raise ValidationError("no box named %r" % (name,),
                                      ['bypass', name], 'known-box')
        bypass = [_poly(doc['bypass'][name], ['bypass', name])
                  if name in doc['bypass'] else Poly.one()
                  for name in names]
        boxes = [scale(m, p) for m, p in zip(bypass, inner)]
    else:
        boxes = inner
    dom_poly = poly_sum(outer.minus, *[p.plus for p in boxes])
    cod_poly = poly_sum(outer.plus, *[p.minus for p in boxes])
    blocks = _Blocks(outer, boxes, names)
    routes = [Bot] * len(dom_poly)
    for i, wire in enumerate(doc['wiring']):
        path = ['wiring', i]
        source = blocks.locate(wire['from'], path + ['from'], True)
        target = blocks.locate(wire['to'], path + ['to'], False)
        if routes[source] is not Bot:
            raise ValidationError("the source summand already has a route",
                                  path + ['from'], 'one-route-per-summand')
        routes[source] = Route(target, _pull(dom_poly.dirs(source),
                                             cod_poly.dirs(target),
                                             wire.get('pull', {}),
                                             path + ['pull']))
    try:
        body = IntMorphism(int_sum(*boxes), outer,
                           KleisliMap(dom_poly, cod_poly, routes))
        if bypass is None:
            d = WiringDiagram(inner, outer, body, names)
        else:
            d = ParaMorphism(inner, bypass, outer, body, names)
    except ValidationError:
        raise
    except PolyflowError as ex:
        raise ValidationError(str(ex), [], 'well-formed')
    logger.debug('Parsed a diagram with %d boxes and %d routes', len(names),
                 len(doc['wiring']))
    return d


def _pull(source, target, doc, path):
    names = [d.name for d in source]
    wanted = [d.name for d in target]
    for key in doc:
        if key not in wanted:
            raise ValidationError("the target has no direction %r" % (key,),
                                  path + [key], 'known-direction')
    pull = []
    for t in target:
        if t.name not in doc:
            raise ValidationError("direction %r is not fed" % (t.name,),
                                  path, 'total-pull')
        src = doc[t.name]
        if src not in names:
            raise ValidationError("the source has no direction %r" % (src,),
                                  path + [t.name], 'known-direction')
        k = names.index(src)
        if source[k].label != t.label:
            raise ValidationError("%s:%s is fed from %s:%s" %
                                  (t.name, t.label, src, source[k].label),
                                  path + [t.name], 'label-preserving')
        pull.append(k)
    return tuple(pull)


def parse(text, source='<string>'):
    return parse_diagram(load_json(text, source))


def read_diagram(path):
    return parse_diagram(read_json(path))


def _poly_doc(p):
    return [[_direction_doc(d) for d in s.dirs] for s in p.summands]


def _direction_doc(d):
    if d.label == DEFAULT_LABEL:
        return {'dir': d.name}
    return {'dir': d.name, 'label': d.label}


def _box_doc(p):
    return {'minus': _poly_doc(p.minus), 'plus': _poly_doc(p.plus)}


def _ends(d, boxes):
    """The ``from`` ends of the body's domain summands and the ``to`` ends
    of its codomain summands, in order."""
    outer = d.outer
    sources = [{'side': 'in', 'summand': i} for i in range(len(outer.minus))]
    targets = [{'side': 'out', 'summand': i} for i in range(len(outer.plus))]
    for k, p in enumerate(boxes):
        name = d.box_name(k)
        sources += [{'side': 'out', 'box': name, 'summand': i}
                    for i in range(len(p.plus))]
        targets += [{'side': 'in', 'box': name, 'summand': i}
                    for i in range(len(p.minus))]
    return sources, targets


def _route_key(wire):
    end = wire['from']
    return (end['side'], end.get('box', ''), end['summand'])


def diagram_doc(d):
    """The canonical document of a `WiringDiagram` or `ParaMorphism`."""
    boxes = d.scaled() if isinstance(d, ParaMorphism) else d.inner
    sources, targets = _ends(d, boxes)
    m = d.body.map
    wiring = []
    for i, route in enumerate(m.routes):
        if route is Bot:
            continue
        source = m.dom.dirs(i)
        target = m.cod.dirs(route.target)
        wiring.append({'from': sources[i], 'to': targets[route.target],
                       'pull': dict((t.name, source[k].name)
                                    for t, k in zip(target, route.pull))})
    doc = {'boxes': dict((d.box_name(k), _box_doc(p))
                         for k, p in enumerate(d.inner)),
           'outer': _box_doc(d.outer),
           'wiring': sorted(wiring, key=_route_key)}
    if isinstance(d, ParaMorphism):
        doc['bypass'] = dict((d.box_name(k), _poly_doc(m))
                             for k, m in enumerate(d.bypass))
    return doc


def print_diagram(d):
    return dump_json(diagram_doc(d))


def parse_elem(p, doc, path=()):
    """``{"summand": k, "data": {...}}``, or just the data of summand 0.

    Keys naming exactly the directions of summand 0 are always read as
    its data.
    """
    if not isinstance(doc, dict):
        raise ValidationError("elements are JSON objects", list(path),
                              'element')
    bare = len(p) > 0 and sorted(doc) == sorted(p.summands[0].names)
    if not bare and set(doc) <= {'summand', 'data'} and 'summand' in doc:
        position = doc['summand']
        data = doc.get('data', {})
    else:
        position, data = 0, doc
    if not isinstance(position, int) or not isinstance(data, dict):
        raise ValidationError("elements are {summand, data} objects",
                              list(path), 'element')
    try:
        return Elem.from_data(p, position, data)
    except PolyflowError as ex:
        raise ValidationError(str(ex), list(path), 'element')


def elem_doc(p, e):
    return {'summand': e.position, 'data': e.data(p)}


def _domain(bind):
    return Domain.of(**dict((label, None if values == 'int' else values)
                            for label, values in bind.items()))


def parse_fillers(doc, diagram):
    """One filler per box of ``diagram``, in box order."""
    check_schema(doc, filler_validator)
    names = [diagram.box_name(k) for k in range(len(diagram.inner))]
    for name in doc:
        if name not in names:
            raise ValidationError("no box named %r" % (name,), [name],
                                  'known-box')
    fillers = []
    for name, box in zip(names, diagram.inner):
        if name not in doc:
            raise ValidationError("box %s has no filler" % name, [name],
                                  'filled-box')
        entry = doc[name]
        if 'primitive' in entry:
            try:
                filler = registry[entry['primitive']]
            except PolyflowError as ex:
                raise ValidationError(str(ex), [name, 'primitive'],
                                      'known-primitive')
            if 'bind' in entry:
                filler = TableFiller.from_function(filler.box, filler,
                                                   _domain(entry['bind']))
        else:
            table = []
            for i, row in enumerate(entry['table']):
                path = [name, 'table', i]
                e = parse_elem(box.minus, row['in'], path + ['in'])
                y = Bot if row['out'] is None else \
                    parse_elem(box.plus, row['out'], path + ['out'])
                table.append((e, y))
            try:
                filler = TableFiller(box, table)
            except PolyflowError as ex:
                raise ValidationError(str(ex), [name, 'table'], 'table')
        fillers.append(filler)
    return fillers


def read_fillers(path, diagram):
    return parse_fillers(read_json(path), diagram)


def _outcome_name(outcome):
    return type(outcome).__name__


def _regions(points, names):
    res = []
    for step, p in enumerate(points):
        res.append({'box': OUTER if p.box is None else
                    (names[p.box] if names else 'Box%d' % (p.box + 1)),
                    'side': p.side, 'region': p.region, 'step': step})
    return res


def _returned(doc, outer, outcome):
    if isinstance(outcome, Returned):
        y = outcome.value
        if isinstance(y, Elem):
            check_elem(outer.plus, y)
            doc['output'] = elem_doc(outer.plus, y)
            if len(y.values) == 1:
                doc['value'] = y.values[0]
    return doc


def run_doc(diagram, result):
    """``{"outcome", "value", "output", "steps", "regions"}``."""
    doc = {'outcome': _outcome_name(result.outcome), 'steps': result.steps,
           'regions': _regions(result.trajectory, diagram.names)}
    return _returned(doc, diagram.outer, result.outcome)


def trajectory_doc(diagram, traj):
    """``{"outcome", "regions": [{"box", "side", "region", "step"}]}``."""
    doc = {'outcome': _outcome_name(traj.outcome), 'steps': traj.steps,
           'regions': _regions(traj.points, diagram.names)}
    return _returned(doc, diagram.outer, traj.outcome)


def failed(outcome):
    """Whether an outcome is a refinement of undefined."""
    return isinstance(outcome, (Undefined, Diverged, FuelExhausted))
