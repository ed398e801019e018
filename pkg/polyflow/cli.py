# -*- coding: utf-8 -*-
"""The ``polyflow`` command.

Every subcommand prints JSON on stdout and diagnostics on stderr, and
returns the exit status: 0 on success, 1 when a run is undefined or does
not finish, 2 when a document or argument is rejected, 3 when an internal
check fails.
"""
import argparse
import importlib
import logging
import sys

import polyflow
from .core.failure import (InvariantFailure, PolyflowError,
                           ValidationError, format_failure)
from .dsl import (diagram_doc, dump_json, failed, parse_elem, print_diagram,
                  read_diagram, read_fillers, read_json, load_json, run_doc,
                  trajectory_doc)
from .laws import law_suite, laws
from .operad import WiringDiagram, operad_compose_n
from .para import (ParaMorphism, bypass_example, factorial_program,
                   para_compose_n)
from .primitives import bypass_fillers, factorial_fillers
from .semantics import Domain, Returned, eval_operational, run_domain
from .segment import trajectory_example, trajectory_of


logger = logging.getLogger(__name__)

BUILTINS = {
    'factorial': lambda: (factorial_program(), factorial_fillers()),
    'bypass': lambda: (bypass_example(), bypass_fillers()),
    'traj': trajectory_example,
    'traj-loop': lambda: trajectory_example(loop=True),
}

OK, UNDEFINED, REJECTED, INTERNAL = 0, 1, 2, 3


def _diagram(args):
    """The diagram and the builtin fillers, if any, of ``FILE`` or
    ``--builtin``."""
    if args.builtin:
        return BUILTINS[args.builtin]()
    if not args.file:
        raise ValidationError("give a diagram FILE or --builtin")
    return read_diagram(args.file), None


def _fillers(args, diagram, builtin):
    if args.fillers:
        return read_fillers(args.fillers, diagram)
    if builtin is None:
        raise ValidationError("give --fillers for a diagram read from a "
                              "file")
    return builtin


def _element(text, poly, what):
    doc = read_json(text[1:]) if text.startswith('@') \
        else load_json(text, what)
    return parse_elem(poly, doc, [what])


def _domain(text):
    values = load_json(text, 'domain')
    if not isinstance(values, list) or \
       not all(type(v) is int for v in values):
        raise ValidationError("a domain is a JSON list of integers",
                              ['domain'], 'schema')
    return Domain(tuple(values))


def _shape(d):
    boxes = []
    for k, p in enumerate(d.inner):
        box = {'name': d.box_name(k), 'minus': str(p.minus),
               'plus': str(p.plus)}
        if isinstance(d, ParaMorphism):
            box['bypass'] = str(d.bypass[k])
        boxes.append(box)
    return {'kind': 'para' if isinstance(d, ParaMorphism) else 'diagram',
            'boxes': boxes,
            'outer': {'minus': str(d.outer.minus),
                      'plus': str(d.outer.plus)},
            'routes': len(diagram_doc(d)['wiring'])}


def cmd_check(args):
    d, _ = _diagram(args)
    sys.stdout.write(dump_json(_shape(d)))
    return OK


def cmd_print(args):
    d, _ = _diagram(args)
    sys.stdout.write(print_diagram(d))
    return OK


def _slot(d, slot):
    names = [d.box_name(k) for k in range(len(d.inner))]
    if slot in names:
        return names.index(slot)
    try:
        return int(slot)
    except ValueError:
        raise ValidationError("no box named %r" % (slot,), ['slot'],
                              'known-box')


def cmd_compose(args):
    outer = read_diagram(args.outer)
    inner = read_diagram(args.inner)
    n = _slot(outer, args.slot)
    if isinstance(outer, WiringDiagram) and \
       isinstance(inner, WiringDiagram):
        res = operad_compose_n(outer, n, inner)
    else:
        res = para_compose_n(_para(outer), n, _para(inner))
    text = print_diagram(res)
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return OK


def _para(d):
    return d if isinstance(d, ParaMorphism) else ParaMorphism.from_diagram(d)


def cmd_run(args):
    d, builtin = _diagram(args)
    fillers = _fillers(args, d, builtin)
    start = _element(args.input, d.outer.minus, 'input')
    fuel = polyflow.fuel_default if args.fuel is None else args.fuel
    result = eval_operational(d, fillers, start, fuel=fuel,
                              detect_cycles=args.detect_cycles)
    sys.stdout.write(dump_json(run_doc(d, result)))
    return UNDEFINED if failed(result.outcome) else OK


def cmd_traj(args):
    d, builtin = _diagram(args)
    fillers = _fillers(args, d, builtin)
    start = _element(args.start, d.outer.minus, 'start')
    if args.domain:
        domain = _domain(args.domain)
    else:
        domain = run_domain(d, fillers, start, fuel=args.max)
    traj = trajectory_of(d, fillers, start, domain=domain,
                         max_steps=args.max)
    sys.stdout.write(dump_json(trajectory_doc(d, traj)))
    return OK if isinstance(traj.outcome, Returned) else UNDEFINED


def cmd_laws(args):
    report = law_suite(args.seed, args.cases, args.law or None)
    sys.stdout.write(dump_json(report.as_dict()))
    return OK if report.ok() else INTERNAL


def _add_diagram(p):
    p.add_argument('file', nargs='?', help="diagram document (JSON)")
    p.add_argument('--builtin', choices=sorted(BUILTINS),
                   help="use a built-in diagram and its fillers")


def parser():
    ap = argparse.ArgumentParser(
        prog='polyflow',
        description="Wiring diagrams over polynomial functors, run as "
                    "control-flow programs.")
    ap.add_argument('--debug', action='store_true',
                    help="log debug output to stderr")
    ap.add_argument('--version', action='version',
                    version='%(prog)s ' + polyflow.__version__)
    sub = ap.add_subparsers(dest='cmd', required=True)

    c = sub.add_parser('check', help="validate a diagram, report shapes")
    _add_diagram(c)
    c.set_defaults(func=cmd_check)

    p = sub.add_parser('print', help="print a diagram in canonical form")
    _add_diagram(p)
    p.set_defaults(func=cmd_print)

    n = sub.add_parser('compose', help="nest INNER into a slot of OUTER")
    n.add_argument('outer')
    n.add_argument('slot', help="box name or 0-based index")
    n.add_argument('inner')
    n.add_argument('-o', '--output', default='')
    n.set_defaults(func=cmd_compose)

    r = sub.add_parser('run', help="run a filled diagram on an input")
    _add_diagram(r)
    r.add_argument('--fillers', default='')
    r.add_argument('--input', required=True,
                   help="element as JSON, or @FILE")
    r.add_argument('--fuel', type=int, default=None)
    r.add_argument('--detect-cycles', action='store_true',
                   help="report Diverged when a state repeats")
    r.set_defaults(func=cmd_run)

    t = sub.add_parser('traj', help="trace control by segmentation")
    _add_diagram(t)
    t.add_argument('--fillers', default='')
    t.add_argument('--start', required=True,
                   help="element as JSON, or @FILE")
    t.add_argument('--max', type=int, default=None)
    t.add_argument('--domain', default='',
                   help="values of every direction as a JSON list; by "
                        "default those a run from START carries")
    t.set_defaults(func=cmd_traj)

    w = sub.add_parser('laws', help="check the laws on random instances")
    w.add_argument('--seed', type=int, default=0)
    w.add_argument('--cases', type=int, default=100)
    w.add_argument('--law', action='append', choices=laws.names())
    w.set_defaults(func=cmd_laws)
    return ap


def main(argv=None):
    args = parser().parse_args(argv)
    if args.debug:
        importlib.import_module('polyflow.logging')
    try:
        return args.func(args)
    except InvariantFailure as ex:
        sys.stderr.write(format_failure(ex) + '\n')
        return INTERNAL
    except PolyflowError as ex:
        sys.stderr.write(format_failure(ex) + '\n')
        return REJECTED
    except OSError as ex:
        sys.stderr.write('error: %s\n' % ex)
        return REJECTED
    except Exception as ex:
        logger.debug('Unexpected failure', exc_info=True)
        sys.stderr.write(format_failure(ex) + '\n')
        return INTERNAL


if __name__ == '__main__':
    sys.exit(main())
