# -*- coding: utf-8 -*-
"""Deterministic step-by-step walks: traces, token machines and
trajectories all run through `Walker`."""

import logging

from ..case_classes import CaseClass


logger = logging.getLogger(__name__)

STOPPED = 'stopped'
CYCLE = 'cycle'
FUEL = 'fuel'


class Walk(CaseClass):
    """The result of a walk: the final state, everything collected, how it
    ended (`STOPPED`, `CYCLE` or `FUEL`) and the number of steps taken."""
    _fields = ('state', 'collected', 'status', 'steps')


class Walker(object):
    """Turns a step function into a walk:

    @Walker
    def step(state, **kw):
        ...
        return new_state

    and then:

    walk = step.run(initial_state)
    walk = step.run(initial_state, fuel=100, key=lambda s: s, **ctx)
    collected = step.collect(initial_state, **ctx)

    Besides the state, every step receives these keywords:

    - `set_ctx(name=value)`: every later step receives `name=value`.
    - `collect(thing)`: appends `thing` to the walk's `collected`.
    - `stop`: when called via `stop()`, the state returned by this step is
      the final one.

    The walk is bounded two ways. With `key`, the key of each state is
    remembered before it is stepped and meeting a key again ends the walk
    with status `CYCLE`. With `fuel`, at most that many steps are taken
    and running out ends the walk with status `FUEL`.

    A step names the keywords it uses:

    @Walker
    def step(state, table, stop, **kw):
        if state not in table:
            stop()
        return table.get(state)
    """
    def __init__(self, func):
        self.func = func

    def run(self, state, fuel=None, key=None, **kw):
        """Walk from `state` until the step function stops or a bound is
        hit."""
        collected = []
        ctx = dict(kw)
        seen = set()
        steps = 0
        while True:
            if key is not None:
                k = key(state)
                if k in seen:
                    status = CYCLE
                    break
                seen.add(k)
            if fuel is not None and steps >= fuel:
                status = FUEL
                break
            stop_now = [False]

            def stop():
                stop_now[0] = True

            def set_ctx(**new_kw):
                ctx.update(new_kw)

            new_state = self.func(
                state=state,
                collect=collected.append,
                set_ctx=set_ctx,
                stop=stop,
                **ctx
            )
            steps += 1
            if new_state is not None:
                state = new_state
            if stop_now[0]:
                status = STOPPED
                break

        logger.debug('Walk %s ended (%s) after %d steps',
                     self.func.__name__, status, steps)
        return Walk(state, tuple(collected), status, steps)

    def collect(self, state, **kw):
        """Walk from `state` and return what was collected along the
        way."""
        return self.run(state, **kw).collected
