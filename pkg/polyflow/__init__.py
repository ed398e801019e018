# -*- coding: utf-8 -*-
"""polyflow: wiring diagrams over polynomial functors, run as control-flow
programs.

Settings live here as module globals, read from the environment at import
time and overridable by plain assignment::

    import polyflow
    polyflow.fuel_default = 10 ** 4
"""
import logging
import os


logger = logging.getLogger(__name__)


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning('Ignoring %s=%r: not an integer', name, raw)
        return default


__version__ = "0.3.0"

fuel_default = _env_int('POLYFLOW_FUEL_DEFAULT', 100000)
"""Fuel for operational runs that do not give their own."""

max_domain_size = _env_int('POLYFLOW_MAX_DOMAIN', 100000)
"""Largest set an evaluation may enumerate."""

trajectory_max_steps = 1000
