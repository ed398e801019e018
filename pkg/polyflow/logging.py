# -*- coding: utf-8 -*-
"""Debug logging for polyflow.

Importing this module turns on debug logging for the whole process; the
command line imports it for ``--debug``.
"""

import logging

FORMAT = '%(levelname)s %(name)s: %(message)s'


def enable(level=logging.DEBUG):
    logging.basicConfig(level=level, format=FORMAT)
    logging.getLogger().setLevel(level)


enable()
logging.getLogger(__name__).debug('Log started')
