# -*- coding: utf-8 -*-
import logging
import unittest

logging.basicConfig(level=logging.INFO)


def test_suite(suites=[], cases=[]):
    new_suites = [x.Tests for x in suites]
    new_cases = [unittest.defaultTestLoader.loadTestsFromTestCase(x.Tests)
                 for x in cases]
    return unittest.TestSuite(new_cases + new_suites)


from . import test_case_classes
from . import test_core
from . import test_sets
from . import test_trace
from . import test_laws
from . import test_operad
from . import test_para
from . import test_semantics
from . import test_primitives
from . import test_segment
from . import test_dsl
from . import test_cli


Tests = test_suite(cases=[
    test_case_classes,
    test_core,
    test_sets,
    test_trace,
    test_laws,
    test_operad,
    test_para,
    test_semantics,
    test_primitives,
    test_segment,
    test_dsl,
    test_cli,
])
