"""Every docstring example in the package must keep working."""

import doctest

import qcongruence.bigpoly
import qcongruence.constructs
import qcongruence.cyclotomic
import qcongruence.cycmodfield
import qcongruence.qseries
import qcongruence.verifier

MODULES = [
    qcongruence.bigpoly,
    qcongruence.cyclotomic,
    qcongruence.qseries,
    qcongruence.constructs,
    qcongruence.cycmodfield,
    qcongruence.verifier,
]


def test_module_doctests():
    for mod in MODULES:
        result = doctest.testmod(mod)
        assert result.failed == 0, mod.__name__
        assert result.attempted > 0, f"{mod.__name__} lost its examples"
