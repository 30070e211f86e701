import doctest

import alexq.abelian
import alexq.autgroup
import alexq.linearq
import alexq.polymod


def test_module_doctests():
    for mod in (alexq.abelian, alexq.autgroup, alexq.linearq, alexq.polymod):
        result = doctest.testmod(mod)
        assert result.failed == 0, mod.__name__
