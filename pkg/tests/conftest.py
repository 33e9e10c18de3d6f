import sys

import pytest

sys.setrecursionlimit(100000)

from qcartan.coideal import CoidealParams
from qcartan.involutions import build_involution
from qcartan.uqalgebra import Algebra

_ALGEBRAS = {}
_PARAMS = {}


def shared_algebra(family, rank):
    key = (family, rank)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = Algebra(family, rank)
    return _ALGEBRAS[key]


def shared_params(pair, n=None, r=None, **kw):
    key = (pair, n, r, repr(sorted(kw.items())))
    if key not in _PARAMS:
        inv = build_involution(pair, n, r)
        alg = shared_algebra(inv.rd.family, inv.rd.rank)
        _PARAMS[key] = CoidealParams(inv, alg, **kw)
    return _PARAMS[key]


@pytest.fixture
def a2():
    return shared_algebra("A", 2)


@pytest.fixture
def a3():
    return shared_algebra("A", 3)


@pytest.fixture
def a4():
    return shared_algebra("A", 4)
