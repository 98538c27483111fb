import numpy as np
import pytest
from service.gf import field_make
from service.grassmann import enumerate_grassmannian, subspace_make
from service.regularity import standard_system

def axes(spec, n, *which):
    return subspace_make([[1 if j == i else 0 for j in range(n)] for i in which], n, spec)

@pytest.fixture(scope='function')
def gf2():
    return field_make(2)

@pytest.fixture(scope='function')
def gf3():
    return field_make(3)

@pytest.fixture(scope='function')
def gf4():
    return field_make(4)

@pytest.fixture(scope='function')
def g24(gf2):
    return enumerate_grassmannian(4, 2, gf2)

@pytest.fixture(scope='function')
def std4(gf2):
    return standard_system(gf2, 4)

@pytest.fixture(scope='function')
def rng():
    return np.random.default_rng(7)

@pytest.fixture(scope='function')
def span_axes():
    return axes
