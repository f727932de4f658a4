import pytest

from charhopf import ParamTable, ShuffleAlgebra, SkewGroupAlgebra


@pytest.fixture(scope="module")
def A():
    return SkewGroupAlgebra(ParamTable.free(2))


@pytest.fixture(scope="module")
def S(A):
    return ShuffleAlgebra(A.params)


@pytest.fixture(scope="module")
def G2():
    params = ParamTable.g2()
    return SkewGroupAlgebra(params), ShuffleAlgebra(params)
