import pytest

from eqcodes import field_new, kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # trigger JIT compilation once so timed tests measure the algorithms
    kernels.warmup()


@pytest.fixture(scope="session")
def gf2():
    return field_new(2, 1)


@pytest.fixture(scope="session")
def gf3():
    return field_new(3, 1)


@pytest.fixture(scope="session")
def gf4():
    return field_new(2, 2)


@pytest.fixture(scope="session")
def gf5():
    return field_new(5, 1)
