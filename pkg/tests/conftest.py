import pytest

from hyperval.padic import make_field

# The standard desk-scale fields used across the suite.


@pytest.fixture(scope="session")
def q2():
    return make_field(p=2, f=1, e=1, eis=[-2, 1], h=[0, 1], N=12, n=2)


@pytest.fixture(scope="session")
def q3():
    return make_field(p=3, f=1, e=1, eis=[-3, 1], h=[0, 1], N=12, n=1)


@pytest.fixture(scope="session")
def q5():
    return make_field(p=5, f=1, e=1, eis=[-5, 1], h=[0, 1], N=12, n=1)


@pytest.fixture(scope="session")
def q2_sqrt2():
    return make_field(p=2, f=1, e=2, eis=[-2, 0, 1], h=[0, 1], N=24, n=2)


@pytest.fixture(scope="session")
def q5_sqrt5():
    return make_field(p=5, f=1, e=2, eis=[-5, 0, 1], h=[0, 1], N=16, n=1)


@pytest.fixture(scope="session")
def q5_sqrt20():
    return make_field(p=5, f=1, e=2, eis=[-20, 0, 1], h=[0, 1], N=16, n=1)


@pytest.fixture(scope="session")
def q5_sqrt10():
    return make_field(p=5, f=1, e=2, eis=[-10, 0, 1], h=[0, 1], N=16, n=1)


@pytest.fixture(scope="session")
def w_f4():
    # the unramified quadratic extension of Q_2, residue field F_4
    return make_field(p=2, f=2, e=1, eis=[-2, 1], h=[1, 1, 1], N=12, n=1)
