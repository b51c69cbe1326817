import numpy as np
import pytest

from starinv import make_gauss, make_matrix_ring, make_zn, parse_ring_spec


@pytest.fixture(scope="session")
def zn4():
    return make_zn(4)


@pytest.fixture(scope="session")
def zn6():
    return make_zn(6)


@pytest.fixture(scope="session")
def zn12():
    return make_zn(12)


@pytest.fixture(scope="session")
def gauss3():
    return make_gauss(3)


@pytest.fixture(scope="session")
def m2z2():
    return make_matrix_ring(make_zn(2), 2, "transpose")


@pytest.fixture(scope="session")
def m2z3():
    return make_matrix_ring(make_zn(3), 2, "transpose")


@pytest.fixture(scope="session")
def m2z5():
    return make_matrix_ring(make_zn(5), 2, "transpose")


@pytest.fixture(scope="session")
def m2gauss3():
    return make_matrix_ring(make_gauss(3), 2, "conjugate-transpose")


@pytest.fixture(scope="session")
def core_rings():
    # shared instances so scan tables memoize across acceptance checks
    specs = ["zn(12)", "gauss(3)", "mat(2,zn(2),transpose)",
             "mat(2,zn(3),transpose)", "mat(2,gauss(3),conjtranspose)"]
    return {spec: parse_ring_spec(spec) for spec in specs}


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # trigger jit compilation on a tiny ring so timed tests measure the
    # algorithms, not the compiler
    from starinv.systems import scan_raw, solve_mask
    ring = make_zn(2)
    scan_raw(ring, np.arange(2, dtype=np.int64), ["mp"])
    solve_mask(ring, 1, "drazin", n=0)
    ring.center_mask()
    ring.units_table()


def matching_pyring(ring):
    from oracle import PyRing
    return PyRing(ring.modulus, k=ring.k, gauss=ring.gauss,
                  conj=ring.conj, trans=ring.trans)
