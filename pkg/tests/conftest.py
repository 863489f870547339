import time

import pytest

from zerogap import characters, harness, lfunc, zeroscan


@pytest.fixture(scope="session")
def zeta_spec():
    return lfunc.make_zeta()


@pytest.fixture(scope="session")
def chi3_spec():
    return lfunc.make_dirichlet(characters.primitive_characters(3)[0])


@pytest.fixture(scope="session")
def chi4_spec():
    return lfunc.make_dirichlet(characters.primitive_characters(4)[0])


@pytest.fixture(scope="session")
def chi5_spec():
    chi = [c for c in characters.primitive_characters(5) if c.order == 2][0]
    return lfunc.make_dirichlet(chi)


@pytest.fixture(scope="session")
def builtin_specs():
    """The acceptance list: zeta, all primitive chi for small q, three
    quadratic Dedekind zetas."""
    specs = [lfunc.make_zeta()]
    for q in (3, 4, 5, 7, 8, 11):
        for chi in characters.primitive_characters(q):
            specs.append(lfunc.make_dirichlet(chi))
    for D in (5, -3, -4):
        specs.append(lfunc.make_dedekind_quadratic(D))
    return specs


@pytest.fixture(scope="session")
def zeta_scan_30(zeta_spec):
    return zeroscan.find_zeros(zeta_spec, 0.0, 30.0, 0.05)


@pytest.fixture(scope="session")
def zeta_scan_1000(zeta_spec):
    return zeroscan.find_zeros(zeta_spec, 0.0, 1000.0, 0.05)


@pytest.fixture(scope="session")
def dirichlet_sweep_q100():
    """The full q <= 100 lowest-zero sweep, with its wall time."""
    cfg = harness.SweepConfig(family="dirichlet", q_min=3, q_max=100,
                              step=0.05, window=10.0)
    t0 = time.time()
    report = harness.run_scan(cfg)
    return report, time.time() - t0


@pytest.fixture(scope="session")
def dedekind_sweep_200():
    cfg = harness.SweepConfig(family="dedekind", d_min=3, d_max=200,
                              step=0.05, window=12.0)
    return harness.run_scan(cfg)
