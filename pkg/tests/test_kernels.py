import numpy as np
import pytest

from optcurves import _kernels_py as pure

try:
    from optcurves import _kernels as compiled
except ImportError:  # pragma: no cover
    compiled = None

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled kernels not built"
)

PRIMES = (3, 5, 7, 11, 23, 61, 101)


def test_backend_selection_env(monkeypatch):
    import importlib

    import optcurves.kernels as k

    monkeypatch.setenv("OPTCURVES_PURE", "1")
    mod = importlib.reload(k)
    assert mod.BACKEND == "python"
    monkeypatch.delenv("OPTCURVES_PURE")
    importlib.reload(k)


@needs_compiled
@pytest.mark.parametrize("p", PRIMES)
def test_chi_table_agreement(p):
    assert np.array_equal(pure.chi_table(p), compiled.chi_table(p))


@needs_compiled
@pytest.mark.parametrize("p", PRIMES)
def test_poly_char_sum_agreement(p, rng):
    chi = pure.chi_table(p)
    for _ in range(10):
        deg = rng.randrange(1, 7)
        coeffs = [rng.randrange(p) for _ in range(deg + 1)]
        assert pure.poly_char_sum(coeffs, p, chi) == compiled.poly_char_sum(
            coeffs, p, compiled.chi_table(p)
        )


@needs_compiled
@pytest.mark.parametrize("p", PRIMES)
def test_ec_trace_agreement(p, rng):
    chi = pure.chi_table(p)
    cchi = compiled.chi_table(p)
    for _ in range(10):
        a, b = rng.randrange(p), rng.randrange(p)
        assert pure.ec_trace(a, b, p, chi) == compiled.ec_trace(a, b, p, cchi)


@needs_compiled
@pytest.mark.parametrize("p", (11, 23, 61))
def test_branch_sweep_agreement(p, rng):
    chi = pure.chi_table(p)
    cchi = compiled.chi_table(p)
    for _ in range(5):
        a, b = rng.randrange(p), rng.randrange(1, p)
        assert np.array_equal(
            pure.branch_sweep(a, b, p, chi), compiled.branch_sweep(a, b, p, cchi)
        )


@needs_compiled
@pytest.mark.parametrize("p", (11, 31, 61, 101))
def test_fifth_power_table_agreement(p):
    assert np.array_equal(pure.fifth_power_table(p), compiled.fifth_power_table(p))


def test_pure_kernels_consistent_with_field():
    from optcurves.ff import field_for_q

    for p in (7, 23):
        f = field_for_q(p)
        chi = pure.chi_table(p)
        for x in range(p):
            assert int(chi[x]) == f.chi(x)
