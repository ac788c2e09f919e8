import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import assert_close, normalized_params
from optomech.entanglement import (
    BipartiteCM,
    classify_tripartite,
    log_negativity,
    npt_test,
    reduce,
)
from optomech.errors import BadIndex, NonPhysicalInput
from optomech.model import build_linearized
from optomech.steadystate import steady_covariance, symplectic_form


def two_mode_squeezed(r):
    c, s = math.cosh(2 * r) / 2, math.sinh(2 * r) / 2
    return BipartiteCM(a=c * np.eye(2), b=c * np.eye(2),
                       c=s * np.diag([1.0, -1.0]))


def thermal_product(n1, n2):
    return BipartiteCM(a=(n1 + 0.5) * np.eye(2), b=(n2 + 0.5) * np.eye(2),
                       c=np.zeros((2, 2)))


def test_two_mode_squeezed_closed_form():
    # E_N of the pure two-mode squeezed state is exactly 2r
    for r in (0.3, 0.8, 1.5):
        assert_close(log_negativity(two_mode_squeezed(r)), 2 * r, 1e-10,
                     f"r={r}")


def test_product_states_carry_no_negativity():
    assert log_negativity(thermal_product(0.0, 0.0)) == 0.0
    assert log_negativity(thermal_product(3.0, 0.2)) == 0.0


def test_log_negativity_direct_spectral_cross_check(fig1a_model):
    """Independent route: smallest |eig| of iJ V-tilde, V-tilde the momentum-
    flipped covariance, vs the closed-form symplectic-invariant route."""
    v = steady_covariance(fig1a_model)
    j4 = symplectic_form(2)
    for pair in ((0, 2), (1, 2), (0, 1)):
        v4 = reduce(v, pair).matrix
        lam = np.diag([1.0, 1.0, 1.0, -1.0])
        vpt = lam @ v4 @ lam
        eta = min(abs(np.linalg.eigvals(1j * j4 @ vpt)))
        want = max(0.0, -math.log(2.0 * eta))
        assert_close(log_negativity(v4), want, 1e-8, f"pair={pair}")


def test_log_negativity_rejects_nonphysical():
    v = np.zeros((4, 4))
    with pytest.raises(NonPhysicalInput):
        log_negativity(v)


def test_reduce_blocks_and_order(fig1a_model):
    v = steady_covariance(fig1a_model)
    solo = reduce(v, (1,))
    assert np.array_equal(solo, v[2:4, 2:4])
    pair = reduce(v, (0, 2))
    assert np.array_equal(pair.a, v[0:2, 0:2])
    assert np.array_equal(pair.b, v[4:6, 4:6])
    assert np.array_equal(pair.c, v[0:2, 4:6])
    swapped = reduce(v, (2, 0))
    assert np.array_equal(swapped.a, v[4:6, 4:6])
    named = reduce(v, ("mode1", "cavity"))
    assert np.array_equal(named.matrix, pair.matrix)
    # negativity is symmetric under subsystem exchange
    assert_close(log_negativity(pair), log_negativity(swapped), 1e-12)


def test_reduce_rejects_bad_subsystems(fig1a_model):
    v = steady_covariance(fig1a_model)
    for bad in ((0, 0), (3,), (-1,), ()):
        with pytest.raises(BadIndex):
            reduce(v, bad)


def test_npt_test_matches_classification_eigs(fig1a_model):
    v = steady_covariance(fig1a_model)
    rep = classify_tripartite(v)
    for k in range(3):
        assert_close(npt_test(v, k), rep.min_eigs[k], 1e-12)
    # sign consistency between the 1x2 eigenvalues and the 1x1 negativities:
    # a negative mode-k test with zero pairwise negativity is still legal
    # (k can be entangled with the pair jointly), but a positive test with
    # all pairwise negativity on k is not
    for k, neg in ((0, rep.negativities[0]), (1, rep.negativities[1])):
        if neg > 1e-9:
            assert rep.min_eigs[k] < 0


def test_thermal_product_tripartite_undetected():
    # diagonal covariance: any momentum flip leaves it unchanged, so every
    # test eigenvalue is the smallest occupancy, here 1
    v = np.diag([1.5, 1.5, 2.5, 2.5, 1.5, 1.5])
    rep = classify_tripartite(v)
    assert rep.class_label == "npt-undetected"
    assert not rep.ambiguous
    assert rep.negativities == (0.0, 0.0, 0.0)
    for eig in rep.min_eigs:
        assert_close(eig, 1.0, 1e-12)


def test_vacuum_product_is_flagged_ambiguous():
    rep = classify_tripartite(np.eye(6) * 0.5)
    assert rep.ambiguous


def test_classify_rejects_wrong_size(fig1a_model):
    with pytest.raises(BadIndex):
        classify_tripartite(np.eye(4) * 0.5)


def _random_local_symplectic(rng):
    def sp2():
        t1, t2 = rng.uniform(0, 2 * np.pi, size=2)
        s = rng.uniform(-0.8, 0.8)
        rot = lambda t: np.array([[np.cos(t), np.sin(t)],
                                  [-np.sin(t), np.cos(t)]])
        return rot(t1) @ np.diag([np.exp(s), np.exp(-s)]) @ rot(t2)
    out = np.zeros((4, 4))
    out[:2, :2] = sp2()
    out[2:, 2:] = sp2()
    return out


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_negativity_invariant_under_local_symplectics(seed):
    rng = np.random.default_rng(seed)
    r = rng.uniform(0.1, 1.2)
    n_extra = rng.uniform(0.0, 2.0)
    v = two_mode_squeezed(r).matrix + n_extra * np.eye(4)
    base = log_negativity(v)
    s = _random_local_symplectic(rng)
    j4 = symplectic_form(2)
    assert np.allclose(s @ j4 @ s.T, j4, atol=1e-10)
    assert_close(log_negativity(s @ v @ s.T), base, 1e-8)
