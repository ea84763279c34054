import math

import numpy as np
import pytest

from oracles import fock_fn
from wigentropy.errors import CapabilityError, DomainError
from wigentropy.grid import GridSpec1D, default_grid
from wigentropy.states import (Ket, MixedState, SymplecticMap, bump, fock, gaussian_state, hermite_bump,
                               hermite_functions, matched_gaussian_pair, random_fock_mixture,
                               shifted_copy_mixture, standard_battery)
from wigentropy.states import GaussianParams


def test_fock_values_match_hermite_polynomials(grid):
    x = grid.x_axis.points
    for n in (0, 1, 3, 7):
        ref = np.array([fock_fn(n)(t) for t in x])
        assert np.max(np.abs(fock(n, grid.x_axis).values - ref)) < 1e-12


def test_fock1_at_one(grid):
    # h1(x) = pi^(-1/4) sqrt(2) x exp(-x^2/2)
    assert fock_fn(1)(1.0) == pytest.approx(0.644288, abs=1e-6)
    assert fock(1, grid.x_axis).values[grid.x_axis.index_of(1.0)].real == pytest.approx(0.644288, abs=1e-6)


def test_fock_orthonormal(kets):
    G = np.array([[k.inner(m) for m in kets] for k in kets])
    assert np.max(np.abs(G - np.eye(6))) < 1e-12


def test_fock_limits():
    a = default_grid(1.0, 512).x_axis
    with pytest.raises(CapabilityError):
        fock(21, a)
    with pytest.raises(DomainError):
        fock(-1, a)


def test_hermite_recurrence_stable_for_high_order():
    u = np.linspace(-30, 30, 7)
    h = hermite_functions(200, u)
    assert np.all(np.isfinite(h))


def test_ket_requires_normalization(grid):
    with pytest.raises(DomainError):
        Ket(grid.x_axis, np.ones(grid.x_axis.n))


def test_reflection_on_symmetric_grid(kets):
    assert np.allclose(kets[1].reflected().values, -kets[1].values, atol=1e-12)
    assert np.allclose(kets[2].reflected().values, kets[2].values, atol=1e-12)


def test_mixture_weights_are_validated(kets):
    with pytest.raises(DomainError):
        MixedState(((0.7, kets[0]), (0.7, kets[1])))
    assert MixedState.of([1.0, 3.0], kets[:2]).components[0][0] == pytest.approx(0.25)
    with pytest.raises(DomainError):
        MixedState.of([1.5, -0.5], kets[:2])
    rho = MixedState.of([0.25, 0.75], kets[:2])
    assert rho.spectral and not rho.is_pure


def test_gaussian_state_requires_symplectic_matrix(grid):
    with pytest.raises(DomainError):
        gaussian_state(np.array([[2.0, 0.0], [0.0, 2.0]]), grid=grid.x_axis)
    k = gaussian_state(np.diag([2.0, 0.5]), (0.5, -0.5), grid.x_axis)
    x = grid.x_axis.points
    mean = np.sum(x * np.abs(k.values) ** 2) * grid.x_axis.spacing
    assert mean == pytest.approx(0.5, abs=1e-10)


def test_symplectic_maps():
    R = SymplecticMap.rotation(0.3)
    S = SymplecticMap.squeeze(2.0) @ SymplecticMap.shear(0.7) @ R
    assert np.allclose((S @ S.inverse()).S, np.eye(2))
    with pytest.raises(DomainError):
        SymplecticMap(np.diag([2.0, 2.0]))


def test_matched_pair_shares_quadratic_form(grid):
    f, g = matched_gaussian_pair(GaussianParams(A=0.5, b=0.2, c=-0.3), grid.x_axis)
    assert f.gaussian.A == g.gaussian.A
    assert f.norm() == pytest.approx(1.0) and g.norm() == pytest.approx(1.0)


def test_bump_support_and_hermite_bump(grid):
    b = bump([-1.0, 1.0], grid.x_axis)
    x = grid.x_axis.points
    assert np.all(b.values[np.abs(x) >= 1] == 0)
    hb = hermite_bump([-1.0, 0.0], 5, 6.0, grid.x_axis)
    assert np.all(hb.values[(x > 0) | (x < -1)] == 0)
    with pytest.raises(DomainError):
        bump([1.0, -1.0], grid.x_axis)


def test_shifted_copy_mixture_needs_node_aligned_shifts():
    from wigentropy.states import example2_grid
    G = example2_grid()
    g0 = bump([0.0, 1.0], G.x_axis, p_axis=G.p_axis)
    mix = shifted_copy_mixture(g0, 4)
    assert [s for s, _ in mix.shifts] == [1.0, 2.0, 3.0, 4.0]
    assert sum(mix.weights) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        shifted_copy_mixture(g0, 0)
    odd = GridSpec1D(-2.1, 2.0, 1024)
    with pytest.raises(DomainError):
        shifted_copy_mixture(bump([0.0, 1.0], odd), 2)


def test_battery_is_seeded(grid):
    b1 = standard_battery(grid.x_axis, seed=3)
    b2 = standard_battery(grid.x_axis, seed=3)
    assert len(b1) == 36
    assert [s.label for s in b1.values()] == [s.label for s in b2.values()]
    rng = np.random.default_rng(0)
    m = random_fock_mixture(rng, grid.x_axis)
    assert len(m.components) == 3
