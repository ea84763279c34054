import math

import numpy as np
import pytest

from wigentropy.errors import DomainError, ResolutionError, UsageError
from wigentropy.functionals import (EPS_MAX, discrete_entropy, j_functional, k_epsilon, k_epsilon_lower_bound,
                                    l1_mass, lieb_ambiguity_entropy, mu_of, nu_entropy, nu_of, product_entropy,
                                    purity, renyi_entropy, wigner_entropy, xi)
from wigentropy.grid import INF, Field2D, default_grid, integrate
from wigentropy.states import MixedState, fock
from wigentropy.transforms import WignerField, ambiguity, wigner_of, wigner_pure


@pytest.fixture(scope="module")
def w0(kets):
    return wigner_pure(kets[0])


def test_mu_is_a_probability_density(kets):
    m = mu_of(wigner_pure(kets[1]))
    assert integrate(m.mu) == pytest.approx(1.0, abs=1e-12)
    assert m.l1_mass_of_source == pytest.approx(4 / math.sqrt(math.e) - 1, abs=1e-4)


def test_renyi_values_for_vacuum(w0):
    assert renyi_entropy(w0, 2.0) == pytest.approx(math.log(2 * math.pi), abs=1e-6)
    assert renyi_entropy(w0, 3.0) == pytest.approx(1.69404, abs=1e-5)
    assert renyi_entropy(w0, INF) == pytest.approx(math.log(math.pi), abs=1e-9)
    with pytest.raises(DomainError):
        renyi_entropy(w0, 1.0)


def test_renyi_tends_to_shannon(kets):
    w = wigner_pure(kets[2])
    S = wigner_entropy(w)
    assert renyi_entropy(w, 1.0001) == pytest.approx(S, abs=1e-3)
    assert renyi_entropy(w, 1.5) < S


def test_purity(kets):
    assert purity(wigner_pure(kets[3])) == pytest.approx(1.0, abs=1e-10)
    rho = MixedState.of([0.2, 0.3, 0.5], kets[:3])
    assert purity(wigner_of(rho)) == pytest.approx(0.04 + 0.09 + 0.25, abs=1e-10)


def test_j_and_k_functionals(w0, kets):
    assert j_functional(w0, 2.0) == pytest.approx(math.pi / 2, abs=1e-9)
    assert j_functional(w0, 1.0) == pytest.approx(math.pi, abs=1e-9)
    for k in (w0, wigner_pure(kets[2])):
        H = nu_entropy(k)
        for eps in (0.3, 0.1, 0.01):
            K = k_epsilon(k, eps)
            assert k_epsilon_lower_bound(eps) <= K + 1e-9
            assert K <= H + 1e-9
    assert k_epsilon(w0, 1e-3) == pytest.approx(nu_entropy(w0), abs=5e-2)
    with pytest.raises(DomainError):
        k_epsilon(w0, EPS_MAX)


def test_nu_identity(kets):
    w = wigner_pure(kets[4])
    assert nu_of(w).nu.sup() <= 1 + 1e-9
    assert nu_entropy(w) == pytest.approx(math.pi * (wigner_entropy(w) - math.log(math.pi)), rel=1e-10)


def test_xi_values():
    assert xi(0.75, 1.5) == pytest.approx(0.549306, abs=1e-6)
    assert xi(0.5 + 1e-9, 1.5) == pytest.approx(math.log(2), abs=1e-7)
    with pytest.raises(DomainError):
        xi(0.4, 1.5)
    with pytest.raises(DomainError):
        xi(0.9, 2.5)


def test_lieb_ambiguity_entropy(kets):
    assert lieb_ambiguity_entropy(ambiguity(kets[0], kets[0])) == pytest.approx(1.0, abs=1e-6)
    assert lieb_ambiguity_entropy(ambiguity(kets[0], kets[1])) > 1.0


def test_discrete_entropy_and_product():
    v = np.array([0.0, 0.5, 0.5])
    assert discrete_entropy(v, 1.0) == pytest.approx(math.log(2))
    assert product_entropy([1.0, 2.5]) == 3.5


def test_measure_guards():
    g = default_grid(1.0, 64)
    cell = g.cell_area
    vals = np.zeros(g.shape)
    vals[32, 32] = 1.0 / cell
    w = WignerField(Field2D(g, vals), check=False)
    with pytest.raises(ResolutionError):
        nu_of(w)
    half = WignerField(Field2D(g, 0.5 * vals), check=False)
    with pytest.raises(ResolutionError):
        mu_of(half)
    with pytest.raises(UsageError):
        from wigentropy.transforms import AmbiguityField
        lieb_ambiguity_entropy(AmbiguityField(Field2D(g, 0.5 * np.ones(g.shape) / 64), 1.0))
