"""Independent reference values: adaptive quadrature of the defining integrals."""

import math

import numpy as np
from numpy.polynomial.hermite import hermval
from scipy.integrate import quad


def fock_fn(n, hbar=1.0):
    coef = np.zeros(n + 1)
    coef[n] = 1.0
    norm = 1.0 / math.sqrt(2.0**n * math.factorial(n)) * (math.pi * hbar) ** -0.25

    def f(x):
        u = x / math.sqrt(hbar)
        return norm * hermval(u, coef) * math.exp(-u * u / 2)
    return f


def _cquad(fun, a, b, **kw):
    re = quad(lambda t: fun(t).real, a, b, limit=400, **kw)[0]
    im = quad(lambda t: fun(t).imag, a, b, limit=400, **kw)[0]
    return complex(re, im)


def wigner_quad(f, g, x, p, hbar=1.0, cut=12.0):
    """(pi hbar)^-1 int f(x+s) conj(g(x-s)) e^{-2isp/hbar} ds."""
    val = _cquad(lambda s: f(x + s) * np.conj(g(x - s)) * np.exp(-2j * s * p / hbar), -cut, cut)
    return val / (math.pi * hbar)


def ambiguity_quad(f, g, tau, omega, cut=12.0):
    return _cquad(lambda t: f(t - tau / 2) * np.conj(g(t + tau / 2)) * np.exp(-2j * math.pi * omega * t),
                  -cut, cut)


def fock0_wigner(x, p, hbar=1.0):
    return np.exp(-(x * x + p * p) / hbar) / (math.pi * hbar)


def fock1_wigner(x, p, hbar=1.0):
    r2 = (x * x + p * p) / hbar
    return (2 * r2 - 1) * np.exp(-r2) / (math.pi * hbar)


def mu_marginal_quad(x, hbar=1.0):
    """p-integral of |W h_1| / ||W h_1||_1 by split quadrature around the zero set."""
    l1 = 4 / math.sqrt(math.e) - 1
    mu = lambda p: abs(fock1_wigner(x, p, hbar)) / l1
    c = math.sqrt(max(hbar / 2 - x * x, 0.0))
    pieces = [(-np.inf, -c), (-c, c), (c, np.inf)] if c > 0 else [(-np.inf, 0), (0, np.inf)]
    return sum(quad(mu, a, b, limit=200)[0] for a, b in pieces)
