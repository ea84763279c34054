import math

import numpy as np
import pytest
from scipy.special import gamma, gammaincc

from wigentropy.errors import DomainError
from wigentropy.special import upper_incomplete_gamma


def test_half_order_value():
    assert upper_incomplete_gamma(0.5, 0.5) == pytest.approx(0.5624182, abs=1e-7)
    assert upper_incomplete_gamma(0.5, 0.0) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


@pytest.mark.parametrize("s", [0.1, 0.5, 1.0, 2.5, 7.0, 10.0])
def test_against_scipy(s):
    for x in np.concatenate([np.linspace(0, 3, 13), [5.0, 11.0, 20.0, 40.0]]):
        ref = gammaincc(s, x) * gamma(s)
        assert upper_incomplete_gamma(s, x) == pytest.approx(ref, rel=1e-12, abs=1e-300)


def test_domain():
    with pytest.raises(DomainError):
        upper_incomplete_gamma(0.0, 1.0)
    with pytest.raises(DomainError):
        upper_incomplete_gamma(0.5, -1.0)
