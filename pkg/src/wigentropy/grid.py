"""Uniform sampling lattices, sampled fields and Riemann-sum quadrature.

Every continuous object in the package (wavefunctions on the line, Wigner
and ambiguity functions on the plane) is carried as samples on a uniform,
half-open grid ``x_j = x_min + j * spacing`` for ``j = 0 .. n-1``.  All
integrals are Riemann sums over those samples, which is spectrally accurate
for the Schwartz-class and compactly supported integrands used here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UsageError

__all__ = [
    "INF",
    "HbarConfig",
    "GridSpec1D",
    "GridSpec2D",
    "Field2D",
    "integrate",
    "lq_norm",
    "lq_norm_1d",
    "marginal_x",
    "marginal_p",
    "real_values",
    "default_grid",
]

#: Sentinel exponent for the sup norm.  Compared by identity of value, never
#: raised to as a power.
INF = math.inf

IMAG_TOL = 1e-9


def _fsum(values: np.ndarray) -> float:
    # numpy's pairwise summation: relative error ~ eps * log2(n), far below any tolerance.
    return float(np.sum(values, dtype=np.float64))


@dataclass(frozen=True)
class HbarConfig:
    hbar: float = 1.0
    d: int = 1

    def __post_init__(self):
        if not (self.hbar > 0 and math.isfinite(self.hbar)):
            raise DomainError(f"hbar must be positive, got {self.hbar}")
        if int(self.d) != self.d or self.d < 1:
            raise DomainError(f"dimension d must be a positive integer, got {self.d}")


@dataclass(frozen=True)
class GridSpec1D:
    """Half-open uniform grid on ``[x_min, x_max)`` with ``n`` samples."""

    x_min: float
    x_max: float
    n: int

    def __post_init__(self):
        if not (self.x_max > self.x_min):
            raise DomainError(f"grid needs x_max > x_min, got [{self.x_min}, {self.x_max})")
        if int(self.n) != self.n or self.n < 2 or (self.n & (self.n - 1)):
            raise DomainError(f"grid size must be a power of two, got {self.n}")

    @classmethod
    def symmetric(cls, half_width: float, n: int) -> "GridSpec1D":
        return cls(-float(half_width), float(half_width), int(n))

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / self.n

    @property
    def points(self) -> np.ndarray:
        return self.x_min + self.spacing * np.arange(self.n)

    @property
    def is_symmetric(self) -> bool:
        return math.isclose(self.x_min, -self.x_max, rel_tol=0, abs_tol=1e-12 * self.x_max)

    def coarsened(self) -> "GridSpec1D":
        """Same extent, half the samples (every other point of this grid)."""
        return GridSpec1D(self.x_min, self.x_max, self.n // 2)

    def scaled(self, factor: float) -> "GridSpec1D":
        lo, hi = sorted((self.x_min * factor, self.x_max * factor))
        return GridSpec1D(lo, hi, self.n)

    def index_of(self, x: float) -> int:
        """Index of the grid node equal to ``x`` (raises if ``x`` is not a node)."""
        k = (x - self.x_min) / self.spacing
        j = int(round(k))
        if abs(k - j) > 1e-9 or not 0 <= j < self.n:
            raise DomainError(f"{x} is not a node of {self}")
        return j

    def to_dict(self) -> dict:
        return {"x_min": self.x_min, "x_max": self.x_max, "n": self.n}


@dataclass(frozen=True)
class GridSpec2D:
    """Product lattice for phase-space points ``z = (x, p)``."""

    x_axis: GridSpec1D
    p_axis: GridSpec1D

    @property
    def cell_area(self) -> float:
        return self.x_axis.spacing * self.p_axis.spacing

    @property
    def shape(self) -> tuple[int, int]:
        return (self.x_axis.n, self.p_axis.n)

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.x_axis.points, self.p_axis.points, indexing="ij")

    def coarsened(self) -> "GridSpec2D":
        return GridSpec2D(self.x_axis.coarsened(), self.p_axis.coarsened())

    def to_dict(self) -> dict:
        return {"x": self.x_axis.to_dict(), "p": self.p_axis.to_dict()}


def default_grid(hbar: float = 1.0, n: int = 512, extent: float | None = None) -> GridSpec2D:
    """Square phase-space grid ``[-8 sqrt(hbar), 8 sqrt(hbar))^2``.

    This holds Fock states up to n = 10 with tail mass far below 1e-12.
    """
    half = 8.0 * math.sqrt(hbar) if extent is None else float(extent)
    axis = GridSpec1D.symmetric(half, n)
    return GridSpec2D(axis, axis)


class Field2D:
    """Samples of a scalar function on a :class:`GridSpec2D`.

    Values are copied and frozen at construction; a field never changes.
    """

    __slots__ = ("grid", "values")

    def __init__(self, grid: GridSpec2D, values):
        arr = np.array(values, copy=True)
        if arr.shape != grid.shape:
            raise UsageError(f"values of shape {arr.shape} do not match grid {grid.shape}")
        if not np.all(np.isfinite(arr)):
            raise DomainError("field contains non-finite values")
        arr.setflags(write=False)
        self.grid = grid
        self.values = arr

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self.values)

    def sup(self) -> float:
        return float(np.max(np.abs(self.values))) if self.values.size else 0.0

    def _check_compatible(self, other: "Field2D"):
        if other.grid != self.grid:
            raise UsageError("fields live on different grids")

    def __add__(self, other: "Field2D") -> "Field2D":
        self._check_compatible(other)
        return Field2D(self.grid, self.values + other.values)

    def __sub__(self, other: "Field2D") -> "Field2D":
        self._check_compatible(other)
        return Field2D(self.grid, self.values - other.values)

    def __mul__(self, c) -> "Field2D":
        return Field2D(self.grid, self.values * c)

    __rmul__ = __mul__

    def __repr__(self):
        kind = "complex" if self.is_complex else "real"
        return f"Field2D({kind}, shape={self.grid.shape})"


def real_values(field: Field2D) -> np.ndarray:
    """Real part of ``field``; rejects fields with non-negligible imaginary part.

    Imaginary dust below ``1e-9 * sup|field|`` (transform round-off) is dropped.
    """
    v = field.values
    if not np.iscomplexobj(v):
        return v
    sup = float(np.max(np.abs(v))) if v.size else 0.0
    if float(np.max(np.abs(v.imag))) > IMAG_TOL * max(sup, 1e-300):
        raise DomainError("field has a significant imaginary part")
    return v.real


def integrate(field: Field2D) -> complex | float:
    """Riemann sum ``sum(values) * cell_area`` (compensated summation)."""
    v = field.values
    area = field.grid.cell_area
    if np.iscomplexobj(v):
        return complex(_fsum(v.real), _fsum(v.imag)) * area
    return _fsum(v) * area


def _lq(abs_values: np.ndarray, cell: float, q: float) -> float:
    if q == INF:
        return float(np.max(abs_values)) if abs_values.size else 0.0
    if not (q >= 1):
        raise DomainError(f"L^q norm needs q >= 1, got {q}")
    if q == 1:
        return _fsum(abs_values) * cell
    if q == 2:
        return math.sqrt(_fsum(abs_values * abs_values) * cell)
    return (_fsum(abs_values**q) * cell) ** (1.0 / q)


def lq_norm(field: Field2D, q: float) -> float:
    """``(sum |v|^q * cell_area)^(1/q)``, or ``max |v|`` for ``q = INF``."""
    return _lq(np.abs(field.values), field.grid.cell_area, q)


def lq_norm_1d(values: np.ndarray, spacing: float, q: float) -> float:
    return _lq(np.abs(np.asarray(values)), spacing, q)


def marginal_x(field: Field2D) -> np.ndarray:
    """Position marginal: integral over ``p`` at every ``x`` node."""
    return real_values(field).sum(axis=1) * field.grid.p_axis.spacing


def marginal_p(field: Field2D) -> np.ndarray:
    return real_values(field).sum(axis=0) * field.grid.x_axis.spacing
