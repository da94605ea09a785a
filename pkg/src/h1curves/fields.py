"""Scalar function objects over one parameter, with derivatives.

A "field" is anything callable on floats/arrays that also offers
``derivative() -> field``.  Parsed expressions (expressions.ScalarFn)
satisfy the protocol natively; this module adds the numeric counterparts
used for sampled curves, antiderivatives and affine assemblies, so that
exact derivative information is preserved wherever it exists.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy.interpolate import CubicSpline

from .expressions import ScalarFn
from .numerics import cumulative_simpson, fd4_first, fd4_second, uniform_grid

__all__ = [
    "as_field",
    "ConstantField",
    "AffineField",
    "SampledField",
    "AntiderivativeField",
    "LinearCombinationField",
    "ProductField",
    "SqrtField",
]

# target spacing for second-derivative stencils: balances the h^4 truncation
# against eps/h^2 roundoff amplification for samples good to ~1e-13
_SECOND_DERIV_STEP = 8e-3


def as_field(value):
    """Coerce a float, expression text or field into a field."""
    if isinstance(value, (int, float)):
        return ConstantField(float(value))
    if isinstance(value, str):
        return ScalarFn.parse(value)
    if callable(value) and hasattr(value, "derivative"):
        return value
    raise TypeError(f"cannot interpret {value!r} as a scalar field")


class ConstantField:
    def __init__(self, value: float):
        self.value = float(value)

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        return np.full(s.shape, self.value) if s.ndim else self.value

    def derivative(self):
        return ConstantField(0.0)


class AffineField:
    """a + b*s."""

    def __init__(self, a: float, b: float):
        self.a, self.b = float(a), float(b)

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        out = self.a + self.b * s
        return out if s.ndim else float(out)

    def derivative(self):
        return ConstantField(self.b)


class SampledField:
    """Values on a uniform grid, evaluated through a cubic interpolant.

    Derivative values are 4th-order finite differences; the second
    derivative widens the stencil (subsampling the grid) so roundoff in the
    stored samples is not amplified past the truncation error.
    """

    def __init__(self, grid: np.ndarray, values: np.ndarray, _order: int = 0, _source=None):
        self.grid = np.asarray(grid, dtype=float)
        self.values = np.asarray(values, dtype=float)
        if self.grid.ndim != 1 or self.grid.size != self.values.size:
            raise ValueError("grid/values shape mismatch")
        if self.grid.size < 7:
            raise ValueError("need at least 7 samples")
        steps = np.diff(self.grid)
        if not np.allclose(steps, steps[0], rtol=1e-9, atol=1e-12):
            raise ValueError("grid must be uniform")
        self.h = float(steps[0])
        self._order = _order
        self._source = _source
        self._spline = None

    @classmethod
    def resample(cls, u: np.ndarray, values: np.ndarray, n: int | None = None):
        """Build from possibly non-uniform samples by cubic resampling."""
        u = np.asarray(u, dtype=float)
        values = np.asarray(values, dtype=float)
        n = n or max(u.size, 64)
        grid = np.linspace(u[0], u[-1], n)
        steps = np.diff(u)
        if u.size == n and np.allclose(steps, steps[0], rtol=1e-9, atol=1e-12):
            return cls(u, values)
        return cls(grid, CubicSpline(u, values)(grid))

    def _interp(self):
        if self._spline is None:
            self._spline = CubicSpline(self.grid, self.values)
        return self._spline

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        out = self._interp()(s)
        return out if s.ndim else float(out)

    def derivative(self):
        if self._order == 0:
            return SampledField(
                self.grid, fd4_first(self.values, self.h), _order=1, _source=self
            )
        if self._order == 1:
            src = self._source
            stride = int(round(_SECOND_DERIV_STEP / src.h))
            stride = max(1, min(stride, (src.grid.size - 1) // 8))
            if stride == 1:
                return SampledField(
                    src.grid, fd4_second(src.values, src.h), _order=2, _source=src
                )
            # two strided passes, anchored at either endpoint, so neither
            # end of the interval relies on spline extrapolation
            n = src.grid.size
            left = np.arange(0, n, stride)
            right = np.arange(n - 1, -1, -stride)[::-1]
            d_left = fd4_second(src.values[left], src.h * stride)
            d_right = fd4_second(src.values[right], src.h * stride)
            cut = n // 2
            keep_l = left <= cut
            keep_r = right > cut
            nodes = np.concatenate([left[keep_l], right[keep_r]])
            vals = np.concatenate([d_left[keep_l], d_right[keep_r]])
            return InterpolatedField(src.grid[nodes], vals)
        raise NotImplementedError("sampled fields support two derivative orders")


class InterpolatedField:
    """Values on arbitrary strictly increasing nodes (cubic interpolation);
    terminal in the derivative chain."""

    def __init__(self, nodes: np.ndarray, values: np.ndarray):
        self.nodes = np.asarray(nodes, dtype=float)
        self.values = np.asarray(values, dtype=float)
        self._spline = CubicSpline(self.nodes, self.values)

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        out = self._spline(s)
        return out if s.ndim else float(out)

    def derivative(self):
        raise NotImplementedError("interpolated fields are not differentiable")


class AntiderivativeField:
    """Cumulative integral of a field from the interval's left endpoint,
    by composite Simpson on a uniform grid.  The exact integrand is kept,
    so ``derivative()`` has no quadrature error."""

    def __init__(self, integrand, lo: float, hi: float, n_panels: int = 10_000, const: float = 0.0):
        # plain callables are fine as integrands; they only lack further
        # derivative orders
        self.integrand = integrand if callable(integrand) else as_field(integrand)
        self.lo, self.hi = float(lo), float(hi)
        self.const = float(const)
        grid = uniform_grid(lo, hi, n_panels)
        values = cumulative_simpson(self.integrand(grid), x=grid, initial=0.0)
        self._spline = CubicSpline(grid, values)
        self.grid = grid

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        out = self._spline(s) + self.const
        return out if s.ndim else float(out)

    def derivative(self):
        return self.integrand


class LinearCombinationField:
    """const + sum(coef * field)."""

    def __init__(self, terms: Sequence[tuple[float, object]], const: float = 0.0):
        self.terms = [(float(c), as_field(f)) for c, f in terms]
        self.const = float(const)

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        out = np.full(s.shape, self.const) if s.ndim else self.const
        for c, f in self.terms:
            out = out + c * f(s)
        return out

    def derivative(self):
        return LinearCombinationField([(c, f.derivative()) for c, f in self.terms])


class ProductField:
    def __init__(self, left, right):
        self.left = as_field(left)
        self.right = as_field(right)

    def __call__(self, s):
        return self.left(s) * self.right(s)

    def derivative(self):
        return LinearCombinationField(
            [
                (1.0, ProductField(self.left.derivative(), self.right)),
                (1.0, ProductField(self.left, self.right.derivative())),
            ]
        )


class SqrtField:
    """sqrt of a nonnegative field; one derivative order supported."""

    def __init__(self, inner):
        self.inner = as_field(inner)

    def __call__(self, s):
        v = np.asarray(self.inner(s), dtype=float)
        if np.any(v < 0.0):
            raise ValueError("sqrt of a negative field value")
        out = np.sqrt(v)
        return out if np.ndim(s) else float(out)

    def derivative(self):
        return _SqrtDerivative(self.inner)


class _SqrtDerivative:
    def __init__(self, inner):
        self.inner = inner
        self._dinner = inner.derivative()

    def __call__(self, s):
        return self._dinner(s) / (2.0 * np.sqrt(self.inner(s)))

    def derivative(self):
        raise NotImplementedError("sqrt fields support one derivative order")
