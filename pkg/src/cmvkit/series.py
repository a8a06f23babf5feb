"""Truncated Taylor series at z = 0 with explicit order bookkeeping.

Orders propagate pessimistically: every binary operation truncates to the
smaller operand order, so a coefficient is only ever reported when it is
fully determined by the inputs. `shift_up` / `shift_down` are the two exact
operations that move the order by one.
"""

from __future__ import annotations

import numpy as np

from ._kernels import cauchy_product
from .errors import BranchMismatchError, ConstantTermMismatchError, ZeroConstantTermError

# |b_0| below this fraction of max |b_k| counts as a vanishing denominator.
DIV_CONSTANT_REL = 1e-13
# a dropped constant term must be this small (relative) in shift_down
SHIFT_CONSTANT_TOL = 1e-10


class TaylorSeries:
    """Complex coefficients ``c_0 .. c_N`` of an analytic germ at z = 0."""

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=complex)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("need a nonempty 1-d coefficient sequence")
        c.flags.writeable = False
        self._c = c

    @property
    def c(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return len(self._c) - 1

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, n: int) -> complex:
        return complex(self._c[n])

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        return isinstance(other, TaylorSeries) and np.array_equal(self._c, other._c)

    def __hash__(self):
        return hash(self._c.tobytes())

    def __repr__(self) -> str:
        return f"TaylorSeries(order={self.order}, c={list(self._c)!r})"

    def truncated(self, order: int) -> "TaylorSeries":
        if order >= self.order:
            return self
        if order < 0:
            raise ValueError("order must be >= 0")
        return TaylorSeries(self._c[: order + 1])

    def evaluate(self, z: complex) -> complex:
        acc = 0j
        for ck in self._c[::-1]:
            acc = acc * z + ck
        return complex(acc)

    def allclose(self, other: "TaylorSeries", tol: float = 1e-12) -> bool:
        n = min(self.order, other.order) + 1
        return bool(np.all(np.abs(self._c[:n] - other._c[:n]) <= tol))

    # arithmetic delegates to the module-level functions
    def __add__(self, other):
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other, self.order))

    def __rsub__(self, other):
        return sub(_coerce(other, self.order), self)

    def __neg__(self):
        return TaylorSeries(-self._c)

    def __mul__(self, other):
        if isinstance(other, TaylorSeries):
            return mul(self, other)
        return TaylorSeries(self._c * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TaylorSeries):
            return div(self, other)
        return TaylorSeries(self._c / complex(other))


def _coerce(x, order: int) -> TaylorSeries:
    if isinstance(x, TaylorSeries):
        return x
    return constant(complex(x), order)


def constant(value: complex, order: int) -> TaylorSeries:
    c = np.zeros(order + 1, dtype=complex)
    c[0] = value
    return TaylorSeries(c)


def add(a: TaylorSeries, b: TaylorSeries) -> TaylorSeries:
    n = min(a.order, b.order) + 1
    return TaylorSeries(a.c[:n] + b.c[:n])


def sub(a: TaylorSeries, b: TaylorSeries) -> TaylorSeries:
    n = min(a.order, b.order) + 1
    return TaylorSeries(a.c[:n] - b.c[:n])


def mul(a: TaylorSeries, b: TaylorSeries) -> TaylorSeries:
    order = min(a.order, b.order)
    return TaylorSeries(cauchy_product(a.c, b.c, order))


def div(a: TaylorSeries, b: TaylorSeries) -> TaylorSeries:
    """Quotient q with q * b = a through the truncation order.

    Raises `ZeroConstantTermError` when the denominator constant term is
    numerically zero relative to the denominator scale (the degenerate case
    where the quotient is not analytic at 0).
    """
    order = min(a.order, b.order)
    bc = b.c[: order + 1]
    scale = float(np.max(np.abs(b.c))) if len(b.c) else 0.0
    b0 = complex(b.c[0])
    if scale == 0.0 or abs(b0) < DIV_CONSTANT_REL * scale:
        raise ZeroConstantTermError(
            f"denominator constant term {b0!r} vanishes relative to scale {scale!r}"
        )
    q = np.empty(order + 1, dtype=complex)
    for n in range(order + 1):
        acc = a.c[n]
        if n:
            acc = acc - np.dot(bc[1 : n + 1], q[n - 1 :: -1])
        q[n] = acc / b0
    return TaylorSeries(q)


def sqrt_branch(a: TaylorSeries, root0: complex) -> TaylorSeries:
    """Square root of `a` with the branch pinned by ``s(0) = root0``."""
    a0 = complex(a.c[0])
    scale = max(1.0, float(np.max(np.abs(a.c))))
    if abs(a0) < DIV_CONSTANT_REL * scale or root0 == 0:
        raise ZeroConstantTermError("square root at a branch point (vanishing constant term)")
    if abs(root0 * root0 - a0) > 1e-10 * max(1.0, abs(a0)):
        raise BranchMismatchError(f"root0**2 = {root0 * root0!r} does not match c_0 = {a0!r}")
    s = np.empty(a.order + 1, dtype=complex)
    s[0] = root0
    for n in range(1, a.order + 1):
        acc = a.c[n]
        if n >= 2:
            acc = acc - np.dot(s[1:n], s[n - 1 : 0 : -1])
        s[n] = acc / (2.0 * s[0])
    return TaylorSeries(s)


def mobius(a: TaylorSeries, m11, m12, m21, m22) -> TaylorSeries:
    """(m11 * a + m12) / (m21 * a + m22); entries may be series or constants."""
    m11 = _coerce(m11, a.order)
    m12 = _coerce(m12, a.order)
    m21 = _coerce(m21, a.order)
    m22 = _coerce(m22, a.order)
    return div(add(mul(m11, a), m12), add(mul(m21, a), m22))


def shift_up(a: TaylorSeries) -> TaylorSeries:
    """Multiply by z; exact, order grows by one."""
    return TaylorSeries(np.concatenate(([0.0 + 0.0j], a.c)))


def shift_down(a: TaylorSeries) -> TaylorSeries:
    """Divide by z, requiring the constant term to vanish; order drops by one."""
    if a.order == 0:
        raise ValueError("cannot shift a constant series down")
    scale = max(1.0, float(np.max(np.abs(a.c))))
    if abs(a.c[0]) > SHIFT_CONSTANT_TOL * scale:
        raise ConstantTermMismatchError(
            f"constant term {complex(a.c[0])!r} must vanish to divide by z"
        )
    return TaylorSeries(a.c[1:])


def geometric(ratio: complex, order: int) -> TaylorSeries:
    """1 / (1 - ratio * z) as a series; handy test fixture."""
    return TaylorSeries([ratio**k for k in range(order + 1)])


def _is_finite(a: TaylorSeries) -> bool:
    return bool(np.all(np.isfinite(a.c.view(float))))


def check_finite(a: TaylorSeries, what: str = "series") -> TaylorSeries:
    if not _is_finite(a):
        raise ValueError(f"{what} contains non-finite coefficients")
    return a


__all__ = [
    "TaylorSeries",
    "add",
    "sub",
    "mul",
    "div",
    "sqrt_branch",
    "mobius",
    "shift_up",
    "shift_down",
    "constant",
    "geometric",
    "check_finite",
    "DIV_CONSTANT_REL",
    "SHIFT_CONSTANT_TOL",
]
