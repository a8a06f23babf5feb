"""Finite CMV matrices: block factorization, half-lattice splitting, resolvents.

A window with both boundary cuts yields a finite unitary matrix acting on the
lattice sites [kmin - 1, kmax]: the cuts force the 2x2 block straddling each
boundary to be diagonal, so the doubly infinite operator decouples and the
middle summand is the matrix built here. Matrix row/column 0 corresponds to
lattice site `offset` = kmin - 1, which must be even (fixed bookkeeping
convention; the blocks of the first factor then start at an odd row).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import matpow_entry_table
from .coeffs import VerblunskyWindow, rho_of
from .errors import IndexWindowError, ParityAlignmentError, SingularSolveError
from .series import TaylorSeries


@dataclass(frozen=True, eq=False)
class FiniteCMV:
    """Dense unitary matrix with an integer lattice offset for row/column 0."""

    offset: int
    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=complex)
        if e.ndim != 2 or e.shape[0] != e.shape[1] or e.shape[0] == 0:
            raise ValueError("entries must be a nonempty square matrix")
        e = e.copy()
        e.flags.writeable = False
        object.__setattr__(self, "entries", e)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def top(self) -> int:
        """Lattice index of the last row/column."""
        return self.offset + self.dim - 1

    def row(self, k: int) -> int:
        if not self.offset <= k <= self.top:
            raise IndexWindowError(f"site {k} outside operator range [{self.offset}, {self.top}]")
        return k - self.offset

    def entry(self, k: int, kp: int) -> complex:
        return complex(self.entries[self.row(k), self.row(kp)])

    def unitarity_defect(self) -> float:
        d = self.entries @ self.entries.conj().T - np.eye(self.dim)
        return float(np.max(np.abs(d)))

    def to_csv(self, path) -> None:
        """Debug dump: interleaved re/im entries, row-major; offset in a comment."""
        with open(path, "w", encoding="ascii") as fh:
            fh.write(f"# offset={self.offset} dim={self.dim}\n")
            for row in self.entries:
                cells = []
                for v in row:
                    cells.append(repr(v.real))
                    cells.append(repr(v.imag))
                fh.write(",".join(cells) + "\n")


@dataclass(frozen=True)
class GreenSeriesPair:
    """Taylor data at z = 0 of the diagonal and first off-diagonal Green entries."""

    g: TaylorSeries
    h: TaylorSeries
    k0: int

    def __post_init__(self):
        if self.g.order != self.h.order:
            raise ValueError("g and h must carry the same truncation order")


def _window_lookup(window: VerblunskyWindow, replace: dict | None = None):
    """Coefficient accessor returning (value, is_cut); cut sites get rho = 0 exactly."""

    def look(k: int):
        if replace is not None and k in replace:
            return replace[k], True
        if k == window.kmin - 1:
            if window.cut_left is None:
                raise ParityAlignmentError(
                    "window has no left cut: the boundary block cannot be completed"
                )
            return window.cut_left, True
        if k == window.kmax + 1:
            if window.cut_right is None:
                raise ParityAlignmentError(
                    "window has no right cut: the boundary block cannot be completed"
                )
            return window.cut_right, True
        return window[k], False

    return look


def _check_alignment(window: VerblunskyWindow) -> tuple[int, int]:
    lo, hi = window.kmin - 1, window.kmax
    if window.cut_left is None or window.cut_right is None:
        raise ParityAlignmentError("both boundary cuts are required to build a finite matrix")
    if lo % 2 != 0:
        raise ParityAlignmentError(
            f"matrix origin (site {lo}) must be even; shift the window by one site"
        )
    return lo, hi


def _vw_entries(look, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Place the 2x2 blocks: block j couples sites (j - 1, j); even j goes to
    the first factor, odd j to the second. Straddling boundary blocks must be
    cuts and contribute their diagonal remnant only."""
    n = hi - lo + 1
    v = np.zeros((n, n), dtype=complex)
    w = np.zeros((n, n), dtype=complex)
    for j in range(lo, hi + 2):
        target = v if j % 2 == 0 else w
        a, is_cut = look(j)
        r = 0.0 if is_cut else rho_of(a)
        if lo < j <= hi:
            i = j - 1 - lo
            target[i, i] = -a
            target[i, i + 1] = r
            target[i + 1, i] = r
            target[i + 1, i + 1] = a.conjugate()
        elif j == lo:
            if not is_cut:
                raise ParityAlignmentError(f"site {j} straddles the boundary and is not a cut")
            target[0, 0] = a.conjugate()
        else:  # j == hi + 1
            if not is_cut:
                raise ParityAlignmentError(f"site {j} straddles the boundary and is not a cut")
            target[n - 1, n - 1] = -a
    return v, w


def _closed_form_entries(look, lo: int, hi: int) -> np.ndarray:
    """Direct five-diagonal entry formula (independent of the block product)."""
    n = hi - lo + 1
    u = np.zeros((n, n), dtype=complex)

    def coeff(k):
        return look(k)[0]

    def rho(k):
        a, is_cut = look(k)
        return 0.0 if is_cut else rho_of(a)

    for k in range(lo, hi + 1):
        i = k - lo
        if k % 2 == 0:
            if k - 2 >= lo:
                u[i, i - 2] = rho(k - 1) * rho(k)
            if k - 1 >= lo:
                u[i, i - 1] = coeff(k - 1).conjugate() * rho(k)
            u[i, i] = -coeff(k).conjugate() * coeff(k + 1)
            if k + 1 <= hi:
                u[i, i + 1] = coeff(k).conjugate() * rho(k + 1)
        else:
            if k - 1 >= lo:
                u[i, i - 1] = -coeff(k + 1) * rho(k)
            u[i, i] = -coeff(k).conjugate() * coeff(k + 1)
            if k + 1 <= hi:
                u[i, i + 1] = -coeff(k + 2) * rho(k + 1)
            if k + 2 <= hi:
                u[i, i + 2] = rho(k + 1) * rho(k + 2)
    return u


def build_vw(window: VerblunskyWindow) -> tuple[FiniteCMV, FiniteCMV]:
    """The two block-diagonal unitary factors of the finite matrix."""
    lo, hi = _check_alignment(window)
    v, w = _vw_entries(_window_lookup(window), lo, hi)
    return FiniteCMV(lo, v), FiniteCMV(lo, w)


def build_full(window: VerblunskyWindow) -> FiniteCMV:
    """The finite unitary five-diagonal matrix, as the product of the factors."""
    v, w = build_vw(window)
    return FiniteCMV(v.offset, v.entries @ w.entries)


def closed_form(window: VerblunskyWindow) -> FiniteCMV:
    """Same matrix via the banded entry formulas; oracle for `build_full`."""
    lo, hi = _check_alignment(window)
    return FiniteCMV(lo, _closed_form_entries(_window_lookup(window), lo, hi))


def _split_full(window: VerblunskyWindow, k0: int, s: float = 0.0) -> FiniteCMV:
    """Full matrix with the site-k0 coefficient replaced by the phase e^{is}."""
    lo, hi = _check_alignment(window)
    if not window.kmin <= k0 <= window.kmax:
        raise IndexWindowError(f"split site {k0} outside window [{window.kmin}, {window.kmax}]")
    cut = complex(math.cos(s), math.sin(s))
    v, w = _vw_entries(_window_lookup(window, replace={k0: cut}), lo, hi)
    return FiniteCMV(lo, v @ w)


def split_half(
    window: VerblunskyWindow, k0: int, s: float = 0.0
) -> tuple[FiniteCMV, FiniteCMV]:
    """Decouple at site k0 by setting alpha_k0 = e^{is}.

    Returns the two unitary diagonal blocks: the first acts on sites
    [kmin - 1, k0 - 1], the second on [k0, kmax]. Their direct sum is exactly
    the full matrix of the modified window (the cross coupling vanishes
    identically because the replaced site carries rho = 0 by construction).
    """
    full = _split_full(window, k0, s)
    m = k0 - full.offset
    minus = FiniteCMV(full.offset, full.entries[:m, :m])
    plus = FiniteCMV(k0, full.entries[m:, m:])
    return minus, plus


def half_lattice(window: VerblunskyWindow, k0: int, side: str) -> FiniteCMV:
    """Truncated half-lattice operator with distinguished endpoint k0.

    side "plus": cut at k0, block on [k0, kmax]; side "minus": cut at k0 + 1,
    block on [kmin - 1, k0]. Default phase s = 0 in both cases.
    """
    if side == "plus":
        return split_half(window, k0)[1]
    if side == "minus":
        return split_half(window, k0 + 1)[0]
    raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")


def resolvent_entry(u: FiniteCMV, z: complex, k: int, kp: int) -> complex:
    """Entry (k, kp) of (U - zI)^{-1} via a dense partial-pivoted solve."""
    i, j = u.row(k), u.row(kp)
    rhs = np.zeros(u.dim, dtype=complex)
    rhs[j] = 1.0
    try:
        x = np.linalg.solve(u.entries - complex(z) * np.eye(u.dim), rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSolveError(f"z = {z!r} is (numerically) an eigenvalue") from exc
    return complex(x[i])


def green_series(u: FiniteCMV, k0: int, order: int) -> GreenSeriesPair:
    """Taylor data at z = 0 of g(., k0) and h(., k0) through the given order.

    Coefficient n is the relevant entry of U^{-(n+1)}, extracted by repeated
    application of the adjoint to a basis vector; no eigendecomposition.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if not u.offset + 1 <= k0 <= u.top:
        raise IndexWindowError(
            f"k0 = {k0} needs sites k0 - 1 and k0 inside [{u.offset}, {u.top}]"
        )
    rg = u.row(k0)
    if k0 % 2 != 0:
        table = matpow_entry_table(u.entries, rg, [rg, rg - 1], order + 1, True)
        g = TaylorSeries(table[:, 0])
        h = TaylorSeries(table[:, 1])
    else:
        tg = matpow_entry_table(u.entries, rg, [rg], order + 1, True)
        th = matpow_entry_table(u.entries, rg - 1, [rg], order + 1, True)
        g = TaylorSeries(tg[:, 0])
        h = TaylorSeries(th[:, 0])
    return GreenSeriesPair(g, h, k0)
