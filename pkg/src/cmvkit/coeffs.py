"""Verblunsky coefficient windows and the per-site derived quantities.

A window assigns coefficients inside the open unit disk to a finite integer
interval [kmin, kmax]. The optional boundary cuts are unimodular values
assigned to the two sites just outside the interval (kmin - 1 and kmax + 1);
they decouple the lattice so a finite unitary matrix on [kmin - 1, kmax]
exists. Nothing outside the window is ever assumed to be zero.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, IndexWindowError

CUT_UNIMODULAR_TOL = 1e-12


@dataclass(frozen=True)
class DerivedCoeffs:
    """rho = sqrt(1 - |alpha|^2) together with a = 1 + alpha, b = 1 - alpha."""

    rho: float
    a: complex
    b: complex


def derived(alpha: complex) -> DerivedCoeffs:
    """Derived quantities of a coefficient strictly inside the disk."""
    alpha = complex(alpha)
    mag2 = alpha.real * alpha.real + alpha.imag * alpha.imag
    if mag2 >= 1.0:
        raise DomainError(f"coefficient {alpha!r} is not inside the open unit disk")
    return DerivedCoeffs(math.sqrt(1.0 - mag2), 1.0 + alpha, 1.0 - alpha)


def rho_of(alpha: complex) -> float:
    """sqrt(1 - |alpha|^2), clamped at 0 for unimodular input."""
    alpha = complex(alpha)
    mag2 = alpha.real * alpha.real + alpha.imag * alpha.imag
    if mag2 > 1.0 + CUT_UNIMODULAR_TOL:
        raise DomainError(f"coefficient {alpha!r} lies outside the closed unit disk")
    return math.sqrt(max(0.0, 1.0 - mag2))


def theta(alpha: complex) -> np.ndarray:
    """The 2x2 unitary block [[-alpha, rho], [rho, conj(alpha)]], |alpha| <= 1."""
    alpha = complex(alpha)
    r = rho_of(alpha)
    return np.array([[-alpha, r], [r, alpha.conjugate()]], dtype=complex)


def _check_unimodular(value: complex, name: str) -> complex:
    value = complex(value)
    if abs(abs(value) - 1.0) > CUT_UNIMODULAR_TOL:
        raise DomainError(f"{name} must be unimodular, got |{value!r}| = {abs(value)!r}")
    return value


@dataclass(frozen=True)
class VerblunskyWindow:
    """Finitely supported coefficient assignment with optional boundary cuts.

    ``alpha[j]`` holds the coefficient at lattice site ``kmin + j``. `cut_left`
    and `cut_right`, when present, are the unimodular values at sites
    ``kmin - 1`` and ``kmax + 1``.
    """

    kmin: int
    kmax: int
    alpha: tuple
    cut_left: complex | None = None
    cut_right: complex | None = None

    def __post_init__(self):
        if self.kmin > self.kmax:
            raise DomainError(f"empty window: kmin={self.kmin} > kmax={self.kmax}")
        alpha = tuple(complex(a) for a in self.alpha)
        if len(alpha) != self.kmax - self.kmin + 1:
            raise DomainError(
                f"window [{self.kmin}, {self.kmax}] needs "
                f"{self.kmax - self.kmin + 1} coefficients, got {len(alpha)}"
            )
        for k, a in zip(self.indices(), alpha):
            if abs(a) >= 1.0:
                raise DomainError(f"coefficient at k={k} has |alpha| = {abs(a)!r} >= 1")
        object.__setattr__(self, "alpha", alpha)
        if self.cut_left is not None:
            object.__setattr__(self, "cut_left", _check_unimodular(self.cut_left, "cut_left"))
        if self.cut_right is not None:
            object.__setattr__(self, "cut_right", _check_unimodular(self.cut_right, "cut_right"))

    def indices(self) -> range:
        return range(self.kmin, self.kmax + 1)

    def __contains__(self, k: int) -> bool:
        return self.kmin <= k <= self.kmax

    def __getitem__(self, k: int) -> complex:
        if not self.kmin <= k <= self.kmax:
            raise IndexWindowError(f"site {k} outside window [{self.kmin}, {self.kmax}]")
        return self.alpha[k - self.kmin]

    def coefficient(self, k: int) -> complex:
        """Coefficient at site k, including the cut sites just outside."""
        if k == self.kmin - 1 and self.cut_left is not None:
            return self.cut_left
        if k == self.kmax + 1 and self.cut_right is not None:
            return self.cut_right
        return self[k]

    def with_coefficient(self, k: int, value: complex) -> "VerblunskyWindow":
        """Copy of the window with the coefficient at site k replaced."""
        if not self.kmin <= k <= self.kmax:
            raise IndexWindowError(f"site {k} outside window [{self.kmin}, {self.kmax}]")
        alpha = list(self.alpha)
        alpha[k - self.kmin] = complex(value)
        return VerblunskyWindow(self.kmin, self.kmax, tuple(alpha), self.cut_left, self.cut_right)

    def agreement_tolerance_ok(self, other: "VerblunskyWindow", k: int, tol: float = 1e-12) -> bool:
        return abs(self[k] - other[k]) <= tol

    def to_json_dict(self) -> dict:
        return {
            "kmin": self.kmin,
            "kmax": self.kmax,
            "alpha": [[a.real, a.imag] for a in self.alpha],
            "cut_left": None if self.cut_left is None else [self.cut_left.real, self.cut_left.imag],
            "cut_right": None
            if self.cut_right is None
            else [self.cut_right.real, self.cut_right.imag],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json_dict(cls, doc: dict) -> "VerblunskyWindow":
        def _cplx(pair):
            return None if pair is None else complex(pair[0], pair[1])

        return cls(
            kmin=int(doc["kmin"]),
            kmax=int(doc["kmax"]),
            alpha=tuple(complex(re, im) for re, im in doc["alpha"]),
            cut_left=_cplx(doc.get("cut_left")),
            cut_right=_cplx(doc.get("cut_right")),
        )

    @classmethod
    def from_json(cls, text: str) -> "VerblunskyWindow":
        return cls.from_json_dict(json.loads(text))


def random_window(
    seed: int,
    k0: int = 0,
    radius: int = 12,
    amax: float = 0.9,
    cuts: bool = True,
) -> VerblunskyWindow:
    """Seeded window around k0, coefficients uniform over the disk |alpha| <= amax.

    kmin is nudged down by one when needed so the matrix row/column origin
    (site kmin - 1) lands on an even lattice index, the convention the block
    builders require. Deterministic per seed.
    """
    if not 0.0 <= amax < 1.0:
        raise DomainError(f"amax must be in [0, 1), got {amax!r}")
    if radius < 1:
        raise DomainError("radius must be >= 1")
    kmin = k0 - radius
    if (kmin - 1) % 2 != 0:
        kmin -= 1
    kmax = k0 + radius
    n = kmax - kmin + 1
    rng = np.random.default_rng(seed)
    r = amax * np.sqrt(rng.uniform(size=n))
    phi = rng.uniform(0.0, 2.0 * np.pi, size=n)
    alpha = tuple(r * np.exp(1j * phi))
    return VerblunskyWindow(
        kmin,
        kmax,
        alpha,
        cut_left=1.0 + 0.0j if cuts else None,
        cut_right=1.0 + 0.0j if cuts else None,
    )
