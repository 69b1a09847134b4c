"""Explicit construction families of Hermitian unitary MPS matrices.

Each builder returns a verified member of M_n(d) for its admissible (n, d)
region.  Except for the 2 x 2 family, every construction here uses the block
scheme

    S = (d^2 + n - 1)^{-1/2} [[ (d+1)I - J,  B ], [ B*,  -(d+1)I + J ]]

(or a close variant) with m = n/2, where the off-diagonal block B carries the
family-specific phases: a rank-one perturbation of J for the interval family,
entrywise complex exponentials of a Hadamard/conference core or of a design
incidence matrix, and a conference-matrix block.  Interval endpoints are
accepted closed: the formulas remain valid there and reproduce the canonical
members of neighbouring families.

Auxiliary Hadamard/conference matrices and designs are injected as arguments;
the designs module supplies standard providers.
"""

from __future__ import annotations

import math

import numpy as np

from . import exact
from .core import DEFAULT_TOL, as_square_matrix
from .designs import (
    SymmetricDesign,
    fourier_complex_hadamard,
    normalize_to_standard,
    verify_conference,
    verify_hadamard,
)

__all__ = [
    "OutOfRangeError",
    "NotHadamardError",
    "NotConferenceError",
    "NoRealRootError",
    "FAMILY_NAMES",
    "full_j_matrix",
    "n2_matrix",
    "upper_interval",
    "hadamard_core_family",
    "conference_core_family",
    "complex_core_matrix",
    "conference_block_family",
    "design_family",
    "design_family_ratio",
    "design_alpha_for_ratio",
    "real_from_design",
]


class OutOfRangeError(ValueError):
    """The requested d lies outside the family's admissible interval."""


class NotHadamardError(ValueError):
    """Auxiliary matrix is not a Hadamard matrix."""


class NotConferenceError(ValueError):
    """Auxiliary matrix is not a conference matrix of the required kind."""


class NoRealRootError(ValueError):
    """No phase angle in [-1, 1] solves the family's cosine equation."""


#: Family names used by the file/CLI interfaces.
FAMILY_NAMES = (
    "full_j",
    "n2",
    "upper_interval",
    "hadamard_core",
    "conference_core",
    "complex_core",
    "conference_block",
    "design_complex",
    "design_real",
)


def _block_matrix(n: int, d: float, off_block: np.ndarray) -> np.ndarray:
    """Assemble the standard block scheme around the given off-diagonal block."""
    m = n // 2
    eye = np.eye(m)
    j = np.ones((m, m))
    tl = (d + 1) * eye - j
    s = np.block([[tl, off_block], [off_block.conj().T, -tl]])
    return s / math.sqrt(d * d + n - 1)


def full_j_matrix(n: int) -> np.ndarray:
    """I - (2/n)J, the permutation-symmetric member of M_n(n/2 - 1)."""
    if n < 2:
        raise ValueError("order must be at least 2")
    return np.eye(n) - 2.0 / n * np.ones((n, n))


def n2_matrix(d: float) -> np.ndarray:
    """The 2 x 2 family [[d, 1], [1, -d]] / sqrt(d^2 + 1), any d >= 0."""
    if d < 0:
        raise OutOfRangeError("d must be non-negative")
    return np.array([[d, 1.0], [1.0, -d]]) / math.sqrt(d * d + 1)


def upper_interval(n: int, d: float) -> np.ndarray:
    """Interval family covering d in [n/2 - 3, n/2 - 1] for even n.

    The off-diagonal block is (e^{i a} - 1) I + J with cos(a) = d + 2 - n/2;
    real exactly at the endpoints (a = 0 or pi).
    """
    if n % 2 or n < 4:
        raise OutOfRangeError("n must be even and at least 4")
    lo, hi = n / 2 - 3, n / 2 - 1
    if d < max(0.0, lo) - 1e-12 or d > hi + 1e-12:
        raise OutOfRangeError(f"d must lie in [{max(0.0, lo)}, {hi}]")
    m = n // 2
    alpha = math.acos(min(1.0, max(-1.0, d + 2 - n / 2)))
    off = (np.exp(1j * alpha) - 1.0) * np.eye(m) + np.ones((m, m))
    return _block_matrix(n, d, off)


def hadamard_core_family(n: int, d: float, hadamard) -> np.ndarray:
    """Family on d in [n/4 - 3/2, n/2 - 1] from a Hadamard matrix of order n/2 + 1.

    The core K of the normalized Hadamard matrix supplies the phases:
    B = exp(i a K) entrywise, with cos^2(a) = 4(d + 2)/(n + 2) - 1.
    """
    if n % 2 or n < 4:
        raise OutOfRangeError("n must be even and at least 4")
    h = as_square_matrix(hadamard)
    if h.shape[0] != n // 2 + 1:
        raise NotHadamardError(f"need order {n // 2 + 1}, got {h.shape[0]}")
    if not verify_hadamard(h):
        raise NotHadamardError("auxiliary matrix is not Hadamard")
    lo, hi = n / 4 - 1.5, n / 2 - 1
    if d < lo - 1e-12 or d > hi + 1e-12:
        raise OutOfRangeError(f"d must lie in [{lo}, {hi}]")
    cos2 = 4 * (d + 2) / (n + 2) - 1
    cos2 = min(1.0, max(0.0, cos2))
    alpha = math.acos(math.sqrt(cos2))
    _, core = normalize_to_standard(h)
    off = np.exp(1j * alpha * core.astype(float))
    return _block_matrix(n, d, off)


def conference_core_family(n: int, d: float, conference) -> np.ndarray:
    """Family on d in [n/4 - 3/2 - 1/(n-2), n/2 - 1] from a symmetric
    conference matrix of order n/2 + 1.

    B = exp(i a K) with K the conference core (zero diagonal), where cos(a)
    solves (n-2)/4 c^2 + c + (n-6)/4 - d = 0; the larger root in [-1, 1] is
    taken when both qualify.
    """
    if n % 2 or n < 6:
        raise OutOfRangeError("n must be even and at least 6")
    c = as_square_matrix(conference)
    if c.shape[0] != n // 2 + 1:
        raise NotConferenceError(f"need order {n // 2 + 1}, got {c.shape[0]}")
    if np.iscomplexobj(c) or not np.array_equal(np.asarray(c), np.asarray(c).T):
        raise NotConferenceError("auxiliary matrix must be real symmetric")
    if not verify_conference(c):
        raise NotConferenceError("auxiliary matrix is not a conference matrix")
    lo = n / 4 - 1.5 - 1.0 / (n - 2)
    hi = n / 2 - 1
    if d < lo - 1e-12 or d > hi + 1e-12:
        raise OutOfRangeError(f"d must lie in [{lo}, {hi}]")
    a2 = (n - 2) / 4.0
    disc = 1.0 - 4.0 * a2 * ((n - 6) / 4.0 - d)
    if disc < 0:
        if disc > -1e-9:
            disc = 0.0
        else:
            raise NoRealRootError("no real cosine solves the ratio equation")
    roots = [(-1.0 + math.sqrt(disc)) / (2 * a2), (-1.0 - math.sqrt(disc)) / (2 * a2)]
    valid = [r for r in roots if -1 - 1e-12 <= r <= 1 + 1e-12]
    if not valid:
        raise NoRealRootError("no cosine root lies in [-1, 1]")
    cos_a = min(1.0, max(-1.0, max(valid)))
    alpha = math.acos(cos_a)
    _, core = normalize_to_standard(c)
    off = np.exp(1j * alpha * core.astype(float))
    return _block_matrix(n, d, off)


def complex_core_matrix(n: int) -> np.ndarray:
    """Member of M_n(n/4 - 3/2) for any even n >= 6, from the Fourier
    complex Hadamard matrix of order n/2 + 1.

    The off-diagonal block is the dephased core itself and the diagonal
    blocks use the shifted coefficient n/4 - 1/2.
    """
    if n % 2 or n < 6:
        raise OutOfRangeError("n must be even and at least 6 (d = n/4 - 3/2 >= 0)")
    m = n // 2
    h = fourier_complex_hadamard(m + 1)
    _, core = normalize_to_standard(h)
    d = n / 4 - 1.5
    b = n / 4 - 0.5
    eye = np.eye(m)
    j = np.ones((m, m))
    tl = b * eye - j
    s = np.block([[tl, core], [core.conj().T, -tl]])
    return s / math.sqrt(d * d + n - 1)


def conference_block_family(n: int, d: float, conference) -> np.ndarray:
    """Family on d in [0, 1] from a Hermitian conference matrix of order n/2.

    S = (d^2+n-1)^{-1/2} [[ dI + C, C - e^{ia}I ], [ C - e^{-ia}I, -(dI + C) ]]
    with d = cos(a).
    """
    if n % 2 or n < 4:
        raise OutOfRangeError("n must be even and at least 4")
    c = as_square_matrix(conference).astype(complex)
    if c.shape[0] != n // 2:
        raise NotConferenceError(f"need order {n // 2}, got {c.shape[0]}")
    if np.max(np.abs(c - c.conj().T)) > DEFAULT_TOL:
        raise NotConferenceError("auxiliary conference matrix must be Hermitian")
    if not verify_conference(np.asarray(conference)):
        raise NotConferenceError("auxiliary matrix is not a conference matrix")
    if d < -1e-12 or d > 1 + 1e-12:
        raise OutOfRangeError("d must lie in [0, 1]")
    alpha = math.acos(min(1.0, max(0.0, d)))
    m = n // 2
    eye = np.eye(m)
    tl = d * eye + c
    tr = c - np.exp(1j * alpha) * eye
    s = np.block([[tl, tr], [tr.conj().T, -tl]])
    return s / math.sqrt(d * d + n - 1)


def design_family_ratio(design: SymmetricDesign, alpha: float) -> float:
    """The ratio achieved by design_family at phase angle alpha."""
    n = 2 * design.v
    return -1 + n / 2 - (design.k - design.lam) * (1 - math.cos(2 * alpha))


def design_alpha_for_ratio(design: SymmetricDesign, d: float) -> float:
    """Phase angle (in [0, pi/2]) hitting ratio d; requires
    d in [n/2 - 1 - 2(k - lam), n/2 - 1]."""
    n = 2 * design.v
    km = design.k - design.lam
    cos2a = 1 - (n / 2 - 1 - d) / km
    if cos2a < -1 - 1e-12 or cos2a > 1 + 1e-12:
        raise OutOfRangeError(
            f"d must lie in [{n / 2 - 1 - 2 * km}, {n / 2 - 1}]"
        )
    return math.acos(min(1.0, max(-1.0, cos2a))) / 2.0


def design_family(design: SymmetricDesign, alpha: float) -> np.ndarray:
    """Member of M_{2v}(d) with d = v - 1 - (k - lam)(1 - cos 2a) from a
    symmetric (v, k, lam)-design.

    The off-diagonal block is exp(i a G) entrywise with G = 2A - J, the
    +-1 signed incidence matrix: the design identities A A^T = (k-lam)I + lam J
    and A J = k J make the block Gram matrix constant off the diagonal, which
    is exactly the membership condition at the stated d.  When A comes from a
    Hadamard matrix, G is that matrix's core and this family coincides with
    hadamard_core_family entry for entry.

    At a = 0 the ratio is the maximal n/2 - 1; the reachable floor is
    n/2 - 1 - 2(k - lam), which is always at least n/4 - 3/2 because
    k - lam <= (v + 1)/4 for every symmetric design.
    """
    v = design.v
    n = 2 * v
    d = design_family_ratio(design, alpha)
    g_sign = 2.0 * design.incidence.astype(float) - np.ones((v, v))
    off = np.exp(1j * alpha * g_sign)
    return _block_matrix(n, d, off)


def real_from_design(n: int, d, design: SymmetricDesign) -> np.ndarray:
    """Real member of M_n^R(d) from a symmetric (n/2, k, lam)-design.

    Requires (k, lam) to match the parameters determined by (n, d); the
    underlying exact construction is exact.design_mps, whose integer identity
    Q Q^T = (d^2 + n - 1) I is validated on construction.
    """
    return exact.design_mps(design, n, d).matrix()
