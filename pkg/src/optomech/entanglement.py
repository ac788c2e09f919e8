"""Gaussian entanglement of reduced states.

Conventions: quadrature ordering (q, p) per subsystem, vacuum variance 1/2,
symplectic form J = diag([[0,1],[-1,0]], ...).  Physicality of a covariance
matrix V is V + iJ/2 >= 0; the partial-transpose test matrix for subsystem k
is Lambda_k V Lambda_k + iJ/2 with Lambda_k flipping the momentum of k.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import tolerances
from .errors import BadIndex, NonPhysicalInput
from .numerics import HermitianPair, eigenvalues_hermitian
from .steadystate import symplectic_form

_SUBSYSTEM_NAMES = ("mode1", "mode2", "cavity")


@dataclass(frozen=True)
class BipartiteCM:
    """4x4 covariance matrix of two subsystems in 2x2 block form."""

    a: np.ndarray                     # first subsystem block
    b: np.ndarray                     # second subsystem block
    c: np.ndarray                     # off-diagonal block

    @property
    def matrix(self) -> np.ndarray:
        return np.block([[self.a, self.c], [self.c.T, self.b]])

    @classmethod
    def from_matrix(cls, v: np.ndarray) -> "BipartiteCM":
        v = np.asarray(v, dtype=float)
        if v.shape != (4, 4):
            raise BadIndex("bipartite covariance matrix must be 4x4")
        return cls(a=v[:2, :2].copy(), b=v[2:, 2:].copy(), c=v[:2, 2:].copy())


def _subsystem_count(v: np.ndarray) -> int:
    n2 = v.shape[0]
    if v.ndim != 2 or v.shape != (n2, n2) or n2 % 2:
        raise BadIndex("covariance matrix must be square with even dimension")
    return n2 // 2


def _subsystem_index(k, count: int) -> int:
    if isinstance(k, str):
        if count == 3 and k in _SUBSYSTEM_NAMES:
            k = _SUBSYSTEM_NAMES.index(k)
        else:
            raise BadIndex(f"unknown subsystem {k!r}")
    if not 0 <= k < count:
        raise BadIndex(f"subsystem {k} out of range for {count} subsystems")
    return k


def reduce(v: np.ndarray, subsystems) -> "BipartiteCM | np.ndarray":
    """Covariance matrix of the kept subsystems (indices or the names
    mode1/mode2/cavity for a 6x6 input), preserving the given order.
    One subsystem returns a bare 2x2 array, two return a BipartiteCM."""
    v = np.asarray(v, dtype=float)
    count = _subsystem_count(v)
    keep = [_subsystem_index(k, count) for k in subsystems]
    if len(set(keep)) != len(keep) or not 1 <= len(keep) <= 2:
        raise BadIndex("keep one or two distinct subsystems")
    rows = [r for k in keep for r in (2 * k, 2 * k + 1)]
    sub = v[np.ix_(rows, rows)]
    if len(keep) == 1:
        return sub
    return BipartiteCM.from_matrix(sub)


def _min_pt_symplectic(v4: np.ndarray) -> float:
    """Smallest symplectic eigenvalue of the partial transpose of a two-
    subsystem covariance matrix, from the block determinants:

        Sigma = det a + det b - 2 det c
        eta_minus = sqrt((Sigma - sqrt(Sigma^2 - 4 det V)) / 2)
    """
    a = v4[:2, :2]
    b = v4[2:, 2:]
    c = v4[:2, 2:]
    sigma = np.linalg.det(a) + np.linalg.det(b) - 2.0 * np.linalg.det(c)
    det_v = np.linalg.det(v4)
    disc = sigma ** 2 - 4.0 * det_v
    scale = max(sigma ** 2, abs(4.0 * det_v), 1e-300)
    if disc < -tolerances.EIGENVALUE_SIGN_MARGIN * scale:
        raise NonPhysicalInput(
            f"Sigma^2 < 4 det V by {disc:.3e}; not a physical covariance matrix")
    disc = max(disc, 0.0)
    inner = 0.5 * (sigma - math.sqrt(disc))
    if inner < 0.0:
        if inner < -tolerances.EIGENVALUE_SIGN_MARGIN * max(abs(sigma), 1.0):
            raise NonPhysicalInput("negative symplectic eigenvalue squared")
        inner = 0.0
    return math.sqrt(inner)


def log_negativity(vbip) -> float:
    """Logarithmic negativity E = max(0, -ln 2 eta_minus) of a two-subsystem
    Gaussian state; entangled iff eta_minus < 1/2."""
    v4 = vbip.matrix if isinstance(vbip, BipartiteCM) else np.asarray(vbip, dtype=float)
    if v4.shape != (4, 4):
        raise BadIndex("log_negativity needs a 4x4 covariance matrix")
    eta_minus = _min_pt_symplectic(v4)
    if eta_minus == 0.0:
        raise NonPhysicalInput("vanishing symplectic eigenvalue")
    return max(0.0, -math.log(2.0 * eta_minus))


def npt_test(v: np.ndarray, k) -> float:
    """Minimum eigenvalue of the test matrix Lambda_k V Lambda_k + iJ/2.

    Negative beyond -EIGENVALUE_SIGN_MARGIN * ||V|| means the split k|rest
    is NPT-entangled (necessary and sufficient for Gaussian 1xN splits)."""
    v = np.asarray(v, dtype=float)
    count = _subsystem_count(v)
    idx = _subsystem_index(k, count)
    lam = np.ones(v.shape[0])
    lam[2 * idx + 1] = -1.0
    flipped = v * np.outer(lam, lam)
    pair = HermitianPair(sym=flipped, antisym=0.5 * symplectic_form(count))
    return float(eigenvalues_hermitian(pair)[0])


@dataclass(frozen=True)
class TripartiteClassReport:
    min_eigs: tuple[float, float, float]       # PT w.r.t. mode1, mode2, cavity
    class_label: str
    negativities: tuple[float, float, float]   # (m1|cav), (m2|cav), (m1|m2)
    ambiguous: bool
    threshold: float


def classify_tripartite(v: np.ndarray) -> TripartiteClassReport:
    """Entanglement class of a two-modes-plus-cavity state from the sign
    pattern of the three NPT test eigenvalues.

    3 negative: fully inseparable; 2: biseparable only across the named
    non-NPT cut; 1: two-mode biseparable; 0: no NPT entanglement detected
    (bound-entangled subclasses are not distinguished).  Eigenvalues within
    the threshold of zero set the ambiguous flag instead of silently picking
    a side.
    """
    v = np.asarray(v, dtype=float)
    if _subsystem_count(v) != 3:
        raise BadIndex("tripartite classification needs a 6x6 covariance matrix")
    eigs = tuple(npt_test(v, k) for k in range(3))
    threshold = tolerances.EIGENVALUE_SIGN_MARGIN * float(np.linalg.norm(v))
    negative = [e < -threshold for e in eigs]
    ambiguous = any(abs(e) <= threshold for e in eigs)
    n_neg = sum(negative)
    if n_neg == 3:
        label = "fully-inseparable"
    elif n_neg == 2:
        positive_cut = _SUBSYSTEM_NAMES[negative.index(False)]
        label = f"one-mode-biseparable({positive_cut})"
    elif n_neg == 1:
        label = "two-mode-biseparable"
    else:
        label = "npt-undetected"
    negs = (
        log_negativity(reduce(v, (0, 2))),
        log_negativity(reduce(v, (1, 2))),
        log_negativity(reduce(v, (0, 1))),
    )
    return TripartiteClassReport(
        min_eigs=eigs,
        class_label=label,
        negativities=negs,
        ambiguous=ambiguous,
        threshold=threshold,
    )
