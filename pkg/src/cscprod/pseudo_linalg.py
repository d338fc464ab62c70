"""Small dense linear algebra on E^m with metric eps*dx1^2 + dx2^2 + ... + dxm^2.

Only the first coordinate carries the sign, so the ambient space is either
Euclidean (eps = +1) or Lorentzian (eps = -1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEGENERACY_RTOL = 1e-12
# relative threshold used when picking the "last nonzero coordinate"
CANONICAL_RTOL = 1e-9


class DegenerateSubspaceError(ValueError):
    pass


class NotRiemannianError(ValueError):
    pass


@dataclass(frozen=True)
class Signature:
    """Flat metric of E^dim with sign ``epsilon`` on coordinate 1."""

    dim: int
    epsilon: int

    def __post_init__(self):
        if self.epsilon not in (-1, 1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon!r}")
        if self.dim < 3:
            raise ValueError(f"ambient dimension must be >= 3, got {self.dim}")

    @property
    def diag(self) -> np.ndarray:
        d = np.ones(self.dim)
        d[0] = self.epsilon
        return d

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self.diag)

    def check(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        if v.shape[-1] != self.dim:
            raise ValueError(
                f"dimension mismatch: vector has {v.shape[-1]} coordinates, "
                f"signature expects {self.dim}"
            )
        return v


def inner(sig: Signature, u, v) -> float | np.ndarray:
    """eps*u1*v1 + sum_{i>=2} ui*vi, broadcasting over leading axes."""
    u = sig.check(u)
    v = sig.check(v)
    return np.sum(u * v * sig.diag, axis=-1)


def gram(sig: Signature, vectors) -> np.ndarray:
    vs = sig.check(np.atleast_2d(vectors))
    return (vs * sig.diag) @ vs.T


def _canonicalize(v: np.ndarray) -> np.ndarray:
    scale = np.max(np.abs(v))
    idx = np.nonzero(np.abs(v) > CANONICAL_RTOL * scale)[0]
    if idx.size and v[idx[-1]] < 0:
        return -v
    return v


def orthonormal_complement(sig: Signature, basis) -> list[np.ndarray]:
    """Orthonormal basis of the sig-orthogonal complement of span(basis).

    Each returned vector has <v, v> = +-1 and the vectors are mutually
    orthogonal. Signs are canonical: the last coordinate that is not
    negligible is positive.
    """
    b = sig.check(np.atleast_2d(np.asarray(basis, dtype=float)))
    k = b.shape[0]
    if k >= sig.dim:
        raise ValueError(f"{k} vectors leave no complement in dimension {sig.dim}")

    # rank via singular values, independent of the metric
    sv = np.linalg.svd(b, compute_uv=False)
    if sv[-1] <= DEGENERACY_RTOL * max(sv[0], 1.0):
        raise DegenerateSubspaceError("rank deficient basis")

    G = gram(sig, b)
    scale = max(np.max(np.abs(G)), 1e-300)
    if abs(np.linalg.det(G)) < DEGENERACY_RTOL * scale**k:
        raise DegenerateSubspaceError("degenerate subspace")

    # complement = null space of the map v -> (<b_i, v>)_i
    _, _, vt = np.linalg.svd(b * sig.diag)
    null = vt[k:]

    C = gram(sig, null)
    w, q = np.linalg.eigh(C)
    if np.min(np.abs(w)) < DEGENERACY_RTOL * max(np.max(np.abs(w)), 1.0):
        raise DegenerateSubspaceError("degenerate subspace")
    out = (q.T @ null) / np.sqrt(np.abs(w))[:, None]
    return [_canonicalize(v) for v in out]


def generalized_eigen(g, h) -> tuple[np.ndarray, np.ndarray]:
    """Solve h v = lam g v for symmetric h and positive definite g.

    Returns ascending eigenvalues and a matrix whose columns are
    g-orthonormal eigenvectors. Goes through the Cholesky factor of g, so
    the self-adjoint operator g^{-1} h is diagonalised in a g-orthonormal
    frame and stays symmetric up to rounding.
    """
    g = np.asarray(g, dtype=float)
    h = np.asarray(h, dtype=float)
    g = 0.5 * (g + g.T)
    h = 0.5 * (h + h.T)
    try:
        L = np.linalg.cholesky(g)
    except np.linalg.LinAlgError:
        raise NotRiemannianError("metric not Riemannian") from None
    Linv = np.linalg.inv(L)
    M = Linv @ h @ Linv.T
    M = 0.5 * (M + M.T)
    lam, y = np.linalg.eigh(M)
    return lam, Linv.T @ y
