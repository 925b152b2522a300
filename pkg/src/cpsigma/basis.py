"""Fixed orthonormal basis of anti-Hermitian traceless matrices.

Generalized Gell-Mann construction ("gellmann-v1" ordering): for dimension
d the d^2 - 1 elements are, in order,

  1. symmetric pairs     i*(E_ab + E_ba)              for a < b, row-major
  2. antisymmetric pairs (E_ab - E_ba)                for a < b, row-major
  3. diagonals           i*diag(1,..,1,-l,0,..)*sqrt(2/(l(l+1)))  for l = 1..d-1

Each element T satisfies the ambient inner product (T, T) = -tr(T T)/2 = 1,
so coordinates of an anti-Hermitian X are just c_a = -tr(X T_a)/2.
"""

from __future__ import annotations

from functools import lru_cache
from math import sqrt

import numpy as np

BASIS_ID = "gellmann-v1"


@lru_cache(maxsize=None)
def su_basis(dim: int) -> tuple[np.ndarray, ...]:
    out = []
    for a in range(dim):
        for b in range(a + 1, dim):
            m = np.zeros((dim, dim), dtype=complex)
            m[a, b] = 1j
            m[b, a] = 1j
            out.append(m)
    for a in range(dim):
        for b in range(a + 1, dim):
            m = np.zeros((dim, dim), dtype=complex)
            m[a, b] = 1
            m[b, a] = -1
            out.append(m)
    for l in range(1, dim):
        diag = np.zeros(dim, dtype=complex)
        diag[:l] = 1j
        diag[l] = -1j * l
        out.append(np.diag(diag) * sqrt(2 / (l * (l + 1))))
    return tuple(out)


def coordinates(x: np.ndarray) -> np.ndarray:
    """Real coordinates of an anti-Hermitian traceless matrix in su_basis."""
    basis = su_basis(x.shape[0])
    return np.array([(-0.5 * np.trace(x @ t)).real for t in basis])
