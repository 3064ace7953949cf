from __future__ import annotations

import numpy as np
from scipy import sparse

__all__ = ["trapezoid_weights", "weighted_generator", "dirichlet_energy"]


def trapezoid_weights(n: int, h: float) -> np.ndarray:
    w = np.full(n, h)
    w[0] = w[-1] = h / 2.0

    return w


def weighted_generator(edge_weights: np.ndarray, h: float) -> sparse.csc_matrix:
    """Symmetric tridiagonal K with (K f)_i = (flux_{i+1/2} - flux_{i-1/2}) / 2.

    Description:
        flux_{i+1/2} = w_{i+1/2} (f_{i+1} - f_i) / h and the end fluxes vanish. With node
        masses m the generator is L = diag(m)^-1 K, so L 1 = 0 and sum m (L f) = 0 exactly.

    Params:
        edge_weights (np.ndarray): w_{i+1/2}, length n - 1.
        h (float): Grid spacing.

    """
    c = 0.5 * np.asarray(edge_weights, dtype=float) / h
    n = c.size + 1

    main = np.zeros(n)
    main[:-1] -= c
    main[1:] -= c

    return sparse.diags([c, main, c], offsets=[-1, 0, 1], shape=(n, n), format="csc")


def dirichlet_energy(edge_weights: np.ndarray, h: float, f: np.ndarray) -> float:
    """-<f, L f>_m = (1/2) sum w_{i+1/2} (f_{i+1} - f_i)^2 / h."""
    df = np.diff(f)

    return float(0.5 * np.sum(edge_weights * df * df) / h)
