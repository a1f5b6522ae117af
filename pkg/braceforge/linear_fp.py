"""Dense Gaussian elimination over the prime field F_p."""
import logging

import numpy as np
from sympy import isprime

from .exceptions import DimensionMismatchError, NotPrimeError

logger = logging.getLogger(__name__)


class LinearSolution:
    def __init__(self, consistent, x=None, witness=None, rank=0):
        self.consistent = consistent
        self.x = x
        # row index -> coefficient y_r with sum_r y_r A[r] = 0 and sum_r y_r b[r] = 1
        self.witness = witness
        self.rank = rank

    def __bool__(self):
        return self.consistent

    def __str__(self):
        return "Linear solution:\n--Consistent: {}\n--Rank: {}\n".format(self.consistent, self.rank)

    __repr__ = __str__


def _row_reduce(augmented, p, columns):
    """Brings the first `columns` columns to reduced row echelon form in place; returns the pivot columns."""
    rows = augmented.shape[0]
    pivots = []
    i = 0
    for j in range(columns):
        if i == rows:
            break
        nonzero = np.nonzero(augmented[i:, j])[0]
        if not nonzero.size:
            continue
        k = i + int(nonzero[0])
        if k != i:
            augmented[[i, k]] = augmented[[k, i]]
        augmented[i] = augmented[i] * pow(int(augmented[i, j]), -1, p) % p
        column = augmented[:, j].copy()
        column[i] = 0
        targets = np.nonzero(column)[0]
        if targets.size:
            augmented[targets] = (augmented[targets] - np.outer(column[targets], augmented[i])) % p
        pivots.append(j)
        i += 1
    return pivots


def _left_null_witness(matrix, rhs, p):
    """Some y with y A = 0 and y b = 1, which exists exactly when A x = b has no solution."""
    transposed = np.vstack([matrix.T, rhs[None, :]])
    target = np.zeros(transposed.shape[0], dtype=np.int64)
    target[-1] = 1
    augmented = np.concatenate([transposed, target[:, None]], axis=1)
    columns = transposed.shape[1]
    pivots = _row_reduce(augmented, p, columns)
    y = np.zeros(columns, dtype=np.int64)
    y[pivots] = augmented[:len(pivots), columns]
    return {int(r): int(y[r]) for r in np.nonzero(y)[0]}


def solve_linear_fp(matrix, rhs, p):
    """
    Solves A x = b over F_p.

    Free variables are set to 0, so the returned solution is deterministic.
    An inconsistent system comes back with a witness row combination instead.
    """
    if not isprime(p):
        raise NotPrimeError(p)
    matrix = np.asarray(matrix, dtype=np.int64)
    rhs = np.asarray(rhs, dtype=np.int64)
    if matrix.ndim != 2 or rhs.ndim != 1 or matrix.shape[0] != rhs.shape[0]:
        raise DimensionMismatchError(matrix.shape[0] if matrix.ndim else 0, rhs.shape[0] if rhs.ndim else 0)
    matrix = matrix % p
    rhs = rhs % p
    rows, columns = matrix.shape
    logger.debug('Eliminating a %d x %d system over F_%d', rows, columns, p)
    augmented = np.concatenate([matrix, rhs[:, None]], axis=1)
    pivots = _row_reduce(augmented, p, columns)
    rank = len(pivots)
    if np.any(augmented[rank:, columns]):
        return LinearSolution(False, witness=_left_null_witness(matrix, rhs, p), rank=rank)
    x = np.zeros(columns, dtype=np.int64)
    x[pivots] = augmented[:rank, columns]
    return LinearSolution(True, x=x, rank=rank)
