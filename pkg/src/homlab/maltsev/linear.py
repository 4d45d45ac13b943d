"""Gaussian elimination over prime fields, an independent oracle for affine instances."""

import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from homlab.structures.structure import Mapping, Structure

logger = logging.getLogger(__name__)

_SUM_SYMBOL = re.compile(r"^[A-Za-z]+(\d+)$")


@dataclass(frozen=True)
class LinearSystem:
    """A x = b over GF(p); rows of ``coefficients`` are equations."""

    coefficients: np.ndarray
    rhs: np.ndarray
    p: int

    @property
    def variables(self) -> int:
        return self.coefficients.shape[1]


def solve_mod_p(coefficients, rhs, p: int) -> Optional[np.ndarray]:
    """One solution of A x = b over GF(p) with free variables set to 0, or None.

    Args:
        coefficients: m x n integer matrix
        rhs: length-m integer vector
        p: A prime

    Examples:
        >>> solve_mod_p([[1, 1], [1, 1]], [0, 1], 2) is None
        True
        >>> solve_mod_p([[1, 1]], [1], 3).tolist()
        [1, 0]
    """
    a = np.array(coefficients, dtype=np.int64).reshape(len(rhs), -1) % p
    b = np.array(rhs, dtype=np.int64) % p
    rows, cols = a.shape
    augmented = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    pivots: List[int] = []
    row = 0
    for col in range(cols):
        candidates = np.nonzero(augmented[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        augmented[[row, pivot]] = augmented[[pivot, row]]
        augmented[row] = augmented[row] * pow(int(augmented[row, col]), -1, p) % p
        for other in range(rows):
            if other != row and augmented[other, col]:
                augmented[other] = (augmented[other] - augmented[other, col] * augmented[row]) % p
        pivots.append(col)
        row += 1
        if row == rows:
            break
    if np.any(augmented[row:, cols] != 0):
        return None
    solution = np.zeros(cols, dtype=np.int64)
    for r, col in enumerate(pivots):
        solution[col] = augmented[r, cols]
    return solution


def sum_system(instance: Structure, p: int) -> LinearSystem:
    """Read R_c(x_1, ..., x_k) as x_1 + ... + x_k = c mod p.

    Symbol names carry the constant as trailing digits (``R0``, ``L1``), as in the
    affine and parity templates.

    Raises:
        ValueError: If a symbol name has no trailing constant
    """
    equations: List[Tuple[np.ndarray, int]] = []
    for symbol, scope in instance.iter_tuples():
        match = _SUM_SYMBOL.match(symbol)
        if match is None:
            raise ValueError(f"Symbol '{symbol}' does not name a sum constraint")
        row = np.zeros(instance.size, dtype=np.int64)
        for v in scope:
            row[v] += 1
        equations.append((row % p, int(match.group(1)) % p))
    if not equations:
        return LinearSystem(np.zeros((0, instance.size), dtype=np.int64), np.zeros(0, dtype=np.int64), p)
    return LinearSystem(np.array([e for e, _ in equations]), np.array([c for _, c in equations]), p)


def solve_sum_instance(instance: Structure, p: int) -> Optional[Mapping]:
    """Solve an instance over an affine template by elimination; None when unsatisfiable."""
    system = sum_system(instance, p)
    if system.coefficients.shape[0] == 0:
        return Mapping(tuple([0] * instance.size), p)
    solution = solve_mod_p(system.coefficients, system.rhs, p)
    logger.debug("Elimination over GF(%d): %s", p, "consistent" if solution is not None else "inconsistent")
    if solution is None:
        return None
    return Mapping(tuple(int(v) for v in solution), p)
