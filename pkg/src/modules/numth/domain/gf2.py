"""
Álgebra lineal sobre F₂ con matrices numpy de tipo uint8.

Se usa para el núcleo de la matriz de emparejamiento, para las
condiciones locales de Selmer y para expresar elementos en una base.
"""
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np


def as_gf2(rows, width: Optional[int] = None) -> np.ndarray:
    """Convierte filas de bits a una matriz uint8 reducida módulo 2."""
    matrix = np.array(rows, dtype=np.uint8)
    if matrix.size == 0:
        return np.zeros((0, width or 0), dtype=np.uint8)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    return matrix % 2


@dataclass(frozen=True)
class RowEchelon:
    """Forma escalonada reducida junto con sus columnas pivote."""
    matrix: np.ndarray
    pivots: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def row_reduce(matrix: np.ndarray) -> RowEchelon:
    """Eliminación de Gauss-Jordan sobre F₂."""
    reduced = as_gf2(matrix).copy()
    rows, cols = reduced.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        candidates = np.nonzero(reduced[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            reduced[[row, pivot]] = reduced[[pivot, row]]
        hits = np.nonzero(reduced[:, col])[0]
        for r in hits:
            if r != row:
                reduced[r, :] ^= reduced[row, :]
        pivots.append(col)
        row += 1
    return RowEchelon(matrix=reduced, pivots=tuple(pivots))


def rank(matrix: np.ndarray) -> int:
    return row_reduce(matrix).rank


def nullspace(matrix: np.ndarray) -> np.ndarray:
    """
    Base del núcleo derecho {x : M·x = 0} sobre F₂.

    Returns:
        Matriz cuyas filas forman la base (0 filas si el núcleo es trivial)
    """
    matrix = as_gf2(matrix)
    cols = matrix.shape[1]
    echelon = row_reduce(matrix)
    pivot_set = set(echelon.pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vector = np.zeros(cols, dtype=np.uint8)
        vector[free] = 1
        for row, col in enumerate(echelon.pivots):
            if echelon.matrix[row, free]:
                vector[col] = 1
        basis.append(vector)
    if not basis:
        return np.zeros((0, cols), dtype=np.uint8)
    return np.vstack(basis)


def in_span(rows: np.ndarray, vector: Sequence[int]) -> bool:
    """Indica si el vector pertenece al subespacio generado por las filas."""
    rows = as_gf2(rows, width=len(vector))
    if rows.shape[0] == 0:
        return not any(int(b) % 2 for b in vector)
    return rank(rows) == rank(np.vstack([rows, as_gf2(vector)]))


def solve(rows: np.ndarray, vector: Sequence[int]) -> Optional[np.ndarray]:
    """
    Coordenadas c con Σ c_r·fila_r = vector, o None si no existe solución.

    Las filas deben ser linealmente independientes para que la solución sea única.
    """
    rows = as_gf2(rows, width=len(vector))
    count = rows.shape[0]
    target = as_gf2(vector).reshape(-1, 1)
    augmented = np.concatenate([rows.T, target], axis=1)
    echelon = row_reduce(augmented)
    if count in echelon.pivots:
        return None
    solution = np.zeros(count, dtype=np.uint8)
    for row, col in enumerate(echelon.pivots):
        solution[col] = echelon.matrix[row, count]
    return solution


def extend_independent(rows: Iterable[Sequence[int]], width: int) -> Tuple[int, ...]:
    """Índices de un subconjunto maximal independiente, tomado en orden."""
    chosen = []
    current = np.zeros((0, width), dtype=np.uint8)
    for index, row in enumerate(rows):
        if not in_span(current, row):
            current = np.vstack([current, as_gf2(row)])
            chosen.append(index)
    return tuple(chosen)
