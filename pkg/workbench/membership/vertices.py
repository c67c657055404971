from itertools import product
from typing import List, Tuple

import numpy as np

from log_engine.log import logger
from maxent import settings
from tensors.types import Correlation
from utils.errors import VertexCapExceeded


Response = Tuple[int, ...]


def vertex_count(n_a: int, n_b: int, m: int) -> int:
    return m ** n_a * m ** n_b


def _require_cap(n_a: int, n_b: int, m: int, max_vertices: int = None) -> None:
    max_vertices = settings.MAX_VERTICES if max_vertices is None else max_vertices
    count = vertex_count(n_a, n_b, m)
    if count > max_vertices:
        logger.error(f"Refusing to enumerate {count} vertices, cap is {max_vertices}")
        raise VertexCapExceeded(count, max_vertices)


def response_functions(n_a: int, n_b: int, m: int) -> List[Tuple[Response, Response]]:
    """(alice, bob) response function pairs in vertex order, Bob's index running fastest"""
    return [(a, b) for a in product(range(m), repeat=n_a) for b in product(range(m), repeat=n_b)]


def _one_hot(n: int, m: int) -> np.ndarray:
    """Every response function of one party as an (count, n, m) indicator stack"""
    responses = np.array(list(product(range(m), repeat=n)), dtype=int).reshape(-1, n)
    return (responses[:, :, None] == np.arange(m)[None, None, :]).astype(float)


def vertex_matrix(n_a: int, n_b: int, m: int, max_vertices: int = None) -> np.ndarray:
    """Deterministic correlations as rows of a (count, n_a * n_b * m * m) matrix, flattened in (x, y, i, j) order"""
    _require_cap(n_a, n_b, m, max_vertices)
    alice, bob = _one_hot(n_a, m), _one_hot(n_b, m)
    return np.einsum("axi,byj->abxyij", alice, bob).reshape(alice.shape[0] * bob.shape[0], -1)


def enumerate_deterministic(n_a: int, n_b: int, m: int, max_vertices: int = None) -> List[Correlation]:
    rows = vertex_matrix(n_a, n_b, m, max_vertices)
    return [Correlation(n_a, n_b, m, row.reshape(n_a, n_b, m, m)) for row in rows]
