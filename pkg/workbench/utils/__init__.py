from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Any, Iterable, List, Sequence
import json
import os

import numpy as np

from utils.errors import MalformedInput


def is_in_debug_mode() -> bool:
    return os.getenv('DEBUG', False) == 'True'


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Counter-based generator for (seed, *stream), no shared global state\n
    Two calls with the same arguments return generators producing identical draws"""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), *map(int, stream)])))


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


def parse_fraction(value: Any) -> Fraction:
    """Accepts ints, "num/den" strings, [num, den] pairs and Fractions"""
    try:
        if isinstance(value, (list, tuple)) and len(value) == 2:
            return Fraction(int(value[0]), int(value[1]))
        if isinstance(value, float):
            raise MalformedInput(f"rational weight {value!r} must be exact, write it as 'num/den'")
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise MalformedInput(f"cannot read rational weight {value!r}: {exc}")


def fraction_to_string(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def matrix_to_pairs(matrix: np.ndarray) -> List[List[List[float]]]:
    """Complex matrix as an array of rows, each entry [re, im]"""
    matrix = np.asarray(matrix, dtype=complex)
    return [[[float(entry.real), float(entry.imag)] for entry in row] for row in matrix]


def pairs_to_matrix(rows: Sequence[Sequence[Sequence[float]]]) -> np.ndarray:
    try:
        data = np.asarray(rows, dtype=float)
    except (ValueError, TypeError) as exc:
        raise MalformedInput(f"matrix entries must be [re, im] pairs: {exc}")
    if data.ndim != 3 or data.shape[2] != 2 or data.shape[0] != data.shape[1]:
        raise MalformedInput(f"expected a square matrix of [re, im] pairs, got array of shape {data.shape}")
    return data[:, :, 0] + 1j * data[:, :, 1]


def vector_to_pairs(vector: np.ndarray) -> List[List[float]]:
    return [[float(entry.real), float(entry.imag)] for entry in np.asarray(vector, dtype=complex)]


def pairs_to_vector(entries: Sequence[Sequence[float]]) -> np.ndarray:
    try:
        data = np.asarray(entries, dtype=float)
    except (ValueError, TypeError) as exc:
        raise MalformedInput(f"vector entries must be [re, im] pairs: {exc}")
    if data.ndim != 2 or data.shape[1] != 2:
        raise MalformedInput(f"expected a list of [re, im] pairs, got array of shape {data.shape}")
    return data[:, 0] + 1j * data[:, 1]


def loads_document(text: str) -> Any:
    """json.loads that reports the failing position through MalformedInput"""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(exc.msg, exc.lineno, exc.colno)


def dumps_document(data: Any) -> str:
    # repr-based floats are the shortest strings that round-trip exactly
    return json.dumps(data, sort_keys=True, allow_nan=False)


def require_keys(data: Any, keys: Iterable[str], what: str) -> None:
    if not isinstance(data, dict):
        raise MalformedInput(f"{what} must be a JSON object")
    missing = [key for key in keys if key not in data]
    if missing:
        raise MalformedInput(f"{what} is missing keys {missing}")
