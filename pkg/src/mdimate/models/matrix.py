"""Complex matrix JSON payload: rows of [re, im] pairs."""

import numpy as np
import numpy.typing as npt

from mdimate.core.tensor import ComplexMatrix, as_complex_matrix
from mdimate.exceptions import ArgumentError

MatrixPayload = list[list[tuple[float, float]]]


def encode_matrix(m: npt.ArrayLike) -> MatrixPayload:
    m = as_complex_matrix(m)
    return [[(float(z.real), float(z.imag)) for z in row] for row in m]


def decode_matrix(payload: MatrixPayload) -> ComplexMatrix:
    if not payload or any(len(row) != len(payload[0]) for row in payload):
        raise ArgumentError("Matrix payload must be a nonempty rectangular list of rows")
    return as_complex_matrix(np.array([[complex(re, im) for re, im in row] for row in payload]))
