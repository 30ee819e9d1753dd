from typing import Union

import numpy as np

from ..core.exceptions import ArgumentError
from ..symbols.boundary import BoundarySamples, TrigPolynomial
from ..utils.validators import Validators

BoundaryData = Union[TrigPolynomial, BoundarySamples]


def poisson_extend_array(data: BoundaryData, points: np.ndarray) -> np.ndarray:
    """
    Harmonic extension of boundary data into the disc.

    A trigonometric polynomial sum a_n e^{int} extends to
    sum_{n>=0} a_n z^n + sum_{n<0} a_n conj(z)^|n|. Samples on equispaced
    angles are averaged against the Poisson kernel (1 - |z|^2) / |e^{it} - z|^2,
    with the discrete weights normalized to sum to one.
    """
    points = np.asarray(points, dtype=complex)
    if isinstance(data, TrigPolynomial):
        result = np.zeros(points.shape, dtype=complex)
        conj = np.conj(points)
        for frequency, coefficient in data.terms:
            result += coefficient * (points ** frequency if frequency >= 0 else conj ** (-frequency))
        return result
    if isinstance(data, BoundarySamples):
        circle = np.exp(1j * data.angles)
        flat = points.ravel()
        kernel = (1.0 - np.abs(flat[:, None]) ** 2) / np.abs(circle[None, :] - flat[:, None]) ** 2
        values = (kernel @ data.values) / kernel.sum(axis=1)
        return values.reshape(points.shape)
    raise ArgumentError(f"Poisson extension needs a TrigPolynomial or BoundarySamples, got {type(data).__name__}")


def poisson_extend(data: BoundaryData, z: complex) -> complex:
    z = Validators.require_open_disc(z)
    return complex(poisson_extend_array(data, np.array([z]))[0])
