import numpy as np
from scipy.linalg import svdvals

from ..models.quadrature import BerezinValue
from ..models.truncation import ToeplitzTruncation
from ..utils.validators import Validators


def kernel_coefficients(z: complex, count: int) -> np.ndarray:
    """c_n = (1 - |z|^2) sqrt(n+1) conj(z)^n, the coordinates of k_z in the basis sqrt(n+1) w^n"""
    n = np.arange(count)
    return (1.0 - abs(z) ** 2) * np.sqrt(n + 1.0) * np.conj(z) ** n


def kernel_tail_norm(z: complex, count: int) -> float:
    """Norm of the part of k_z outside the first ``count`` basis vectors"""
    x = abs(z) ** 2
    return float(np.sqrt(x ** count * ((count + 1) * (1.0 - x) + x)))


def berezin_of_matrix(truncation: ToeplitzTruncation, z: complex) -> BerezinValue:
    """
    <T k_z, k_z> for an N x N truncation, with tail bound
    sigma_max (2 tau + tau^2), tau the norm of the discarded part of k_z.
    """
    z = Validators.require_open_disc(z)
    entries = truncation.entries
    c = kernel_coefficients(z, truncation.N)
    value = complex(np.vdot(c, entries @ c))
    tau = kernel_tail_norm(z, truncation.N)
    sigma_max = float(svdvals(entries)[0])
    return BerezinValue(z, value, sigma_max * (2.0 * tau + tau ** 2), "matrix",
                        {"N": truncation.N, "sigma_max": sigma_max, "kernel_tail": tau})
