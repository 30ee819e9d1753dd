from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from .base import BaseModel
from ..core.exceptions import ArgumentError


@dataclass(frozen=True, eq=False)
class ToeplitzTruncation(BaseModel):
    """
    N x N section of T_phi in the orthonormal basis e_n = sqrt(n + 1) z^n:
    entries[i, j] = <T_phi e_j, e_i>.
    """
    entries: np.ndarray
    provenance: str
    symbol: str
    estimated_error: Optional[float] = None

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] == 0:
            raise ArgumentError(f"truncation must be a non-empty square matrix, got shape {entries.shape}")
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    @property
    def N(self) -> int:
        return int(self.entries.shape[0])

    def to_dict(self):
        return {
            "N": self.N,
            "provenance": self.provenance,
            "symbol": self.symbol,
            "estimated_error": self.estimated_error,
            "entries": [[[float(v.real), float(v.imag)] for v in row] for row in self.entries],
        }


@dataclass(frozen=True)
class NeumannCertificate(BaseModel):
    """||I - T_{R phi}|| <= q < 1, hence ||T_phi^-1|| <= R / (1 - q)"""
    R: float
    q: float
    inverse_norm_bound: float
    sup_lower: float
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        if not self.q < 1.0:
            raise ArgumentError(f"Neumann certificate needs q < 1, got {self.q}")


@dataclass(frozen=True)
class CertificateRefusal(BaseModel):
    """No certificate; this is not a proof of non-invertibility"""
    reason: str
    R: Optional[float] = None
    q: Optional[float] = None


CertificateResult = Union[NeumannCertificate, CertificateRefusal]


@dataclass(frozen=True)
class SweepRow(BaseModel):
    N: int
    sigma_min: float
    sigma_max: float
