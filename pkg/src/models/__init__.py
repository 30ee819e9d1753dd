from .base import BaseModel, to_jsonable
from .grid import DiskGrid, GridField
from .quadrature import QuadratureSpec, RadialMoments, BerezinValue
from .verdict import Outcome, Witness, Verdict
from .reports import (
    SupNormBracket,
    MarginReport,
    EuclideanDisc,
    AreaEstimate,
    DensityReport,
    BoundaryExtremum,
    SufficiencyVerdict,
    Theorem33FormReport,
    BerezinLowerBound,
)
from .truncation import ToeplitzTruncation, NeumannCertificate, CertificateRefusal, CertificateResult, SweepRow
from .repro import ReproCheck, ReproReport
from .run_config import RunConfig

__all__ = [
    'BaseModel',
    'to_jsonable',
    'DiskGrid',
    'GridField',
    'QuadratureSpec',
    'RadialMoments',
    'BerezinValue',
    'Outcome',
    'Witness',
    'Verdict',
    'SupNormBracket',
    'MarginReport',
    'EuclideanDisc',
    'AreaEstimate',
    'DensityReport',
    'BoundaryExtremum',
    'SufficiencyVerdict',
    'Theorem33FormReport',
    'BerezinLowerBound',
    'ToeplitzTruncation',
    'NeumannCertificate',
    'CertificateRefusal',
    'CertificateResult',
    'SweepRow',
    'ReproCheck',
    'ReproReport',
    'RunConfig',
]
