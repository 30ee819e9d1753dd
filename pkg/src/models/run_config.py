from dataclasses import dataclass, fields
from typing import Optional

from .base import BaseModel
from ..config import AppSettings


@dataclass(frozen=True)
class RunConfig(BaseModel):
    """Resolved settings of one command line run; echoed into every output"""
    subcommand: str
    symbol_path: Optional[str] = None
    rings: int = AppSettings.DEFAULT_RINGS
    angles: int = AppSettings.DEFAULT_ANGLES
    boundary_gap: float = AppSettings.DEFAULT_BOUNDARY_GAP
    tol: float = AppSettings.DEFAULT_TOLERANCE
    quad_tol: float = AppSettings.DEFAULT_QUADRATURE_TOLERANCE
    mode: str = "exact"
    route: Optional[str] = None
    output_format: str = "json"
    seed: int = AppSettings.DEFAULT_SEED
    n: Optional[int] = None
    delta: float = 1.0
    rho: Optional[float] = None
    resolution: int = AppSettings.DEFAULT_NORM_RESOLUTION

    @classmethod
    def from_namespace(cls, args) -> "RunConfig":
        """Build from an argparse namespace; missing attributes keep their defaults"""
        values = {}
        names = {field.name for field in fields(cls)}
        for name in names:
            source = {"symbol_path": "symbol", "output_format": "format"}.get(name, name)
            value = getattr(args, source, None)
            if value is not None:
                values[name] = value
        values.setdefault("subcommand", getattr(args, "command", "") or "")
        if values.get("tol") is None:
            values["tol"] = AppSettings.get_default_tolerance()
        return cls(**values)
