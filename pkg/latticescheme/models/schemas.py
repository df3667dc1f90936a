from pydantic import BaseModel, Field
from typing import Any, Dict, List, Optional

SCHEMA_VERSION = 1


class CommandConfig(BaseModel):
    subcommand: str = Field(..., description="One of factor, ring, scheme, quotient, tiles, code, sweep")
    alpha: Optional[str] = Field(None, description="Gaussian integer input as a+bi")
    p: Optional[int] = Field(None, description="Rational prime input")
    output_format: str = Field("text", description="text, json, csv or svg")
    output_path: Optional[str] = Field(None, description="File or directory written instead of stdout")


# Arithmetic
class FactorEntry(BaseModel):
    prime: str
    multiplicity: int


class FactorExport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    alpha: str
    norm: int
    unit: str
    factors: List[FactorEntry]
    is_prime: bool


# Quotient ring
class ResidueEntry(BaseModel):
    index: int
    rep: str
    coords: List[int]


class RingExport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    alpha: str
    order: int
    invariant_factors: List[int]
    coordinate_basis: List[str]
    residues: List[ResidueEntry]


# Scheme
class ComplexValue(BaseModel):
    re: float
    im: float


class EigenmatrixExport(BaseModel):
    rows: List[List[ComplexValue]]
    multiplicities: List[int]


class AxiomEntry(BaseModel):
    name: str
    passed: bool
    witness: Optional[Dict[str, Any]] = None


class SchemeExport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    alpha: str
    ordering: str
    n: int
    d: int
    orbits: List[List[str]] = Field(..., description="Members of each class, rotation order from the representative")
    orbit_reps: List[str]
    valencies: List[int]
    relation_vector: List[int]
    tensor: List[List[List[int]]] = Field(..., description="p[i][j][k]")
    eigenmatrix: EigenmatrixExport
    axioms: List[AxiomEntry]


# Quotient schemes
class QuotientExport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    alpha: str
    zero_tilde: List[List[int]] = Field(..., description="Closed subsets applied in turn")
    n: int
    d: int
    point_classes: List[List[int]]
    relation_classes: List[List[int]]
    relation_vector: List[int]


class ChainStepExport(BaseModel):
    divisor: str
    order: int
    invariant_factors: List[int]
    d: int
    involutions: List[int]


class ChainExport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    alpha: str
    steps: List[ChainStepExport]


# Tiling
class TileExport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    alpha: str
    tile_type: str
    clean_boundary: bool
    clean_odd: bool
    boundary_witness: Optional[str]
    representatives: List[str]


# Coding
class CarrierEntry(BaseModel):
    label: int
    point: str


class ConstellationExport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    kind: str
    p: int
    pi: Optional[str]
    carrier: List[CarrierEntry]
    distances: Optional[List[List[int]]] = None


# Sweeps
class SweepRow(BaseModel):
    check: str
    alpha: str
    norm: int
    status: str = Field(..., description="pass, fail or mismatch")
    detail: Dict[str, Any] = Field(default_factory=dict)


class SweepReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    norm_bound: int
    checks: List[str]
    rows: List[SweepRow]

    @property
    def failures(self) -> List[SweepRow]:
        return [row for row in self.rows if row.status != "pass"]
