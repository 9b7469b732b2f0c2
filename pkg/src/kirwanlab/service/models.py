"""Pydantic request/response models for the HTTP service.

Rationals travel as exact ``"p/q"`` strings; polynomials either as term lists
(``[{"exponents": [...], "coeff": "p/q"}, ...]``) or as expression strings
like ``"t^2*x0 - 3/2*x1^2"``.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class FactorModel(BaseModel):
    n: int
    weights: list[int]


class SpecModel(BaseModel):
    factors: list[FactorModel]


class TermModel(BaseModel):
    exponents: list[int]
    coeff: str


PolyInput = str | list[TermModel]


class ChamberSelector(BaseModel):
    """Pick a chamber by 1-based index or by an interior rational value."""

    index: int | None = None
    rep: str | None = None


class SpecRequest(BaseModel):
    spec: SpecModel


class RingResponse(BaseModel):
    variables: list[str]
    relations: list[list[TermModel]]
    graded_dimensions: dict[int, int]


class FixedPointModel(BaseModel):
    choice: list[int]
    mu: str
    weight_product: str
    per_factor_mu: list[str]


class FixedPointsResponse(BaseModel):
    points: list[FixedPointModel]


class ChamberModel(BaseModel):
    lower: str
    upper: str
    representative: str


class ChambersResponse(BaseModel):
    chambers: list[ChamberModel]


class IntegrateRequest(BaseModel):
    spec: SpecModel
    alpha: PolyInput
    c: str


class ValueResponse(BaseModel):
    value: str


class BasisRequest(BaseModel):
    spec: SpecModel
    degree: int
    custom: list[list[int]] | None = None


class BasisResponse(BaseModel):
    degree: int
    monomials: list[list[int]]
    names: list[str]


class TablesRequest(BaseModel):
    spec: SpecModel
    basis: list[list[int]] | None = None
    format: str = Field(default="json", pattern="^(json|csv|text)$")


class TableModel(BaseModel):
    row_labels: list[str]
    columns: list[str]
    rows: list[list[str]]


class TablesResponse(BaseModel):
    basis: list[list[int]]
    contribution: TableModel
    chamber: TableModel
    rendered: dict[str, str] | None = None


class PairingRequest(BaseModel):
    spec: SpecModel
    q: int
    chamber: ChamberSelector
    custom_bases: dict[int, list[list[int]]] | None = None


class PairingResponse(BaseModel):
    q: int
    chamber: ChamberModel
    row_basis: list[list[int]]
    col_basis: list[list[int]]
    entries: list[list[str]]


class BdcRequest(BaseModel):
    spec: SpecModel
    chambers: str | list[int] = "all"
    custom_bases: dict[int, list[list[int]]] | None = None


class SolutionSpaceModel(BaseModel):
    ambient_dim: int
    dimension: int
    particular: list[str]
    nullspace: list[list[str]]


class BlockModel(BaseModel):
    q: int
    row_basis: list[list[int]]
    col_basis: list[list[int]]
    entries: list[list[str]]


class ClassFileModel(BaseModel):
    m: int
    blocks: list[BlockModel]


class BdcResponse(BaseModel):
    per_degree: dict[int, SolutionSpaceModel]
    per_degree_dimension: dict[int, int]
    total_dimension: int
    representative: ClassFileModel
    pretty: str


class VerifyRequest(BaseModel):
    spec: SpecModel
    class_file: ClassFileModel
    chamber: ChamberSelector


class VerifyResponse(BaseModel):
    is_bdc: bool


class RinvRequest(BaseModel):
    spec: SpecModel
    class_file: ClassFileModel
    alpha: PolyInput
    chamber: ChamberSelector


class PolyResponse(BaseModel):
    terms: list[TermModel]
    pretty: str


class DiagonalResponse(BaseModel):
    variables: list[str]
    fiber_integral_matrix: list[list[list[TermModel]]]
    image_of_one: list[TermModel]
    image_of_u: list[TermModel]
    image_of_t1: list[TermModel]
    image_of_t2: list[TermModel]
    pretty: dict[str, str]


class ComposeRequest(BaseModel):
    spec_m: SpecModel
    spec_n: SpecModel
    lm1: list[TermModel]
    lmu: list[TermModel]
    ln1: list[TermModel]
    lnu: list[TermModel]


class ComposeResponse(BaseModel):
    variables: list[str]
    out1: list[TermModel]
    out2: list[TermModel]


class VertexModel(BaseModel):
    name: str
    kind: str


class BranchModel(BaseModel):
    name: str
    tail: str | None = None
    head: str | None = None
    loop: bool = False
    weight: str | None = None


class TrackVerifyRequest(BaseModel):
    vertices: list[VertexModel]
    branches: list[BranchModel]


class TrackVerifyResponse(BaseModel):
    valid_weighting: bool
    boundary_balance: list[str] | None = None


class LineWeightRequest(BaseModel):
    orders: list[int]


class CheckModel(BaseModel):
    name: str
    ok: bool
    expected: object | None = None
    computed: object | None = None
    note: str | None = None


class PaperCheckResponse(BaseModel):
    ok: bool
    checks: list[CheckModel]


class ErrorModel(BaseModel):
    type: str
    message: str
