"""
JSON documents for starcover.

Every file the CLI reads or writes goes through one of these models, so
shape and range checks happen once at the boundary and the algorithms only
ever see validated in-memory objects.
"""

from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from .config import COORDINATE_LIMIT
from .core.geometry import Color, ColoredPoint, DirectedLine, PointSet
from .core.partition import ConvexRegion, Cutting, ThreeCut, TwoCut
from .coverings.base import Certificate, Covering, DoubleChain, Star

#: A coordinate as written in JSON: an integer or an exact ``"p/q"`` string.
RationalValue = Union[int, str]


def encode_rational(value: Union[int, Fraction]) -> RationalValue:
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return int(value)


def decode_rational(value: RationalValue) -> Union[int, Fraction]:
    if isinstance(value, int):
        return value
    parsed = Fraction(value)
    return parsed.numerator if parsed.denominator == 1 else parsed


# ----------------------------------------------------------------------
# Point sets
# ----------------------------------------------------------------------
class PointDoc(BaseModel):
    """One colored point."""

    id: int = Field(..., ge=0, description="Point id, unique within the set")
    x: int = Field(..., ge=-COORDINATE_LIMIT, le=COORDINATE_LIMIT)
    y: int = Field(..., ge=-COORDINATE_LIMIT, le=COORDINATE_LIMIT)
    color: Color = Field(..., description="R or B")


class PointSetDocument(BaseModel):
    """``{"points": [{"id": 0, "x": 3, "y": -7, "color": "R"}, ...]}``"""

    points: List[PointDoc] = Field(default_factory=list)

    @model_validator(mode="after")
    def _unique_ids(self) -> "PointSetDocument":
        ids = [p.id for p in self.points]
        if len(set(ids)) != len(ids):
            raise ValueError("point ids must be unique")
        return self

    def to_point_set(self) -> PointSet:
        return PointSet(ColoredPoint(p.id, p.x, p.y, p.color) for p in self.points)

    @classmethod
    def from_point_set(cls, s: PointSet) -> "PointSetDocument":
        return cls(points=[PointDoc(id=p.id, x=p.x, y=p.y, color=p.color) for p in s])


# ----------------------------------------------------------------------
# Coverings
# ----------------------------------------------------------------------
class StarDoc(BaseModel):
    center: int = Field(..., ge=0)
    leaves: List[int] = Field(..., min_length=3, max_length=3)


class CertificateDoc(BaseModel):
    """Driver branch, its parameters and the exact lower bound it guarantees."""

    branch: str
    params: Dict[str, int] = Field(default_factory=dict)
    removed: List[int] = Field(default_factory=list)
    swapped: bool = False
    bound: str = Field(..., description="Exact bound as an integer or p/q string")
    bound_ceil: int

    @field_validator("bound")
    @classmethod
    def _parses(cls, value: str) -> str:
        Fraction(value)
        return value

    def to_certificate(self) -> Certificate:
        return Certificate(
            branch=self.branch,
            bound=Fraction(self.bound),
            params=dict(self.params),
            removed=list(self.removed),
            swapped=self.swapped,
        )


class CoveringDocument(BaseModel):
    """``{"stars": [{"center": id, "leaves": [a, b, c]}], "uncovered": [...], "certificate": {...}}``"""

    stars: List[StarDoc] = Field(default_factory=list)
    uncovered: List[int] = Field(default_factory=list)
    certificate: Optional[CertificateDoc] = None
    strategy: Optional[str] = None

    def to_covering(self) -> Covering:
        return Covering(
            stars=[Star(doc.center, tuple(doc.leaves)) for doc in self.stars],  # type: ignore[arg-type]
            uncovered=list(self.uncovered),
            certificate=self.certificate.to_certificate() if self.certificate else None,
        )

    @classmethod
    def from_covering(cls, covering: Covering, strategy: Optional[str] = None) -> "CoveringDocument":
        certificate = covering.certificate
        return cls(
            stars=[StarDoc(center=star.center, leaves=list(star.leaves)) for star in covering.stars],
            uncovered=sorted(covering.uncovered),
            certificate=CertificateDoc(**certificate.as_dict()) if certificate else None,
            strategy=strategy,
        )


# ----------------------------------------------------------------------
# Partitions and cuttings
# ----------------------------------------------------------------------
class HalfplaneDoc(BaseModel):
    """Open left side of the line through ``anchor`` along ``direction``."""

    anchor: Tuple[RationalValue, RationalValue]
    direction: Tuple[int, int]

    @field_validator("direction")
    @classmethod
    def _nonzero(cls, value: Tuple[int, int]) -> Tuple[int, int]:
        if value == (0, 0):
            raise ValueError("direction must be nonzero")
        return value

    @field_validator("anchor")
    @classmethod
    def _rational(cls, value: Tuple[RationalValue, RationalValue]) -> Tuple[RationalValue, RationalValue]:
        for part in value:
            decode_rational(part)
        return value

    def to_line(self) -> DirectedLine:
        return DirectedLine(
            (decode_rational(self.anchor[0]), decode_rational(self.anchor[1])), self.direction
        )

    @classmethod
    def from_line(cls, line: DirectedLine) -> "HalfplaneDoc":
        return cls(
            anchor=(encode_rational(line.anchor[0]), encode_rational(line.anchor[1])),
            direction=(int(line.direction[0]), int(line.direction[1])),
        )


class RegionDoc(BaseModel):
    halfplanes: List[HalfplaneDoc] = Field(default_factory=list)
    members: List[int] = Field(default_factory=list)
    kind: Literal["X", "Y"] = "X"
    quota: Optional[Tuple[int, int]] = None

    def to_region(self) -> ConvexRegion:
        return ConvexRegion(
            tuple(h.to_line() for h in self.halfplanes), tuple(self.members), self.kind, self.quota
        )

    @classmethod
    def from_region(cls, region: ConvexRegion) -> "RegionDoc":
        return cls(
            halfplanes=[HalfplaneDoc.from_line(h) for h in region.halfplanes],
            members=list(region.members),
            kind=region.kind,  # type: ignore[arg-type]
            quota=region.quota,
        )


class CuttingDoc(BaseModel):
    """A 2-cutting (``line``) or a 3-cutting (``apex`` and three ``rays``)."""

    kind: Literal["2cut", "3cut"]
    line: Optional[HalfplaneDoc] = None
    apex: Optional[Tuple[RationalValue, RationalValue]] = None
    rays: Optional[List[Tuple[int, int]]] = None
    assignment: Optional[List[int]] = None

    @model_validator(mode="after")
    def _complete(self) -> "CuttingDoc":
        if self.kind == "2cut" and self.line is None:
            raise ValueError("a 2cut needs a line")
        if self.kind == "3cut" and (self.apex is None or not self.rays or len(self.rays) != 3):
            raise ValueError("a 3cut needs an apex and three rays")
        return self

    def to_cutting(self) -> Cutting:
        if self.kind == "2cut":
            return TwoCut(self.line.to_line())  # type: ignore[union-attr]
        apex = (decode_rational(self.apex[0]), decode_rational(self.apex[1]))  # type: ignore[index]
        rays = tuple(tuple(ray) for ray in self.rays)  # type: ignore[union-attr]
        return ThreeCut(apex, rays, tuple(self.assignment or (0, 1, 2)))  # type: ignore[arg-type]

    @classmethod
    def from_cutting(cls, cut: Cutting) -> "CuttingDoc":
        if isinstance(cut, TwoCut):
            return cls(kind="2cut", line=HalfplaneDoc.from_line(cut.line))
        return cls(
            kind="3cut",
            apex=(encode_rational(cut.apex[0]), encode_rational(cut.apex[1])),
            rays=[tuple(ray) for ray in cut.rays],  # type: ignore[misc]
            assignment=list(cut.assignment),
        )


class PartitionDocument(BaseModel):
    """``{"regions": [{"halfplanes": [...], "members": [...], "kind": "X"}]}``"""

    regions: List[RegionDoc] = Field(default_factory=list)
    cutting: Optional[CuttingDoc] = None

    def to_regions(self) -> List[ConvexRegion]:
        return [doc.to_region() for doc in self.regions]

    @classmethod
    def from_regions(
        cls, regions: List[ConvexRegion], cutting: Optional[Cutting] = None
    ) -> "PartitionDocument":
        return cls(
            regions=[RegionDoc.from_region(region) for region in regions],
            cutting=CuttingDoc.from_cutting(cutting) if cutting is not None else None,
        )


# ----------------------------------------------------------------------
# Double chains
# ----------------------------------------------------------------------
class DoubleChainDocument(BaseModel):
    """``{"points": [...], "chain1": [ids], "chain2": [ids]}``"""

    points: List[PointDoc] = Field(default_factory=list)
    chain1: List[int] = Field(default_factory=list)
    chain2: List[int] = Field(default_factory=list)

    def to_double_chain(self) -> DoubleChain:
        s = PointSetDocument(points=self.points).to_point_set()
        return DoubleChain(s, tuple(self.chain1), tuple(self.chain2))

    @classmethod
    def from_double_chain(cls, dc: DoubleChain) -> "DoubleChainDocument":
        return cls(
            points=PointSetDocument.from_point_set(dc.points).points,
            chain1=list(dc.chain1),
            chain2=list(dc.chain2),
        )


# ----------------------------------------------------------------------
# Oracle
# ----------------------------------------------------------------------
class OracleReport(BaseModel):
    """Exact search outcome as printed by ``starcover oracle``."""

    r: int
    b: int
    covered: int = Field(..., description="Largest number of coverable points found")
    uncovered: int
    optimal: bool
    nodes_explored: int
    covering: CoveringDocument

    def summary(self) -> Dict[str, Any]:
        return self.model_dump(exclude={"covering"})
