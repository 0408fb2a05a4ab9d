"""Pydantic models for exab file formats and structured results."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Annotated, Dict, List, Optional, Tuple, Union

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PositiveInt,
    model_validator,
)

from .ncpoly import AbPoly, CdPoly, YPoly, YTPoly


def _parse_rational(value: object) -> Fraction:
    """Accept an integer or a ``"p/q"`` string.

    >>> _parse_rational("-3/6")
    Fraction(-1, 2)
    >>> _parse_rational(4)
    Fraction(4, 1)
    """
    if isinstance(value, bool):
        raise ValueError("Booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as err:
            raise ValueError(f"Invalid rational {value!r}") from err
    raise ValueError(f"Expected an integer or a 'p/q' string, got {value!r}")


Rational = Annotated[Fraction, BeforeValidator(_parse_rational)]


class PosetFile(BaseModel):
    """JSON poset document: elements, cover pairs and optional cover labels."""

    elements: List[str] = Field(..., description="Element identifiers")
    covers: List[Tuple[str, str]] = Field(
        default_factory=list, description="Cover relations as [lower, upper]"
    )
    labels: Optional[Dict[str, PositiveInt]] = Field(
        None, description='Cover labels keyed "lower|upper"'
    )
    ranks: Optional[Dict[str, int]] = Field(
        None, description="Optional ranks, checked against the covers"
    )


class ArrangementFile(BaseModel):
    """JSON arrangement document: ambient dimension and hyperplane normals."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    dim: int = Field(..., ge=1, description="Ambient dimension d")
    normals: List[List[Rational]] = Field(
        ..., description="Normals as integers or 'p/q' strings"
    )


class RLabelingVerdict(BaseModel):
    """Outcome of an R-labeling check, with a witness interval on failure."""

    ok: bool = Field(..., description="Whether every interval has one increasing chain")
    lower: Optional[str] = Field(None, description="Bottom of the witness interval")
    upper: Optional[str] = Field(None, description="Top of the witness interval")
    increasing_chains: Optional[int] = Field(
        None, description="Weakly increasing maximal chains of the witness interval"
    )


class CheckStatus(str, Enum):
    """Verdict of one verification suite."""

    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


class CheckResult(BaseModel):
    """One line of the verify report."""

    name: str = Field(..., description="Suite name")
    status: CheckStatus = Field(..., description="PASS, FAIL or SKIP")
    detail: str = Field("", description="Counterexample or reason")

    def render(self) -> str:
        return f"{self.status.value} {self.name}" + (
            f": {self.detail}" if self.detail else ""
        )


class PolyTerm(BaseModel):
    """One term of a polynomial in noncommuting letters."""

    word: str = Field(..., description="Letters of the word, empty for the unit")
    coeff: List[int] = Field(..., description="Coefficients of y^0, y^1, ...")


class PolyModel(BaseModel):
    """Structured rendering of an AbPoly or CdPoly."""

    terms: List[PolyTerm] = Field(default_factory=list)

    @classmethod
    def from_ab(cls, p: AbPoly) -> "PolyModel":
        return cls(
            terms=[PolyTerm(word=str(w), coeff=list(c.coeffs)) for w, c in p.terms()]
        )

    @classmethod
    def from_cd(cls, p: CdPoly) -> "PolyModel":
        return cls(
            terms=[
                PolyTerm(
                    word="*".join(letter.value for letter in w.letters),
                    coeff=list(c.coeffs),
                )
                for w, c in p.terms()
            ]
        )


class YTTerm(BaseModel):
    """Coefficient of one power of t."""

    t: int = Field(..., ge=0, description="Exponent of t")
    coeff: List[int] = Field(..., description="Coefficients of y^0, y^1, ...")


class YTPolyModel(BaseModel):
    """Structured rendering of a YTPoly."""

    terms: List[YTTerm] = Field(default_factory=list)

    @classmethod
    def from_poly(cls, p: YTPoly) -> "YTPolyModel":
        terms = []
        for k in range(p.t_degree() + 1):
            coeff = p.coefficient_t(k)
            if coeff:
                terms.append(YTTerm(t=k, coeff=list(coeff.coeffs)))
        return cls(terms=terms)


class YPolyModel(BaseModel):
    """Structured rendering of a YPoly."""

    coeff: List[int] = Field(default_factory=list)

    @classmethod
    def from_poly(cls, p: YPoly) -> "YPolyModel":
        return cls(coeff=list(p.coeffs))


class ExtAbAlgorithm(str, Enum):
    """Route used to compute an extended ab-index."""

    BY_CHAINS = "by_chains"
    BY_LABELING = "by_labeling"


class ExtAbResult(BaseModel):
    """Extended ab-index together with how it was obtained."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    poly: AbPoly = Field(..., description="The extended ab-index")
    algorithm: ExtAbAlgorithm = Field(..., description="Computation route")
    poset_rank: int = Field(..., ge=0, description="Rank n of the poset")

    @model_validator(mode="after")
    def _words_have_length_n(self) -> "ExtAbResult":
        bad = self.poly.lengths() - {self.poset_rank}
        if bad:
            raise ValueError(
                f"Words of length {sorted(bad)} in an index of a rank {self.poset_rank} poset"
            )
        return self


class FiberCount(BaseModel):
    """Face chains over one chain of flats, against Poin_C at y = 1."""

    chain: List[str] = Field(..., description="Chain of flat identifiers")
    faces: int = Field(..., ge=0, description="Number of face chains mapping onto it")
    expected: int = Field(..., description="Chain Poincare polynomial at y = 1")

    @property
    def ok(self) -> bool:
        return self.faces == self.expected


class PullbackCheck(BaseModel):
    """Both sides of Psi(face poset) = a * Psi_pull(flats)."""

    face_side: str = Field(..., description="ab-index of the face poset")
    flats_side: str = Field(..., description="a times the pullback ab-index of the flats")
    ok: bool = Field(..., description="Whether the two sides agree")


class ComputeReport(BaseModel):
    """JSON output of ``exab compute``."""

    op: str = Field(..., description="Operation name")
    route: str = Field(..., description="Labeling source actually used")
    text: str = Field(..., description="Canonical text rendering")
    value: Union[PolyModel, YTPolyModel, YPolyModel] = Field(
        ..., description="Structured coefficients"
    )


class VerifyReport(BaseModel):
    """JSON output of ``exab verify``."""

    results: List[CheckResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status is not CheckStatus.FAIL for r in self.results)


class FibersReport(BaseModel):
    """JSON output of ``exab arrangement --op fibers``."""

    fibers: List[FiberCount] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(f.ok for f in self.fibers)
