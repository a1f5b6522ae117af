from typing import Annotated, Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from .exceptions import SchemaError

# pydantic names the member of a Union[GroupModel, str] in error locations; they are not document keys
_UNION_TAGS = ('GroupModel', 'str')


class StrictModel(BaseModel):
    model_config = ConfigDict(extra='forbid')


class GroupModel(StrictModel):
    kind: Literal['group'] = 'group'
    order: Optional[int] = Field(default=None, ge=1)
    identity: Optional[int] = Field(default=None, ge=0)
    label: Optional[str] = None
    table: list[list[int]]
    names: Optional[list[str]] = None


# inline group, or the path of a group file relative to the referring file
GroupRef = Union[GroupModel, str]


class GammaModel(StrictModel):
    kind: Literal['gamma'] = 'gamma'
    group: GroupRef
    action: list[list[int]]


class LiftModel(StrictModel):
    """A map C: G -> G, read as the gamma function g -> iota(C(g))."""
    kind: Literal['lift'] = 'lift'
    group: GroupRef
    images: list[int]


class RotaBaxterModel(StrictModel):
    kind: Literal['rota_baxter'] = 'rota_baxter'
    group: GroupRef
    images: list[int]


class CoefficientModel(StrictModel):
    """Without a group, Q is C_p^rank in the layout of make_abelian([p] * rank)."""
    group: Optional[GroupRef] = None
    basis: list[int]
    prime: int = Field(ge=2)


class CocycleModel(StrictModel):
    kind: Literal['cocycle'] = 'cocycle'
    base: GroupRef
    coeff: CoefficientModel
    values: list[list[int]]


class CertificateModel(StrictModel):
    kind: Literal['certificate'] = 'certificate'
    trivial: bool
    sigma: Optional[list[int]] = None
    obstruction_witness: Optional[int] = None
    method: Optional[str] = None
    unknowns: Optional[int] = None
    witness: Optional[dict[str, Any]] = None


class BraceReportModel(StrictModel):
    kind: Literal['brace_report'] = 'brace_report'
    skew_brace: bool
    witness: Optional[list[int]] = None


class ClaimModel(StrictModel):
    claim: str
    status: str
    expected: Optional[str] = None
    passed: bool
    witness: Any = None


class ReportModel(StrictModel):
    kind: Literal['report'] = 'report'
    command: str
    seed: int
    passed: bool
    verdicts: list[ClaimModel]
    timing: Optional[dict[str, int]] = None


ObjectModel = Annotated[
    Union[GroupModel, GammaModel, LiftModel, RotaBaxterModel, CocycleModel, CertificateModel, BraceReportModel,
          ReportModel],
    Field(discriminator='kind'),
]

_object_adapter = TypeAdapter(ObjectModel)

# fields that identify a document written without its "kind"
_KIND_MARKERS = (
    ('table', 'group'),
    ('action', 'gamma'),
    ('values', 'cocycle'),
    ('trivial', 'certificate'),
    ('skew_brace', 'brace_report'),
    ('verdicts', 'report'),
    ('images', 'rota_baxter'),
)


def infer_kind(payload):
    for key, kind in _KIND_MARKERS:
        if key in payload:
            return kind
    return None


def json_pointer(location):
    return ''.join('/{}'.format(str(part).replace('~', '~0').replace('/', '~1')) for part in location)


def validate_payload(payload, kind=None):
    """
    Typed model for a decoded JSON document, or SchemaError pointing at the first bad value.
    A document without "kind" is read as the given kind, else as the kind its fields suggest.
    """
    if isinstance(payload, dict) and 'kind' not in payload:
        kind = kind or infer_kind(payload)
        if kind is not None:
            payload = dict(payload, kind=kind)
    try:
        return _object_adapter.validate_python(payload)
    except ValidationError as error:
        first = error.errors()[0]
        location = list(first['loc'])
        # the union tag is not part of the document path
        if location and isinstance(payload, dict) and location[0] == payload.get('kind'):
            location = location[1:]
        location = [part for part in location if part not in _UNION_TAGS]
        raise SchemaError(json_pointer(location), first['msg'])
