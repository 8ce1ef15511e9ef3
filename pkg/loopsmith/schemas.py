"""Pydantic models for loopsmith's reports and verdicts.

These are the report-shaped values that leave the library: property reports,
Moufang's Property verdicts, experiment rows and the generic report document
rendered by `loopsmith.formats.write_report`. Invariants that tie fields
together are enforced by model validators, so an instance that exists is a
consistent one.

Example:
    from loopsmith.schemas import MPKind, MPVerdict

    verdict = MPVerdict(kind=MPKind.MOUFANG, order=2)
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Tuple3 = tuple[int, int, int]


class MPKind(str, Enum):
    """Classification of a loop with respect to Moufang's theorem.

    Attributes:
        MOUFANG: The loop is Moufang (and therefore satisfies the theorem)
        MP: Not Moufang, yet every triple with trivial associator generates a group
        FAILS: Some triple with trivial associator generates a non-group
    """

    MOUFANG = "MOUFANG"
    MP = "MP"
    FAILS = "FAILS"


class SubloopSet(BaseModel):
    """A multiplicatively closed subset of a loop, with its generators."""

    model_config = ConfigDict(frozen=True)

    parent_order: int = Field(..., ge=1, description="Order of the parent loop")
    members: frozenset[int] = Field(..., description="1-based member elements")
    generators: list[int] = Field(..., min_length=1, description="1-based generators")

    @model_validator(mode="after")
    def _members_in_range(self) -> "SubloopSet":
        if 1 not in self.members:
            raise ValueError("a subloop must contain the identity 1")
        if any(not 1 <= m <= self.parent_order for m in self.members):
            raise ValueError("members must lie in 1..parent_order")
        if not set(self.generators) <= self.members:
            raise ValueError("generators must be members")
        return self

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


class PropertyReport(BaseModel):
    """Predicates of a loop together with refuting witnesses.

    Attributes:
        is_commutative: a*b = b*a for all pairs
        has_ip: the inverse property holds
        exponent_two: x*x = 1 for all x
        is_steiner: has_ip and exponent_two
        is_moufang: the Moufang identity (xy)(zx) = x((yz)x) holds
        witnesses: refuting tuples keyed by the failed property name
    """

    model_config = ConfigDict(frozen=True)

    order: int = Field(..., ge=1)
    is_commutative: bool
    has_ip: bool
    exponent_two: bool
    is_steiner: bool
    is_moufang: bool
    witnesses: dict[str, tuple[int, ...]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _steiner_is_ip_and_exponent_two(self) -> "PropertyReport":
        if self.is_steiner != (self.has_ip and self.exponent_two):
            raise ValueError("is_steiner must equal has_ip and exponent_two")
        for name in self.witnesses:
            if getattr(self, name, None) is not False:
                raise ValueError(f"witness given for a property that did not fail: {name}")
        return self

    def all_hold(self) -> bool:
        return all(
            (self.is_commutative, self.has_ip, self.exponent_two, self.is_steiner, self.is_moufang)
        )


class MPWitness(BaseModel):
    """An associating triple whose generated subloop is not a group."""

    model_config = ConfigDict(frozen=True)

    triple: Tuple3 = Field(..., description="(a, b, c) with associator(a, b, c) = 1")
    refuting: Tuple3 = Field(..., description="(p, q, r) in <a, b, c> with (pq)r != p(qr)")


class MPVerdict(BaseModel):
    """Outcome of `mp_status`.

    Attributes:
        kind: MOUFANG, MP or FAILS
        order: Order of the classified loop
        witness: Present exactly when kind is FAILS
        deterministic: False when a parallel scan picked the witness
        moufang_witness: A triple refuting the Moufang identity, when not MOUFANG
    """

    model_config = ConfigDict(frozen=True)

    kind: MPKind
    order: int = Field(..., ge=1)
    witness: MPWitness | None = None
    deterministic: bool = True
    moufang_witness: Tuple3 | None = None

    @model_validator(mode="after")
    def _witness_matches_kind(self) -> "MPVerdict":
        if (self.kind is MPKind.FAILS) != (self.witness is not None):
            raise ValueError("a witness is required for FAILS and forbidden otherwise")
        if self.kind is not MPKind.MOUFANG and self.moufang_witness is None:
            raise ValueError("a non-Moufang verdict must name a Moufang identity failure")
        return self


class ExperimentRow(BaseModel):
    """One Bose parameter of the criterion-versus-brute-force experiment."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=3)
    order: int
    criterion: bool = Field(..., description="gcd(n, 7) = 1")
    brute_verdict: MPKind
    agree: bool
    published: MPKind | None = Field(None, description="Kind the published order lists assign")

    @model_validator(mode="after")
    def _agreement(self) -> "ExperimentRow":
        if self.order != 3 * self.n + 1:
            raise ValueError("order must be 3n + 1")
        if self.agree != (self.criterion == (self.brute_verdict is MPKind.MP)):
            raise ValueError("agree must equal (criterion <=> brute_verdict == MP)")
        return self


class ReportWitness(BaseModel):
    """A labelled list of element tuples."""

    label: str = Field(..., min_length=1)
    tuples: list[tuple[int, ...]] = Field(..., min_length=1)

    @field_validator("label")
    @classmethod
    def _plain_label(cls, value: str) -> str:
        if any(ch in value for ch in "\t\n\r :"):
            raise ValueError("witness labels may not contain whitespace or ':'")
        return value


class ReportDocument(BaseModel):
    """Ordered key/value properties plus witnesses, ready to render."""

    subject: str = ""
    properties: list[tuple[str, str | int | bool]] = Field(default_factory=list)
    witnesses: list[ReportWitness] = Field(default_factory=list)

    @model_validator(mode="after")
    def _unique_plain_keys(self) -> "ReportDocument":
        keys = [key for key, _ in self.properties]
        if len(keys) != len(set(keys)):
            raise ValueError("property keys must be unique")
        texts = [self.subject, *keys, *(str(value) for _, value in self.properties)]
        if any(ch in text for text in texts for ch in "\t\n\r"):
            raise ValueError("subject, keys and values may not contain tabs or newlines")
        if any(" = " in key or " " in key for key in keys):
            raise ValueError("property keys may not contain spaces")
        return self
