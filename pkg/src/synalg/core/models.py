from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

SCHEMA_VERSION = 1


class ConditionStatus(str, Enum):
    """Outcome of one condition in an equivalence report."""

    HOLDS = "holds"
    FAILS = "fails"
    IMPLIED = "implied"
    TRIVIAL = "trivial"
    OUT_OF_SCOPE = "out-of-scope"


class ConditionReport(BaseModel):
    """One numbered condition of an equivalence theorem, with its witness."""

    model_config = ConfigDict(frozen=True)

    number: int
    statement: str
    status: ConditionStatus
    witness: dict[str, Any] = Field(default_factory=dict)
    note: str | None = None

    @property
    def ok(self) -> bool:
        return self.status is not ConditionStatus.FAILS


class EquivalenceReport(BaseModel):
    """A set of conditions that must all agree."""

    model_config = ConfigDict(frozen=True)

    algebra: str
    subset: list[int]
    conditions: list[ConditionReport]

    @property
    def consistent(self) -> bool:
        return all(c.ok for c in self.conditions)

    def condition(self, number: int) -> ConditionReport:
        for c in self.conditions:
            if c.number == number:
                return c
        raise KeyError(number)


class SuiteResult(BaseModel):
    """Outcome of a named check suite."""

    suite: str
    passed: bool
    checked: int = 0
    failures: list[str] = Field(default_factory=list)
    details: dict[str, Any] = Field(default_factory=dict)

    @field_validator("suite")
    @classmethod
    def name_must_be_non_empty(cls, v: str) -> str:
        if not v or not v.strip():
            raise ValueError("must not be empty")
        return v


class Envelope(BaseModel):
    """The single JSON document a command emits in ``--json`` mode."""

    model_config = ConfigDict(frozen=True)

    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    command: str
    result: dict[str, Any]
