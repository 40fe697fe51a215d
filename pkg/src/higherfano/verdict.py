"""Verdicts on higher Fano conditions and the certificates behind them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable

KINDS = (
    "BasisPositivity",
    "EffectivePairing",
    "IndexCriterion",
    "DescentContradiction",
    "NumericThreshold",
    "AxiomAssisted",
    "CuratedProvenance",
)


class Status(str, Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNDETERMINED = "Undetermined"


def fstr(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return fstr(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass(frozen=True)
class Certificate:
    """An exact computation that justifies a verdict.

    ``recipe`` names a registered function which, called with ``args``,
    recomputes ``data["value"]`` from scratch.
    """

    kind: str
    summary: str
    data: dict = field(default_factory=dict)
    recipe: str | None = None
    args: dict = field(default_factory=dict)
    provenance: str | None = None
    axioms: tuple = ()

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        object.__setattr__(self, "axioms", tuple(self.axioms))

    @property
    def value(self):
        v = self.data.get("value")
        return None if v is None else Fraction(v)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "summary": self.summary,
            "data": _jsonable(self.data),
            "recipe": self.recipe,
            "args": _jsonable(self.args),
            "provenance": self.provenance,
            "axioms": list(self.axioms),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(d["kind"], d["summary"], dict(d.get("data", {})), d.get("recipe"),
                   dict(d.get("args", {})), d.get("provenance"), tuple(d.get("axioms", ())))


@dataclass(frozen=True)
class Verdict:
    space: str
    condition: int
    status: Status
    certificate: Certificate | None = None
    reason: str | None = None

    def __post_init__(self) -> None:
        if self.status is not Status.UNDETERMINED and self.certificate is None:
            raise ValueError("Holds/Fails verdicts need a certificate")
        if self.status is Status.UNDETERMINED and not self.reason:
            raise ValueError("Undetermined verdicts need a reason")

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    def to_dict(self) -> dict:
        return {
            "space": self.space,
            "condition": f"F{self.condition}",
            "status": self.status.value,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "reason": self.reason,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        cert = d.get("certificate")
        return cls(d["space"], int(str(d["condition"]).lstrip("F")), Status(d["status"]),
                   None if cert is None else Certificate.from_dict(cert), d.get("reason"))

    @classmethod
    def from_json(cls, text: str) -> "Verdict":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        head = f"{self.space}  F{self.condition}: {self.status.value}"
        if self.certificate is not None:
            return f"{head}  [{self.certificate.kind}] {self.certificate.summary}"
        return f"{head}  ({self.reason})"


def undetermined(space: str, condition: int, reason: str) -> Verdict:
    return Verdict(space, condition, Status.UNDETERMINED, None, reason)


# -- re-verification -----------------------------------------------------------

RECIPES: dict[str, Callable[..., Any]] = {}


def recipe(name: str):
    def deco(fn):
        RECIPES[name] = fn
        return fn
    return deco


def reverify(cert: Certificate) -> bool:
    """Recompute the certificate's value from its recipe and compare exactly."""
    if cert.recipe is None:
        return cert.kind == "CuratedProvenance"
    fn = RECIPES[cert.recipe]
    got = fn(**cert.args)
    want = cert.data.get("value")
    if isinstance(got, bool) or want is None:
        return bool(got) if want is None else got == bool(want)
    return Fraction(got) == Fraction(want)
