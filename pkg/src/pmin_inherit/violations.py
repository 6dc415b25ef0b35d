"""Violation certificates shared by the checkers and the enumeration oracle."""

from __future__ import annotations

from dataclasses import dataclass, field

# tags emitted by the polynomial checkers
CHECKER_TAGS = (
    "star",
    "path",
    "fundamental_cycle",
    "adjacent_cycles_part1",
    "adjacent_cycles_part2",
    "pan",
)

# additional tags emitted only by the enumeration oracle
ENUMERATION_TAGS = (
    "weak_cycle",
    "intermediary_cycle",
    "cycle",
    "weak_pan",
    "weak_second_part",
)


@dataclass(frozen=True)
class Violation:
    """A tagged, JSON-ready certificate.

    ``details`` holds plain lists and ints only; edges are ``[u, v, w]``.
    :func:`pmin_inherit.verify.reverify` checks a certificate against a graph
    without reusing any checker code.
    """

    tag: str
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"tag": self.tag, **self.details}

    @classmethod
    def from_dict(cls, data: dict) -> "Violation":
        data = dict(data)
        tag = data.pop("tag")
        return cls(tag, data)
