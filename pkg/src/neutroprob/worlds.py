"""Possible-worlds truth valuation.

A statement is scored against an explicit finite list of worlds, each
carrying one or more of the statuses true / false / indeterminate (a
world may hold several at once: that is what a paradox looks like).  The
value of each aspect comes from counting witnessing worlds:

* witnessed in every world: the absolute value ``1+``
* witnessed in some worlds: the relative value 1 at level ``n`` of ``N``
* witnessed nowhere: 0, strengthened to the absolute ``0-`` when the
  opposite holds everywhere (and always for indeterminacy, where "in no
  world" is already the absolute statement)

One downgrade keeps the paradox case faithful: when true and false
co-occur in every world, a component that would be absolute reports the
relative value 1 instead, so a one-world liar statement values to
(1, 1, 1) rather than (1+, 1+, 1+).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Status(Enum):
    TRUE = "T"
    FALSE = "F"
    INDETERMINATE = "I"


_OPPOSING = {Status.TRUE: Status.FALSE, Status.FALSE: Status.TRUE}


def parse_status(s: str) -> frozenset[Status]:
    """Parse a status combination such as "T", "TF", or "I"."""
    if not s:
        raise ValueError("a world needs at least one status")
    out = set()
    for ch in s:
        try:
            out.add(Status(ch))
        except ValueError:
            raise ValueError(
                f"unknown status character {ch!r} (expected a combination of T, F, I)"
            ) from None
    return frozenset(out)


@dataclass(frozen=True)
class WorldAssignment:
    """Per-world status sets for one statement."""

    worlds: tuple[str, ...]
    statuses: tuple[frozenset[Status], ...]

    def __post_init__(self) -> None:
        if not self.worlds:
            raise ValueError("at least one world is required")
        if len(self.worlds) != len(self.statuses):
            raise ValueError(
                f"{len(self.statuses)} status sets for {len(self.worlds)} worlds"
            )
        for name, st in zip(self.worlds, self.statuses):
            if not st:
                raise ValueError(f"world {name!r} has an empty status set")

    @classmethod
    def from_strings(cls, worlds: Sequence[str], status_strings: Iterable[str]) -> "WorldAssignment":
        return cls(tuple(worlds), tuple(parse_status(s) for s in status_strings))


class NLKind(Enum):
    # Order is the value order: 0- < 0 < relative 1 < 1+.
    ABSOLUTE_ZERO = 0
    ZERO = 1
    RELATIVE = 2
    ABSOLUTE = 3


@dataclass(frozen=True)
class NLValue:
    """One aspect's valuation.

    ``RELATIVE`` carries the witness count as its level; the level can
    reach the world count only through the paradox downgrade, where the
    value must read as a plain 1.
    """

    kind: NLKind
    level: int = 0
    total: int = 0

    def __post_init__(self) -> None:
        if self.kind is NLKind.RELATIVE:
            if not 1 <= self.level <= self.total:
                raise ValueError(f"relative level {self.level} of {self.total} out of range")
        elif self.level or self.total:
            raise ValueError(f"{self.kind.name} carries no level")

    @classmethod
    def absolute(cls) -> "NLValue":
        return cls(NLKind.ABSOLUTE)

    @classmethod
    def absolute_zero(cls) -> "NLValue":
        return cls(NLKind.ABSOLUTE_ZERO)

    @classmethod
    def zero(cls) -> "NLValue":
        return cls(NLKind.ZERO)

    @classmethod
    def relative(cls, level: int, total: int) -> "NLValue":
        return cls(NLKind.RELATIVE, level, total)

    def _key(self) -> tuple[int, int]:
        return (self.kind.value, self.level)

    def __lt__(self, other: "NLValue") -> bool:
        if not isinstance(other, NLValue):
            return NotImplemented
        return self._key() < other._key()

    def __le__(self, other: "NLValue") -> bool:
        if not isinstance(other, NLValue):
            return NotImplemented
        return self == other or self._key() <= other._key()

    def render(self) -> str:
        if self.kind is NLKind.ABSOLUTE:
            return "1+"
        if self.kind is NLKind.ABSOLUTE_ZERO:
            return "0-"
        if self.kind is NLKind.ZERO:
            return "0"
        if self.level == self.total:
            return "1"
        return f"1 @ {self.level}/{self.total}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class NLTriple:
    """Truth, falsehood, and indeterminacy valuations of one statement."""

    t: NLValue
    f: NLValue
    i: NLValue

    def render(self) -> str:
        return f"({self.t}, {self.f}, {self.i})"

    def __str__(self) -> str:
        return self.render()


def _is_paradox(w: WorldAssignment) -> bool:
    return all(Status.TRUE in st and Status.FALSE in st for st in w.statuses)


def nl_component(w: WorldAssignment, which: Status) -> NLValue:
    """Value one aspect of a statement by counting witnessing worlds."""
    n = len(w.worlds)
    c = sum(1 for st in w.statuses if which in st)
    if c == n:
        if _is_paradox(w):
            return NLValue.relative(n, n)
        return NLValue.absolute()
    if c > 0:
        return NLValue.relative(c, n)
    if which is Status.INDETERMINATE:
        # Indeterminate in no world is already the absolute statement.
        return NLValue.absolute_zero()
    if all(_OPPOSING[which] in st for st in w.statuses):
        return NLValue.absolute_zero()
    return NLValue.zero()


def nl_triple(w: WorldAssignment) -> NLTriple:
    return NLTriple(
        t=nl_component(w, Status.TRUE),
        f=nl_component(w, Status.FALSE),
        i=nl_component(w, Status.INDETERMINATE),
    )


def annotate(w: WorldAssignment, value: "NLTriple | None" = None) -> tuple[str, ...]:
    """Human-facing notes for a valuation: paradox, tautology, contradiction."""
    if value is None:
        value = nl_triple(w)
    notes = []
    if _is_paradox(w):
        notes.append("paradox")
    if (
        value.t.kind is NLKind.ABSOLUTE
        and value.f.kind is NLKind.ABSOLUTE_ZERO
        and value.i.kind is NLKind.ABSOLUTE_ZERO
    ):
        notes.append("tautology")
    if value.t.kind is NLKind.ABSOLUTE_ZERO and value.f.kind is NLKind.ABSOLUTE:
        notes.append("contradiction")
    return tuple(notes)


class NotApplicable:
    """Valuation of a string that is not a well-formed statement.

    A singleton, unequal to every value and every triple; rendered n/a.
    """

    __slots__ = ()
    _instance: "NotApplicable | None" = None

    def __new__(cls) -> "NotApplicable":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "n/a"

    def __str__(self) -> str:
        return "n/a"


NOT_APPLICABLE = NotApplicable()


def nl_nwff() -> NotApplicable:
    """The undefined valuation assigned to malformed input."""
    return NOT_APPLICABLE
