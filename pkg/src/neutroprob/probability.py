"""Set-valued probability triples and their event algebra.

The chance of an event is a triple of sets: where its truth chance
varies, where its indeterminacy varies, and where its falsity chance
varies.  Components may overlap and may run past 1 or below 0; nothing
here clamps them, because the taxonomy deliberately names those
overflowing cases.

The three combinators are componentwise set arithmetic:

* joint event:  componentwise product
* complement:   componentwise ``{1} - component``
* either event: componentwise ``a + b - a*b`` with every occurrence
  independent (no dependency tracking), so results can escape [0, 1]
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .nonstandard import Bound, EndpointRole
from .nsset import NSSet, interval, point

_ZERO = Bound(Fraction(0))
_ONE = Bound(Fraction(1))
_ZERO_SET = point(0)
_ONE_SET = point(1)


@dataclass(frozen=True)
class NPTriple:
    """Truth, indeterminacy, and falsity sets of one event.

    Every component must be non-empty; beyond that the components are
    unconstrained real subsets.
    """

    truth: NSSet
    indeterminacy: NSSet
    falsity: NSSet

    def __post_init__(self) -> None:
        for name in ("truth", "indeterminacy", "falsity"):
            if getattr(self, name).is_empty:
                raise ValueError(f"{name} component must be non-empty")

    @property
    def components(self) -> tuple[NSSet, NSSet, NSSet]:
        return (self.truth, self.indeterminacy, self.falsity)

    def __and__(self, other: "NPTriple") -> "NPTriple":
        return np_and(self, other)

    def __or__(self, other: "NPTriple") -> "NPTriple":
        return np_or(self, other)

    def __invert__(self) -> "NPTriple":
        return np_not(self)

    def __str__(self) -> str:
        return f"({self.truth}, {self.indeterminacy}, {self.falsity})"


def np_and(a: NPTriple, b: NPTriple) -> NPTriple:
    """Probability triple of the joint event: componentwise set product."""
    return NPTriple(
        a.truth * b.truth,
        a.indeterminacy * b.indeterminacy,
        a.falsity * b.falsity,
    )


def np_not(a: NPTriple) -> NPTriple:
    """Probability triple of the complement: each component subtracted
    from the singleton {1}."""
    return NPTriple(
        _ONE_SET - a.truth,
        _ONE_SET - a.indeterminacy,
        _ONE_SET - a.falsity,
    )


def np_or(a: NPTriple, b: NPTriple) -> NPTriple:
    """Probability triple of either event: componentwise ``x + y - x*y``.

    Each occurrence varies independently, so wide components can push the
    result outside [0, 1]; that is surfaced, not clamped.
    """
    return NPTriple(
        *((x + y) - (x * y) for x, y in zip(a.components, b.components))
    )


def n_bounds(a: NPTriple) -> tuple[Bound, Bound]:
    """Sum of the component infima and sum of the component suprema."""
    lo = (
        a.truth.inf
        .add(a.indeterminacy.inf, EndpointRole.LOWER)
        .add(a.falsity.inf, EndpointRole.LOWER)
    )
    hi = (
        a.truth.sup
        .add(a.indeterminacy.sup, EndpointRole.UPPER)
        .add(a.falsity.sup, EndpointRole.UPPER)
    )
    return lo, hi


def is_impossible(a: NPTriple) -> bool:
    """Truth tops out at or below 0 and falsity starts at or above 1;
    indeterminacy is unrestricted."""
    return a.truth.sup <= _ZERO and a.falsity.inf >= _ONE


def is_sure(a: NPTriple) -> bool:
    """Truth starts at or above 1 and falsity tops out at or below 0;
    indeterminacy is unrestricted."""
    return a.truth.inf >= _ONE and a.falsity.sup <= _ZERO


def is_totally_indeterminate(a: NPTriple) -> bool:
    """Indeterminacy starts at or above 1; truth and falsity unrestricted."""
    return a.indeterminacy.inf >= _ONE


def impossible_event() -> NPTriple:
    """Canonical impossible event: ({0}, [0, 1], {1})."""
    return NPTriple(point(0), interval(0, 1), point(1))


def sure_event() -> NPTriple:
    """Canonical sure event: ({1}, [0, 1], {0})."""
    return NPTriple(point(1), interval(0, 1), point(0))


def totally_indeterminate_event() -> NPTriple:
    """Canonical totally indeterminate event: ([0, 1], {1}, [0, 1])."""
    return NPTriple(interval(0, 1), point(1), interval(0, 1))


class Label(Enum):
    """Taxonomy of probability generalizations a triple can land in."""

    CLASSICAL = "Classical"
    INTUITIONISTIC = "Intuitionistic"
    PARACONSISTENT = "Paraconsistent"
    DIALETHEIST = "Dialetheist"
    FAILLIBILIST = "Faillibilist"
    PSEUDOPARADOXIST = "Pseudoparadoxist"
    TAUTOLOGIC = "Tautologic"


class ComponentFlag(Enum):
    """Per-component overflow past 1 or underflow below 0."""

    OVERPROBABLE = "Overprobable"
    UNDERPROBABLE = "Underprobable"
    OVERINDETERMINATE = "Overindeterminate"
    UNDERINDETERMINATE = "Underindeterminate"
    OVERUNPROBABLE = "Overunprobable"
    UNDERUNPROBABLE = "Underunprobable"


@dataclass(frozen=True)
class ClassificationReport:
    """Deterministic summary of where a triple sits in the taxonomy."""

    n_inf: Bound
    n_sup: Bound
    labels: frozenset[Label]
    flags: frozenset[ComponentFlag]


def classify(a: NPTriple) -> ClassificationReport:
    """Place a triple in the taxonomy.

    The scalar conditions lift to sets through interval endpoints
    (for-all semantics), so several labels can hold at once and the
    result is never forced to a single label.
    """
    n_inf, n_sup = n_bounds(a)
    i_zero = a.indeterminacy == _ZERO_SET

    labels = set()
    if n_inf == _ONE and n_sup == _ONE and i_zero:
        labels.add(Label.CLASSICAL)
    if n_sup < _ONE and i_zero:
        labels.add(Label.INTUITIONISTIC)
    if n_inf > _ONE and i_zero and a.truth.sup < _ONE and a.falsity.sup < _ONE:
        labels.add(Label.PARACONSISTENT)
    if a.truth == _ONE_SET and a.falsity == _ONE_SET and i_zero:
        labels.add(Label.DIALETHEIST)
    if a.indeterminacy.inf > _ZERO:
        labels.add(Label.FAILLIBILIST)
    if n_sup > _ONE or n_inf < _ZERO:
        labels.add(Label.PSEUDOPARADOXIST)
    if a.truth.sup > _ONE:
        labels.add(Label.TAUTOLOGIC)

    flags = set()
    if a.truth.sup > _ONE:
        flags.add(ComponentFlag.OVERPROBABLE)
    if a.truth.inf < _ZERO:
        flags.add(ComponentFlag.UNDERPROBABLE)
    if a.indeterminacy.sup > _ONE:
        flags.add(ComponentFlag.OVERINDETERMINATE)
    if a.indeterminacy.inf < _ZERO:
        flags.add(ComponentFlag.UNDERINDETERMINATE)
    if a.falsity.sup > _ONE:
        flags.add(ComponentFlag.OVERUNPROBABLE)
    if a.falsity.inf < _ZERO:
        flags.add(ComponentFlag.UNDERUNPROBABLE)

    return ClassificationReport(n_inf, n_sup, frozenset(labels), frozenset(flags))
