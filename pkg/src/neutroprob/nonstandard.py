"""Exact arithmetic and ordering on non-standard finite numbers.

The carrier is the rational line extended with symbolic infinitesimal
shifts: ``a-`` denotes a value sitting infinitesimally below the rational
``a`` (its left monad), ``a+`` one sitting infinitesimally above (its
right monad).  The shift is a pure tag, never a stored magnitude, so the
arithmetic works at first order: ``2*eps`` and ``eps`` are both just
"infinitesimally above".

Combining a left-shifted and a right-shifted number produces a two-sided
punctured neighbourhood (a binad) that has no place in a totally ordered
endpoint algebra.  Every operation therefore takes the *role* the result
will play: at the lower endpoint of a piece the two-sided case resolves
to the minus side, at the upper endpoint to the plus side.  This is what
keeps the inf/sup laws of interval unions exact.

Values are ``fractions.Fraction`` throughout; floats are rejected so that
equality stays bit-exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Union

Rational = Union[Fraction, int, str]


class MonadTag(Enum):
    """Infinitesimal shift attached to a rational value.

    ``MINUS`` marks the left monad, ``PLUS`` the right monad, and ``NONE``
    a plain standard number.
    """

    MINUS = -1
    NONE = 0
    PLUS = 1

    def reflected(self) -> "MonadTag":
        """Mirror the shift, as happens under negation or subtraction."""
        return MonadTag(-self.value)


class EndpointRole(Enum):
    """Which endpoint of a piece an arithmetic result will become."""

    LOWER = "lower"
    UPPER = "upper"


class _Binad:
    """Marker for the two-sided tag clash (both monads at once)."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "BINAD"


#: Combining a minus and a plus tag yields this, not a tag: the result is
#: a punctured neighbourhood with no defined order against its centre.
BINAD = _Binad()


def combine_tags(a: MonadTag, b: MonadTag) -> "MonadTag | _Binad":
    """Combine two tags under addition.

    Like tags absorb themselves and a plain value is transparent; the
    minus/plus clash yields :data:`BINAD`.
    """
    if a is MonadTag.NONE:
        return b
    if b is MonadTag.NONE or a is b:
        return a
    return BINAD


def resolve_tag(combined: "MonadTag | _Binad", role: EndpointRole) -> MonadTag:
    """Collapse a tag combination to a usable endpoint tag.

    A binad spans both sides of its centre; its infimum lies on the minus
    side and its supremum on the plus side, so the endpoint role picks.
    """
    if combined is BINAD:
        return MonadTag.MINUS if role is EndpointRole.LOWER else MonadTag.PLUS
    assert isinstance(combined, MonadTag)
    return combined


def as_fraction(value: Rational) -> Fraction:
    """Coerce to an exact rational; floats are deliberately refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("expected an exact rational, got bool")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(
        f"expected an exact rational (Fraction, int, or string), got {type(value).__name__}"
    )


@total_ordering
@dataclass(frozen=True)
class Bound:
    """A rational value with a monad tag; the atom of endpoint arithmetic.

    Ordering is total: values compare first, and on equal values the left
    monad sits below the untagged value, which sits below the right monad.
    """

    value: Fraction
    tag: MonadTag = MonadTag.NONE

    def __post_init__(self) -> None:
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", as_fraction(self.value))
        if not isinstance(self.tag, MonadTag):
            raise TypeError(f"tag must be a MonadTag, got {type(self.tag).__name__}")

    def _key(self) -> tuple[Fraction, int]:
        return (self.value, self.tag.value)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Bound):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self) -> str:
        suffix = {MonadTag.MINUS: "-", MonadTag.NONE: "", MonadTag.PLUS: "+"}[self.tag]
        return f"{self.value}{suffix}"

    def add(self, other: "Bound", role: EndpointRole) -> "Bound":
        """Sum of two bounds; a minus/plus clash resolves by `role`."""
        return Bound(
            self.value + other.value,
            resolve_tag(combine_tags(self.tag, other.tag), role),
        )

    def sub(self, other: "Bound", role: EndpointRole) -> "Bound":
        """Difference; the subtrahend's shift mirrors before combining.

        Subtracting a slightly smaller number yields a slightly larger
        result, hence the reflection.
        """
        return Bound(
            self.value - other.value,
            resolve_tag(combine_tags(self.tag, other.tag.reflected()), role),
        )

    def mul(self, other: "Bound", role: EndpointRole) -> "Bound":
        """Product; each shift is mirrored by the other value's sign and
        annihilated by an exact zero (first-order behaviour)."""
        return Bound(
            self.value * other.value,
            resolve_tag(
                combine_tags(
                    _scaled_tag(self.tag, other.value),
                    _scaled_tag(other.tag, self.value),
                ),
                role,
            ),
        )

    def div_scalar(self, k: Rational) -> "Bound":
        """Divide by a positive rational; the shift survives unchanged."""
        k = as_fraction(k)
        if k <= 0:
            raise ValueError(f"divisor must be a positive rational, got {k}")
        return Bound(self.value / k, self.tag)


def _scaled_tag(tag: MonadTag, other_value: Fraction) -> MonadTag:
    # Scaling by a negative flips the side of the shift; an exact zero
    # kills it entirely (the first-order term vanishes).
    if other_value == 0:
        return MonadTag.NONE
    if other_value < 0:
        return tag.reflected()
    return tag


_TAG_FROM_STR = {
    "-": MonadTag.MINUS,
    "": MonadTag.NONE,
    "0": MonadTag.NONE,
    "+": MonadTag.PLUS,
}


def bound(value: Rational, tag: "MonadTag | str" = MonadTag.NONE) -> Bound:
    """Shorthand constructor: ``bound("3/10", "-")`` gives the bound 3/10-."""
    if isinstance(tag, str):
        try:
            tag = _TAG_FROM_STR[tag]
        except KeyError:
            raise ValueError(f"unknown tag {tag!r} (expected '-', '+', '0', or '')") from None
    return Bound(as_fraction(value), tag)
