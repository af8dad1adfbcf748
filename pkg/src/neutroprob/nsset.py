"""Normalized finite unions of closed pieces over the non-standard line.

An :class:`NSSet` is the workhorse container: a sorted tuple of disjoint
closed pieces whose endpoints are monad-tagged rationals.  Construction
always normalizes, so two equal sets have identical piece tuples and
``==`` is set equality.

The four set operations are Minkowski-style and dependency-free: each
occurrence of a set in a formula varies independently, so ``s - s`` spans
an interval instead of collapsing to ``{0}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence, Union

from .nonstandard import Bound, EndpointRole, MonadTag, Rational, as_fraction

BoundLike = Union[Bound, Rational]


class EmptySetError(ValueError):
    """Raised when inf, sup, or a Minkowski operand is the empty set."""


def _as_bound(x: BoundLike) -> Bound:
    return x if isinstance(x, Bound) else Bound(as_fraction(x))


@dataclass(frozen=True)
class Piece:
    """One closed piece ``[lo, hi]``; a degenerate piece is a point."""

    lo: Bound
    hi: Bound

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"piece lower endpoint {self.lo} exceeds upper endpoint {self.hi}")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __str__(self) -> str:
        if self.is_point:
            return f"{{{self.lo}}}"
        return f"[{self.lo}..{self.hi}]"


def _normal_form(pieces: Iterable[Piece]) -> tuple[Piece, ...]:
    items = sorted(pieces, key=lambda p: (p.lo, p.hi))
    merged: list[Piece] = []
    for p in items:
        # Closed pieces merge when they overlap or share an endpoint
        # exactly (same value and same tag).  A piece ending at c and one
        # starting at c+ stay apart: the plain point c separates them.
        if merged and p.lo <= merged[-1].hi:
            last = merged[-1]
            if p.hi > last.hi:
                merged[-1] = Piece(last.lo, p.hi)
        else:
            merged.append(p)
    return tuple(merged)


class NSSet:
    """A set of non-standard reals as a normalized union of closed pieces.

    Any iterable of pieces is accepted; sorting and merging happen here,
    so the piece tuple is canonical.  The empty union is the empty set.
    """

    __slots__ = ("_pieces",)

    def __init__(self, pieces: Iterable[Piece] = ()) -> None:
        self._pieces = _normal_form(pieces)

    @property
    def pieces(self) -> tuple[Piece, ...]:
        return self._pieces

    @property
    def is_empty(self) -> bool:
        return not self._pieces

    def __bool__(self) -> bool:
        return bool(self._pieces)

    def __iter__(self) -> Iterator[Piece]:
        return iter(self._pieces)

    def __len__(self) -> int:
        return len(self._pieces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NSSet):
            return NotImplemented
        return self._pieces == other._pieces

    def __hash__(self) -> int:
        return hash(self._pieces)

    def __str__(self) -> str:
        return format_pieces(self._pieces, str)

    def __repr__(self) -> str:
        return f"NSSet({self})"

    @property
    def inf(self) -> Bound:
        """Lower endpoint of the first piece."""
        if not self._pieces:
            raise EmptySetError("the empty set has no infimum")
        return self._pieces[0].lo

    @property
    def sup(self) -> Bound:
        """Upper endpoint of the last piece."""
        if not self._pieces:
            raise EmptySetError("the empty set has no supremum")
        return self._pieces[-1].hi

    def __contains__(self, x: BoundLike) -> bool:
        b = _as_bound(x)
        return any(p.lo <= b <= p.hi for p in self._pieces)

    def union(self, other: "NSSet") -> "NSSet":
        return NSSet(self._pieces + other._pieces)

    __or__ = union

    def intersect(self, other: "NSSet") -> "NSSet":
        out = []
        for p in self._pieces:
            for q in other._pieces:
                lo = max(p.lo, q.lo)
                hi = min(p.hi, q.hi)
                if lo <= hi:
                    out.append(Piece(lo, hi))
        return NSSet(out)

    __and__ = intersect

    def _require_nonempty(self, other: "NSSet", opname: str) -> None:
        if self.is_empty or other.is_empty:
            raise EmptySetError(f"{opname} is undefined on the empty set")

    def minkowski_add(self, other: "NSSet") -> "NSSet":
        """All pairwise sums.  Endpoint-wise per piece pair: lower
        endpoints add with the lower role, upper with the upper, which
        makes inf(a+b) = inf a + inf b and sup(a+b) = sup a + sup b exact."""
        self._require_nonempty(other, "set addition")
        return NSSet(
            Piece(
                p.lo.add(q.lo, EndpointRole.LOWER),
                p.hi.add(q.hi, EndpointRole.UPPER),
            )
            for p in self._pieces
            for q in other._pieces
        )

    __add__ = minkowski_add

    def minkowski_sub(self, other: "NSSet") -> "NSSet":
        """All pairwise differences: per piece pair, [lo1 - hi2, hi1 - lo2]."""
        self._require_nonempty(other, "set subtraction")
        return NSSet(
            Piece(
                p.lo.sub(q.hi, EndpointRole.LOWER),
                p.hi.sub(q.lo, EndpointRole.UPPER),
            )
            for p in self._pieces
            for q in other._pieces
        )

    __sub__ = minkowski_sub

    def minkowski_mul(self, other: "NSSet") -> "NSSet":
        """All pairwise products.  Per piece pair the result spans the
        extremes of the four endpoint products, so it stays correct for
        operands of any sign."""
        self._require_nonempty(other, "set multiplication")
        pieces = []
        for p in self._pieces:
            for q in other._pieces:
                corners = [(x, y) for x in (p.lo, p.hi) for y in (q.lo, q.hi)]
                lo = min(x.mul(y, EndpointRole.LOWER) for x, y in corners)
                hi = max(x.mul(y, EndpointRole.UPPER) for x, y in corners)
                pieces.append(Piece(lo, hi))
        return NSSet(pieces)

    __mul__ = minkowski_mul

    def div_scalar(self, k: Rational) -> "NSSet":
        """Divide every point by a positive rational."""
        k = as_fraction(k)
        if k <= 0:
            raise ValueError(f"divisor must be a positive rational, got {k}")
        return NSSet(Piece(p.lo.div_scalar(k), p.hi.div_scalar(k)) for p in self._pieces)

    __truediv__ = div_scalar


def format_pieces(pieces: Sequence[Piece], fmt: Callable[[Bound], str]) -> str:
    """Canonical text form: runs of points as ``{a, b}``, intervals as
    ``[lo..hi]``, joined by ``U``.  `fmt` renders a single bound."""
    if not pieces:
        return "{}"
    parts = []
    i = 0
    while i < len(pieces):
        if pieces[i].is_point:
            j = i
            while j < len(pieces) and pieces[j].is_point:
                j += 1
            parts.append("{" + ", ".join(fmt(p.lo) for p in pieces[i:j]) + "}")
            i = j
        else:
            parts.append(f"[{fmt(pieces[i].lo)}..{fmt(pieces[i].hi)}]")
            i += 1
    return " U ".join(parts)


def interval(lo: BoundLike, hi: BoundLike) -> NSSet:
    """Closed interval as a one-piece set."""
    return NSSet([Piece(_as_bound(lo), _as_bound(hi))])


def point(x: BoundLike) -> NSSet:
    """Singleton set."""
    b = _as_bound(x)
    return NSSet([Piece(b, b)])


def points(*xs: BoundLike) -> NSSet:
    """Finite set of points."""
    return NSSet(Piece(b, b) for b in map(_as_bound, xs))


def binad(c: Rational) -> NSSet:
    """Two-sided punctured neighbourhood of ``c``: both monads, with the
    centre itself excluded."""
    c = as_fraction(c)
    return points(Bound(c, MonadTag.MINUS), Bound(c, MonadTag.PLUS))


def empty() -> NSSet:
    return NSSet()
