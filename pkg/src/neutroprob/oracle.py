"""Brute-force verification support.

Two independent oracles live here, plus the seeded generators that feed
them:

* :func:`oracle_setop` recomputes a set operation by enumerating a grid
  of sample points (piece endpoints and midpoints) and taking the hull
  per piece pair.  Addition and subtraction are monotone per piece and
  multiplication is endpoint-extremal, so on interval pieces this equals
  the exact result.  Midpoints only catch bugs that happen to coincide
  at endpoints; the correctness argument rests on the endpoints.

* :func:`expected_tag` rederives the monad tag of a bound operation from
  plain rational arithmetic: substitute a small positive epsilon for one
  operand's tag at a time and read the deviation signs.  Substituting
  one side at a time keeps the check first-order (a shared epsilon would
  cancel on the diagonal for a minus/plus pair, and a product of two
  shifted zeros would smuggle in a second-order term).

Nothing in this module calls the tagged arithmetic to produce expected
values, so agreement is meaningful.
"""

from __future__ import annotations

import operator
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .nonstandard import Bound, EndpointRole, MonadTag
from .nsset import EmptySetError, NSSet, Piece, interval
from .probability import NPTriple

DEFAULT_EPS = Fraction(1, 10**9)
MAX_EPS = Fraction(1, 10**6)

_FRACTION_OPS: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}

#: The production implementations the set-operation suite checks against.
#: Kept as a mapping so a corrupted build can be simulated in tests.
SET_OPS: dict[str, Callable[[NSSet, NSSet], NSSet]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
}


class OracleScopeError(ValueError):
    """Input outside what the brute-force oracle certifies."""


# ---------------------------------------------------------------------------
# grid oracle for set operations


def grid_points(s: NSSet) -> list[Fraction]:
    """Sample points of a tag-free set: piece endpoints plus midpoints."""
    out = []
    for p in s:
        if p.lo.tag is not MonadTag.NONE or p.hi.tag is not MonadTag.NONE:
            raise OracleScopeError("grid sampling is defined for tag-free sets only")
        out.append(p.lo.value)
        if not p.is_point:
            out.append((p.lo.value + p.hi.value) / 2)
            out.append(p.hi.value)
    return out


def _piece_grid(p: Piece) -> list[Fraction]:
    if p.is_point:
        return [p.lo.value]
    return [p.lo.value, (p.lo.value + p.hi.value) / 2, p.hi.value]


def oracle_setop(op: str, a: NSSet, b: NSSet) -> NSSet:
    """Recompute a Minkowski operation by exhaustive grid enumeration.

    Every pairwise combination of sample points is evaluated; results
    are bucketed per piece pair and the hull of each bucket becomes a
    piece.  Restricted to tag-free operands with at most 3 pieces.
    """
    if op not in SET_OPS:
        raise OracleScopeError(f"unknown set operation {op!r}")
    if a.is_empty or b.is_empty:
        raise EmptySetError(f"set {op} is undefined on the empty set")
    if len(a) > 3 or len(b) > 3:
        raise OracleScopeError("the oracle certifies at most 3 pieces per operand")
    for s in (a, b):
        grid_points(s)  # raises on tags
    f = _FRACTION_OPS[op]
    pieces = []
    for p in a:
        for q in b:
            values = [f(x, y) for x in _piece_grid(p) for y in _piece_grid(q)]
            pieces.append(Piece(Bound(min(values)), Bound(max(values))))
    return NSSet(pieces)


# ---------------------------------------------------------------------------
# epsilon oracle for bound operations


_SHIFT = {MonadTag.MINUS: -1, MonadTag.NONE: 0, MonadTag.PLUS: 1}


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _check_eps(eps: Fraction) -> Fraction:
    eps = Fraction(eps)
    if not 0 < eps <= MAX_EPS:
        raise ValueError(f"eps must satisfy 0 < eps <= {MAX_EPS}, got {eps}")
    return eps


def expected_tag(
    op: str,
    a: Bound,
    b: Bound,
    role: EndpointRole,
    eps: Fraction = DEFAULT_EPS,
) -> MonadTag:
    """Derive the result tag of a bound operation from epsilon substitution.

    Each operand's tag is replaced by a +/- eps shift *on its own* and
    the sign of the resulting deviation recorded.  Two zero signs mean a
    plain value; agreeing signs name the monad; disagreeing signs mean
    the result is two-sided and the endpoint role picks its side.
    """
    eps = _check_eps(eps)
    f = _FRACTION_OPS[op]
    base = f(a.value, b.value)
    d_a = f(a.value + _SHIFT[a.tag] * eps, b.value) - base
    d_b = f(a.value, b.value + _SHIFT[b.tag] * eps) - base
    signs = {_sign(d_a), _sign(d_b)} - {0}
    if not signs:
        return MonadTag.NONE
    if signs == {1}:
        return MonadTag.PLUS
    if signs == {-1}:
        return MonadTag.MINUS
    return MonadTag.MINUS if role is EndpointRole.LOWER else MonadTag.PLUS


def _replay(op: str, a: Bound, b: Bound, role: EndpointRole) -> Bound:
    if op == "add":
        return a.add(b, role)
    if op == "sub":
        return a.sub(b, role)
    if op == "mul":
        return a.mul(b, role)
    if op == "div":
        if b.tag is not MonadTag.NONE:
            raise OracleScopeError("division takes a plain positive scalar")
        return a.div_scalar(b.value)
    raise OracleScopeError(f"unknown bound operation {op!r}")


def epsilon_check(
    op: str,
    a: Bound,
    b: Bound,
    role: EndpointRole,
    eps: Fraction = DEFAULT_EPS,
    result: Optional[Bound] = None,
) -> bool:
    """Replay a bound operation and compare against the epsilon oracle.

    Passing `result` checks that value instead of replaying; handing in a
    deliberately corrupted bound must return False.
    """
    eps = _check_eps(eps)
    if result is None:
        result = _replay(op, a, b, role)
    f = _FRACTION_OPS[op]
    if result.value != f(a.value, b.value):
        return False
    return result.tag is expected_tag(op, a, b, role, eps)


#: Representative standard parts exercising sign and zero cases.
TAG_TABLE_VALUES = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1))


@dataclass(frozen=True)
class TagTableFailure:
    op: str
    a: Bound
    b: Bound
    role: EndpointRole
    got: Bound


def tag_table_failures(eps: Fraction = DEFAULT_EPS) -> list[TagTableFailure]:
    """Run the full cartesian tag table through the epsilon oracle.

    Covers add/sub/mul over every tag pair, both endpoint roles, and the
    representative values; returns the failing cases (expected: none).
    """
    fails = []
    for op in ("add", "sub", "mul"):
        for va in TAG_TABLE_VALUES:
            for vb in TAG_TABLE_VALUES:
                for ta in MonadTag:
                    for tb in MonadTag:
                        for role in EndpointRole:
                            a = Bound(va, ta)
                            b = Bound(vb, tb)
                            if not epsilon_check(op, a, b, role, eps):
                                fails.append(
                                    TagTableFailure(op, a, b, role, _replay(op, a, b, role))
                                )
    return fails


# ---------------------------------------------------------------------------
# seeded generators and the agreement suite


def random_rational(
    rng: random.Random,
    max_den: int = 16,
    lo: int = -2,
    hi: int = 2,
) -> Fraction:
    """Rational with denominator at most `max_den` in [lo, hi]."""
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_bound(
    rng: random.Random,
    max_den: int = 16,
    lo: int = -2,
    hi: int = 2,
    tagged: bool = True,
) -> Bound:
    tag = rng.choice(list(MonadTag)) if tagged else MonadTag.NONE
    return Bound(random_rational(rng, max_den, lo, hi), tag)


def random_nsset(
    rng: random.Random,
    max_pieces: int = 3,
    max_den: int = 16,
    lo: int = -2,
    hi: int = 2,
    tagged: bool = False,
    nonneg: bool = False,
) -> NSSet:
    """Non-empty random set.  With `nonneg`, values stay >= 0 and a left
    monad never sits on 0, so the set truly lives in the nonnegative ray."""
    if nonneg:
        lo = max(lo, 0)
    pieces = []
    for _ in range(rng.randint(1, max_pieces)):
        ends = []
        for _ in range(2):
            b = random_bound(rng, max_den, lo, hi, tagged)
            if nonneg and b.value == 0 and b.tag is MonadTag.MINUS:
                b = Bound(b.value, MonadTag.NONE)
            ends.append(b)
        ends.sort()
        if rng.random() < 0.25:
            ends[1] = ends[0]  # degenerate piece
        pieces.append(Piece(ends[0], ends[1]))
    return NSSet(pieces)


def random_triple(rng: random.Random, tagged: bool = False) -> NPTriple:
    """Random probability triple with components inside [0, 2]."""
    return NPTriple(
        random_nsset(rng, tagged=tagged, nonneg=True),
        random_nsset(rng, tagged=tagged, nonneg=True),
        random_nsset(rng, tagged=tagged, nonneg=True),
    )


@dataclass(frozen=True)
class Mismatch:
    """First disagreement between an implementation and the grid oracle."""

    case: int
    op: str
    a: NSSet
    b: NSSet
    got: NSSet
    expected: NSSet


def agreement_counterexample(seed: int, cases: int) -> Optional[Mismatch]:
    """Compare the set operations against the grid oracle on seeded
    random tag-free pairs; return the first mismatch, or None."""
    rng = random.Random(seed)
    for case in range(cases):
        a = random_nsset(rng, tagged=False)
        b = random_nsset(rng, tagged=False)
        for op in ("add", "sub", "mul"):
            got = SET_OPS[op](a, b)
            expected = oracle_setop(op, a, b)
            if got != expected:
                return Mismatch(case, op, a, b, got, expected)
    return None
