"""Finite two-relation structures over closed ordinal sets.

A pattern is a closed universe with two partial orders le1 and le2 such that
le2 <= le1 <= the term order, and each relation respects the previous one:
a le_{k-1} b le_{k-1} c together with a le_k c forces a le_k b.  The term
order itself (le0) is implicit and never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .ordinals import (
    ClosedSet,
    OrdinalTerm,
    ZERO,
    closure,
    format_term,
    induced_embedding,
    split_parts,
)

Pair = Tuple[OrdinalTerm, OrdinalTerm]


@dataclass(frozen=True)
class Violation:
    """One failed invariant clause with a minimal witness."""

    clause: str
    witness: Tuple[OrdinalTerm, ...]

    def describe(self) -> str:
        w = ", ".join(format_term(t) for t in self.witness)
        return f"{self.clause}: ({w})"


class InvalidPatternError(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = tuple(violations)
        lines = "; ".join(v.describe() for v in violations)
        super().__init__(f"invalid pattern: {lines}")


def _normalize(universe, pairs) -> FrozenSet[Pair]:
    """Relation as a frozenset including all reflexive pairs."""
    out = set((a, b) for a, b in pairs)
    out.update((x, x) for x in universe)
    return frozenset(out)


def validate_structure(
    universe: Iterable[OrdinalTerm],
    le1: Iterable[Pair],
    le2: Iterable[Pair],
) -> List[Violation]:
    """Check every pattern invariant on a candidate structure.

    Reflexive pairs are taken as implicitly present.  Returns all violated
    clauses, each with a witness pair or triple; an empty list means valid.
    """
    elems = sorted(set(universe))
    eset = frozenset(elems)
    out: List[Violation] = []

    if ZERO not in eset:
        out.append(Violation("universe not closed (missing 0)", (ZERO,)))
    for x in elems:
        for p in split_parts(x):
            if p not in eset:
                out.append(Violation("universe not closed", (x, p)))

    r1 = _normalize(elems, le1)
    r2 = _normalize(elems, le2)
    for name, rel in (("le1", r1), ("le2", r2)):
        for a, b in sorted(rel):
            if a not in eset or b not in eset:
                out.append(Violation(f"{name} pair outside universe", (a, b)))
    r1 = frozenset((a, b) for a, b in r1 if a in eset and b in eset)
    r2 = frozenset((a, b) for a, b in r2 if a in eset and b in eset)

    for name, rel in (("le1", r1), ("le2", r2)):
        for a, b in sorted(rel):
            if a != b and (b, a) in rel:
                if a < b:
                    out.append(Violation(f"{name} not antisymmetric", (a, b)))
        for a, b in sorted(rel):
            for c in elems:
                if (b, c) in rel and (a, c) not in rel:
                    out.append(Violation(f"{name} not transitive", (a, b, c)))

    for a, b in sorted(r2):
        if (a, b) not in r1:
            out.append(Violation("le2 not within le1", (a, b)))
    for a, b in sorted(r1):
        if not a <= b:
            out.append(Violation("le1 not within the term order", (a, b)))

    # respect, k = 1: le0-between points of a le1 pair must be le1-reachable
    for a, c in sorted(r1):
        for b in elems:
            if a <= b <= c and (a, b) not in r1:
                out.append(Violation("le1 does not respect le0", (a, b, c)))
                break
    # respect, k = 2: le1-between points of a le2 pair must be le2-reachable
    for a, c in sorted(r2):
        for b in elems:
            if (a, b) in r1 and (b, c) in r1 and (a, b) not in r2:
                out.append(Violation("le2 does not respect le1", (a, b, c)))
                break
    return out


class Pattern:
    """Validated immutable pattern.  Relations are stored with reflexive pairs."""

    __slots__ = ("universe", "le1", "le2")

    def __init__(
        self,
        universe: Iterable[OrdinalTerm] | ClosedSet,
        le1: Iterable[Pair] = (),
        le2: Iterable[Pair] = (),
    ):
        if not isinstance(universe, ClosedSet):
            universe = ClosedSet(universe)
        r1 = _normalize(universe, le1)
        r2 = _normalize(universe, le2)
        violations = validate_structure(universe, r1, r2)
        if violations:
            raise InvalidPatternError(violations)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "le1", r1)
        object.__setattr__(self, "le2", r2)

    def __setattr__(self, name, value):
        raise AttributeError("Pattern is immutable")

    def __eq__(self, other):
        if not isinstance(other, Pattern):
            return NotImplemented
        return (
            self.universe == other.universe
            and self.le1 == other.le1
            and self.le2 == other.le2
        )

    def __hash__(self):
        return hash((self.universe, self.le1, self.le2))

    def __repr__(self):
        u = ", ".join(format_term(x) for x in self.universe)
        return f"Pattern({{{u}}}, le1={len(self.strict_le1())}, le2={len(self.strict_le2())})"

    def rel(self, k: int) -> FrozenSet[Pair]:
        if k == 1:
            return self.le1
        if k == 2:
            return self.le2
        raise ValueError("k must be 1 or 2")

    def strict_le1(self) -> Tuple[Pair, ...]:
        return tuple(sorted((a, b) for a, b in self.le1 if a != b))

    def strict_le2(self) -> Tuple[Pair, ...]:
        return tuple(sorted((a, b) for a, b in self.le2 if a != b))

    @property
    def indecomposables(self) -> Tuple[OrdinalTerm, ...]:
        return self.universe.indecomposables

    def restrict(self, subset: Iterable[OrdinalTerm]) -> "Pattern":
        """The induced substructure on a closed subset of the universe."""
        sub = ClosedSet(subset)
        for x in sub:
            if x not in self.universe:
                raise ValueError(f"{format_term(x)} is not in the universe")
        keep = sub.as_set()
        return Pattern(
            sub,
            ((a, b) for a, b in self.le1 if a in keep and b in keep),
            ((a, b) for a, b in self.le2 if a in keep and b in keep),
        )


def trivial_pattern(universe: Iterable[OrdinalTerm]) -> Pattern:
    """Pattern with reflexive-only relations on the closure of the given terms."""
    return Pattern(closure(universe))


def is_closed_substructure(Q: Pattern, P: Pattern) -> bool:
    """True iff Q's universe is a closed subset of P's and Q's relations are
    exactly P's restrictions."""
    if not set(Q.universe.elements) <= set(P.universe.elements):
        return False
    keep = Q.universe.as_set()
    r1 = frozenset((a, b) for a, b in P.le1 if a in keep and b in keep)
    r2 = frozenset((a, b) for a, b in P.le2 if a in keep and b in keep)
    return Q.le1 == r1 and Q.le2 == r2


def find_isomorphism(
    P: Pattern, Q: Pattern
) -> Optional[Dict[OrdinalTerm, OrdinalTerm]]:
    """The canonical pattern isomorphism, if any.

    Indecomposables correspond in increasing order and the map extends
    arithmetically; it must carry P's universe onto Q's and preserve both
    relations exactly in both directions.  Returns None otherwise.
    """
    pi = P.indecomposables
    qi = Q.indecomposables
    if len(pi) != len(qi) or len(P.universe) != len(Q.universe):
        return None
    mapping = induced_embedding(dict(zip(pi, qi)), P.universe)
    if set(mapping.values()) != set(Q.universe.elements):
        return None
    for k in (1, 2):
        pr, qr = P.rel(k), Q.rel(k)
        for a in P.universe:
            for b in P.universe:
                if (((a, b) in pr) != ((mapping[a], mapping[b]) in qr)):
                    return None
    return mapping


@dataclass(frozen=True)
class PointwiseWitness:
    """Increasing-enumeration pairing of two equal-size finite sets with the
    per-position comparison outcomes."""

    pairing: Tuple[Tuple[OrdinalTerm, OrdinalTerm], ...]
    comparisons: Tuple[bool, ...]

    @property
    def holds(self) -> bool:
        return all(self.comparisons)


def pointwise_comparison(
    X: Iterable[OrdinalTerm], Y: Iterable[OrdinalTerm]
) -> PointwiseWitness:
    """Pair the i-th smallest elements of two equal-size sets."""
    xs = sorted(set(X))
    ys = sorted(set(Y))
    if len(xs) != len(ys):
        raise ValueError(f"pointwise order needs equal sizes, got {len(xs)} and {len(ys)}")
    pairing = tuple(zip(xs, ys))
    return PointwiseWitness(pairing, tuple(x <= y for x, y in pairing))


def pointwise_le(X: Iterable[OrdinalTerm], Y: Iterable[OrdinalTerm]) -> bool:
    """Compare equal-size finite sets position by position in increasing order."""
    return pointwise_comparison(X, Y).holds


def covers(S: Pattern, T: Pattern) -> bool:
    """True iff S and T share a universe and S carries at least T's relations."""
    if S.universe != T.universe:
        raise ValueError("covers requires identical universes")
    return T.le1 <= S.le1 and T.le2 <= S.le2
