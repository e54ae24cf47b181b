"""Finite hierarchies: le1/le2 matrices computed as a greatest fixed point of
two elementarity games plus structural pruning.

The pair (alpha, beta) semantics is a finite analogue of Sigma_1/Sigma_2
elementarity between the initial segments below alpha and below beta.  A
challenge is a closed subset of the carrier below beta; the respondent must
embed it strictly below alpha, pointwise fixing the part that already lies
below alpha, by an arithmetic embedding with closed range inside the carrier
that preserves the current relations forward.  For the two-round (Sigma_2)
game the respondent's embedding must additionally admit, for every closed
extension of its range below alpha, a backward arithmetic embedding into the
segment below beta inverting it on the challenge.

Literal finite truncation would make every strict pair fail outright: the
largest carrier element below alpha always joins the dominant challenge and
leaves no room above itself.  The build therefore applies a cofinality
window of 1: a challenge may shed elements of the top slice of the carrier
below alpha when no kept element needs them for closedness.  Mandatory parts
are never shed, which keeps the left-indecomposability argument intact: any
challenge containing a decomposable alpha pins alpha's parts and forces the
embedding to send alpha to itself, outside the open segment.

Pruning only ever shrinks the relations, so iterating the game plus the
structural clauses (inclusion, strict-indecomposability, respect,
transitivity) from the full order reaches a fixed point within |carrier|^2
rounds.  Rounds evaluate all pairs against an immutable snapshot, so the
result is independent of evaluation order and bit-exact across rebuilds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .embedding import SearchLimits, SourceSpec, TargetSpec, first_embedding, search_embeddings
from .ordinals import (
    ClosedSet,
    OrdinalTerm,
    ZERO,
    format_term,
    is_indecomposable,
    parts_closure,
)

Pair = Tuple[OrdinalTerm, OrdinalTerm]

BUILD_WINDOW = 1


@dataclass(frozen=True)
class RoundStats:
    game_le1: int
    game_le2: int
    structural_le1: int
    structural_le2: int

    def as_tuple(self):
        return (self.game_le1, self.game_le2, self.structural_le1, self.structural_le2)

    @property
    def total(self) -> int:
        return sum(self.as_tuple())


@dataclass(frozen=True)
class Hierarchy:
    """A carrier with its computed relations.  build_hierarchy is the factory;
    constructing directly skips validation (used for forged test inputs)."""

    carrier: ClosedSet
    top: OrdinalTerm
    le1: FrozenSet[Pair]
    le2: FrozenSet[Pair]
    build_log: Tuple[RoundStats, ...] = ()

    def rel(self, k: int) -> FrozenSet[Pair]:
        if k == 1:
            return self.le1
        if k == 2:
            return self.le2
        raise ValueError("k must be 1 or 2")

    def strict(self, k: int) -> Tuple[Pair, ...]:
        return tuple(sorted((a, b) for a, b in self.rel(k) if a != b))

    def target_spec(self) -> TargetSpec:
        return TargetSpec(
            carrier=self.carrier.as_set(),
            indecomposables=self.carrier.indecomposables,
            le1=self.le1,
            le2=self.le2,
        )

    def restrict_pattern(self, subset: Iterable[OrdinalTerm]):
        """The pattern induced on a closed subset of the carrier."""
        from .patterns import Pattern

        sub = ClosedSet(subset)
        keep = sub.as_set()
        for x in sub:
            if x not in self.carrier:
                raise ValueError(f"{format_term(x)} is not a carrier element")
        return Pattern(
            sub,
            ((a, b) for a, b in self.le1 if a in keep and b in keep),
            ((a, b) for a, b in self.le2 if a in keep and b in keep),
        )


# ---------------------------------------------------------------------------
# the games
# ---------------------------------------------------------------------------


def reduced_challenge(
    carrier: ClosedSet, alpha: OrdinalTerm, beta: OrdinalTerm, window: int = BUILD_WINDOW
) -> Tuple[OrdinalTerm, ...]:
    """The dominant challenge for a pair: everything below beta, shedding the
    top `window` slice of the carrier below alpha except where closedness of
    the kept elements forces it back in."""
    below_beta = [c for c in carrier if c < beta]
    below_alpha = [c for c in below_beta if c < alpha]
    zone = set(below_alpha[-window:]) if window > 0 else set()
    kept = [c for c in below_beta if c not in zone]
    return tuple(sorted(parts_closure(kept)))


def _restricted_source(elements, rel1, rel2) -> SourceSpec:
    eset = set(elements)
    return SourceSpec(
        elements=tuple(sorted(eset)),
        le1=frozenset(p for p in rel1 if p[0] in eset and p[1] in eset),
        le2=frozenset(p for p in rel2 if p[0] in eset and p[1] in eset),
    )


def _summand_terms(x: OrdinalTerm):
    return tuple(OrdinalTerm((g,)) for g in x.exponents)


def game_pass(
    k: int,
    alpha: OrdinalTerm,
    beta: OrdinalTerm,
    carrier: ClosedSet,
    rel1: FrozenSet[Pair],
    rel2: FrozenSet[Pair],
    window: int = BUILD_WINDOW,
    moved_floor: Optional[OrdinalTerm] = None,
    challenge: Optional[Iterable[OrdinalTerm]] = None,
) -> bool:
    """Evaluate the k-round game for one pair against given relations.

    Only the dominant challenge needs checking: a witness for it restricts to
    a witness for every smaller challenge (the test suite verifies this
    against an oracle that sweeps all closed challenges).  Passing an explicit
    challenge overrides the reduction; moved_floor additionally requires all
    non-fixed witness images to lie strictly above it.
    """
    if alpha == beta:
        return True
    if challenge is None:
        challenge = reduced_challenge(carrier, alpha, beta, window)
    source = _restricted_source(challenge, rel1, rel2)
    target = TargetSpec(
        carrier=carrier.as_set(),
        indecomposables=carrier.indecomposables,
        le1=rel1,
        le2=rel2,
    )
    pins = {}
    for x in source.elements:
        if x < alpha:
            for s in _summand_terms(x):
                pins[s] = s
    limits = SearchLimits(pinned=pins, ceiling=alpha, moved_floor=moved_floor)
    if k == 1:
        return first_embedding(source, target, limits) is not None

    # Two-round game: some forward witness must admit a backward map defined
    # on the whole carrier segment below alpha, inverting it on the challenge.
    back_elems = tuple(c for c in carrier if c < alpha)
    back_source = _restricted_source(back_elems, rel1, rel2)
    for h in search_embeddings(source, target, limits):
        back_pins = {}
        for x in source.elements:
            for sx, simg in zip(_summand_terms(x), _summand_terms(h[x])):
                back_pins[simg] = sx
        back_limits = SearchLimits(pinned=back_pins, ceiling=beta)
        if first_embedding(back_source, target, back_limits) is not None:
            return True
    return False


# ---------------------------------------------------------------------------
# structural pruning
# ---------------------------------------------------------------------------


def _structural_pass(carrier: ClosedSet, rel1: set, rel2: set) -> Tuple[int, int]:
    """Restore inclusion, strict-indecomposability, respect and transitivity
    by simultaneous removals, iterated to stability."""
    removed1 = removed2 = 0
    elems = carrier.elements
    while True:
        drop1 = set()
        drop2 = {p for p in rel2 if p not in rel1}
        drop1 |= {(a, b) for a, b in rel1 if a != b and not is_indecomposable(a)}
        drop2 |= {
            (a, b)
            for a, b in rel2
            if a != b and not (is_indecomposable(a) and is_indecomposable(b))
        }
        for a, c in rel1:
            if a != c and any(a < b < c and (a, b) not in rel1 for b in elems):
                drop1.add((a, c))
        for a, c in rel2:
            if a != c and any(
                (a, b) in rel1 and (b, c) in rel1 and (a, b) not in rel2 for b in elems
            ):
                drop2.add((a, c))
        for a, b in rel1:
            if any((b, c) in rel1 and (a, c) not in rel1 for c in elems):
                drop1.add((a, b))
        for a, b in rel2:
            if any((b, c) in rel2 and (a, c) not in rel2 for c in elems):
                drop2.add((a, b))
        if not drop1 and not drop2:
            return removed1, removed2
        rel1 -= drop1
        rel2 -= drop2
        removed1 += len(drop1)
        removed2 += len(drop2)


def _game_round(
    carrier: ClosedSet, rel1: set, rel2: set, snap1: FrozenSet[Pair], snap2: FrozenSet[Pair]
) -> Tuple[int, int]:
    """Prune every pair failing its game against the snapshot relations,
    visiting pairs in ascending (beta, alpha) order."""
    pruned1 = pruned2 = 0
    for beta in carrier:
        for alpha in carrier:
            if not alpha < beta:
                continue
            if (alpha, beta) in rel1 and not game_pass(1, alpha, beta, carrier, snap1, snap2):
                rel1.discard((alpha, beta))
                pruned1 += 1
            if (alpha, beta) in rel2 and not game_pass(2, alpha, beta, carrier, snap1, snap2):
                rel2.discard((alpha, beta))
                pruned2 += 1
    return pruned1, pruned2


def build_hierarchy(carrier: ClosedSet | Iterable[OrdinalTerm], top: OrdinalTerm) -> Hierarchy:
    """Compute the relations on a closed carrier by iterated elimination.

    top plays the least-upper-bound role: it must be indecomposable and at
    least every carrier element.
    """
    if not isinstance(carrier, ClosedSet):
        carrier = ClosedSet(carrier)
    if not is_indecomposable(top):
        raise ValueError(f"top {format_term(top)} must be indecomposable")
    if any(x > top for x in carrier):
        raise ValueError("top must be at least every carrier element")

    elems = carrier.elements
    n = len(elems)
    rel1 = {(a, b) for a in elems for b in elems if a <= b}
    rel2 = set(rel1)
    log: List[RoundStats] = []
    for _ in range(n * n):
        snap1, snap2 = frozenset(rel1), frozenset(rel2)
        g1, g2 = _game_round(carrier, rel1, rel2, snap1, snap2)
        s1, s2 = _structural_pass(carrier, rel1, rel2)
        log.append(RoundStats(g1, g2, s1, s2))
        if g1 + g2 + s1 + s2 == 0:
            break
    else:
        raise AssertionError("fixed point not reached within |carrier|^2 rounds")

    return Hierarchy(
        carrier=carrier,
        top=top,
        le1=frozenset(rel1),
        le2=frozenset(rel2),
        build_log=tuple(log),
    )


def one_more_round(H: Hierarchy) -> Tuple[FrozenSet[Pair], FrozenSet[Pair]]:
    """Apply a single game-plus-structural round to H's relations; a built
    hierarchy must come back unchanged."""
    rel1, rel2 = set(H.le1), set(H.le2)
    _game_round(H.carrier, rel1, rel2, H.le1, H.le2)
    _structural_pass(H.carrier, rel1, rel2)
    return frozenset(rel1), frozenset(rel2)


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------


def le_inf(
    H: Hierarchy, k: int, alpha: OrdinalTerm, beta: OrdinalTerm, window: int = 1
) -> bool:
    """Cofinal variant of the pair game on the built relations.

    True iff the base game passes and, for every threshold in the carrier
    below alpha except the `window` largest, the game also passes with all
    non-fixed witness images strictly above the threshold.
    """
    if alpha not in H.carrier or beta not in H.carrier:
        raise ValueError("both endpoints must be carrier elements")
    if not alpha <= beta:
        raise ValueError("le_inf needs alpha <= beta")
    if not game_pass(k, alpha, beta, H.carrier, H.le1, H.le2):
        return False
    thresholds = [c for c in H.carrier if c < alpha]
    selected = thresholds[:-window] if window > 0 else thresholds
    return all(
        game_pass(k, alpha, beta, H.carrier, H.le1, H.le2, moved_floor=tau)
        for tau in selected
    )


@dataclass(frozen=True)
class AxiomReport:
    """Exact checks of the order, respect and top hypotheses, plus two
    diagnostics that finite truncation is allowed to fail."""

    order_violations: Tuple[str, ...]
    respect_violations: Tuple[str, ...]
    top_violations: Tuple[str, ...]
    elementarity_failures: Tuple[Tuple[int, OrdinalTerm, OrdinalTerm], ...]
    limit_continuity_failures: Tuple[Tuple[OrdinalTerm, OrdinalTerm], ...]

    @property
    def passed_exact(self) -> bool:
        return not (self.order_violations or self.respect_violations or self.top_violations)


def check_hierarchy_axioms(H: Hierarchy, window: int = 1) -> AxiomReport:
    elems = H.carrier.elements
    eset = set(elems)
    order: List[str] = []
    respect: List[str] = []
    top: List[str] = []

    for name, rel in (("le1", H.le1), ("le2", H.le2)):
        for x in elems:
            if (x, x) not in rel:
                order.append(f"(b) {name} not reflexive at {format_term(x)}")
        for a, b in sorted(rel):
            if a not in eset or b not in eset:
                order.append(
                    f"(b) {name} pair outside carrier ({format_term(a)}, {format_term(b)})"
                )
            elif a != b and (b, a) in rel and a < b:
                order.append(
                    f"(b) {name} not antisymmetric at ({format_term(a)}, {format_term(b)})"
                )
        for a, b in sorted(rel):
            for c in elems:
                if (b, c) in rel and (a, c) not in rel:
                    order.append(
                        f"(b) {name} not transitive at "
                        f"({format_term(a)}, {format_term(b)}, {format_term(c)})"
                    )
    for a, b in sorted(H.le2):
        if (a, b) not in H.le1:
            order.append(f"(b) le2 pair ({format_term(a)}, {format_term(b)}) missing from le1")
    for a, b in sorted(H.le1):
        if not a <= b:
            order.append(
                f"(b) le1 pair ({format_term(a)}, {format_term(b)}) against the term order"
            )

    for a, c in sorted(H.le1):
        for b in elems:
            if a <= b <= c and (a, b) not in H.le1:
                respect.append(
                    f"(c) le1 skips ({format_term(a)}, {format_term(b)}, {format_term(c)})"
                )
    for a, c in sorted(H.le2):
        for b in elems:
            if (a, b) in H.le1 and (b, c) in H.le1 and (a, b) not in H.le2:
                respect.append(
                    f"(c) le2 skips ({format_term(a)}, {format_term(b)}, {format_term(c)})"
                )

    if not is_indecomposable(H.top):
        top.append(f"(d) top {format_term(H.top)} is not indecomposable")
    for x in elems:
        if x > H.top:
            top.append(f"(d) carrier element {format_term(x)} exceeds top")

    elementarity = []
    if not order and not respect:
        for k in (1, 2):
            for a, b in sorted(H.rel(k)):
                if a != b and not le_inf(H, k, a, b, window):
                    elementarity.append((k, a, b))

    limit_failures = []
    for b in elems:
        if b.exponents and b.exponents[-1] != ZERO:  # a limit ordinal
            for a in elems:
                if a < b:
                    between = [x for x in elems if a <= x < b]
                    if all((a, x) in H.le1 for x in between) and (a, b) not in H.le1:
                        limit_failures.append((a, b))

    return AxiomReport(
        order_violations=tuple(order),
        respect_violations=tuple(respect),
        top_violations=tuple(top),
        elementarity_failures=tuple(elementarity),
        limit_continuity_failures=tuple(limit_failures),
    )
