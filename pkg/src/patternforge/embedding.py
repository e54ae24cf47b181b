"""Backtracking search for arithmetic embeddings of one finite structure in
another.

A candidate map is determined by where it sends the source indecomposables:
images must be indecomposable, strictly increasing, and the arithmetic
extension of the choice must land inside the target carrier while preserving
le1 and le2 forward.  Images of a closed source are automatically closed, so
closed range comes for free; carrier membership of composite images is what
the search has to check.

Assignments are produced in lexicographic order of the indecomposable image
tuple, which makes every consumer deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, Mapping, Optional, Tuple

from .ordinals import OrdinalTerm, ZERO, is_indecomposable, summands

Pair = Tuple[OrdinalTerm, OrdinalTerm]
Assignment = Dict[OrdinalTerm, OrdinalTerm]


@dataclass(frozen=True)
class SourceSpec:
    """A finite closed element tuple (ascending) with its two relations."""

    elements: Tuple[OrdinalTerm, ...]
    le1: FrozenSet[Pair]
    le2: FrozenSet[Pair]


@dataclass(frozen=True)
class TargetSpec:
    """Target carrier with relation membership sets."""

    carrier: FrozenSet[OrdinalTerm]
    indecomposables: Tuple[OrdinalTerm, ...]
    le1: FrozenSet[Pair]
    le2: FrozenSet[Pair]


@dataclass(frozen=True)
class SearchLimits:
    """Optional constraints on the embedding being searched.

    pinned          source indecomposable -> required image
    ceiling         every image must be strictly below this term
    indec_floors    source indecomposable -> image must be strictly above
    moved_floor     images of elements not pinned to themselves must be
                    strictly above this term
    """

    pinned: Mapping[OrdinalTerm, OrdinalTerm] = field(default_factory=dict)
    ceiling: Optional[OrdinalTerm] = None
    indec_floors: Mapping[OrdinalTerm, OrdinalTerm] = field(default_factory=dict)
    moved_floor: Optional[OrdinalTerm] = None


def derive_indec_pins(
    fixed: Mapping[OrdinalTerm, OrdinalTerm],
) -> Optional[Dict[OrdinalTerm, OrdinalTerm]]:
    """Reduce element-level constraints to indecomposable-level pins.

    An element pin x -> y forces the i-th summand of x onto the i-th summand
    of y.  Returns None when the pins are structurally unsatisfiable.
    """
    pins: Dict[OrdinalTerm, OrdinalTerm] = {}
    for x, y in fixed.items():
        xs, ys = summands(x), summands(y)
        if len(xs) != len(ys):
            return None
        for sx, sy in zip(xs, ys):
            if pins.setdefault(sx, sy) != sy:
                return None
    return pins


def search_embeddings(
    source: SourceSpec, target: TargetSpec, limits: SearchLimits = SearchLimits()
) -> Iterator[Assignment]:
    """Yield every admissible embedding of source into target, smallest
    indecomposable images first."""
    elements = source.elements
    indecs = [x for x in elements if is_indecomposable(x)]
    pinned = dict(limits.pinned)
    for i, img in pinned.items():
        if not (is_indecomposable(i) and is_indecomposable(img)):
            return

    # An element counts as fixed iff every one of its summands is pinned to
    # itself; 0 (the empty sum) is always fixed.
    def element_fixed(x: OrdinalTerm) -> bool:
        return all(pinned.get(s) == s for s in summands(x))

    by_leading: Dict[OrdinalTerm, list] = {}
    for x in elements:
        if x == ZERO:
            continue
        by_leading.setdefault(OrdinalTerm((x.exponents[0],)), []).append(x)
    for group in by_leading.values():
        group.sort()

    ceiling = limits.ceiling
    moved_floor = limits.moved_floor
    tgt_indecs = target.indecomposables

    chosen: Dict[OrdinalTerm, OrdinalTerm] = {}
    images: Dict[OrdinalTerm, OrdinalTerm] = {}
    completed: list = []

    def complete(x: OrdinalTerm) -> Optional[OrdinalTerm]:
        image = OrdinalTerm(
            tuple(chosen[OrdinalTerm((g,))].exponents[0] for g in x.exponents)
        )
        if image not in target.carrier:
            return None
        if ceiling is not None and not image < ceiling:
            return None
        if moved_floor is not None and not element_fixed(x):
            if not image > moved_floor:
                return None
        for y in completed:
            iy = images[y]
            if (x, y) in source.le1 and (image, iy) not in target.le1:
                return None
            if (y, x) in source.le1 and (iy, image) not in target.le1:
                return None
            if (x, y) in source.le2 and (image, iy) not in target.le2:
                return None
            if (y, x) in source.le2 and (iy, image) not in target.le2:
                return None
        return image

    def extend(j: int) -> Iterator[Assignment]:
        if j == len(indecs):
            yield dict(images)
            return
        i = indecs[j]
        prev = chosen[indecs[j - 1]] if j else None
        floor = limits.indec_floors.get(i)
        candidates = [pinned[i]] if i in pinned else tgt_indecs
        for mu in candidates:
            if prev is not None and not mu > prev:
                continue
            if floor is not None and not mu > floor:
                continue
            if ceiling is not None and not mu < ceiling:
                continue
            if mu not in target.carrier:
                continue
            chosen[i] = mu
            done = []
            ok = True
            for x in by_leading.get(i, ()):
                image = complete(x)
                if image is None:
                    ok = False
                    break
                images[x] = image
                completed.append(x)
                done.append(x)
            if ok:
                yield from extend(j + 1)
            for x in done:
                completed.pop()
                del images[x]
            del chosen[i]

    if ZERO in elements:
        if ceiling is not None and not ZERO < ceiling:
            return
        images[ZERO] = ZERO
        completed.append(ZERO)
    yield from extend(0)


def first_embedding(
    source: SourceSpec, target: TargetSpec, limits: SearchLimits = SearchLimits()
) -> Optional[Assignment]:
    for assignment in search_embeddings(source, target, limits):
        return assignment
    return None
