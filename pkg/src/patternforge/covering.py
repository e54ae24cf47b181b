"""Coverings of patterns in hierarchies, regressive bounds, covering
extension and budgeted cofinal-validity testing.

A covering is an arithmetic embedding of a pattern's universe into the
carrier whose range is closed and which preserves le1 and le2 forward.  A
regressive map assigns to each indecomposable in a covering's range a
strictly smaller carrier element; extensions of a covering are "above" the
map when every freshly placed indecomposable that sits under an old one
exceeds the bound of that old element's image.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Optional, Tuple

from .embedding import SearchLimits, SourceSpec, search_embeddings
from .hierarchy import Hierarchy
from .ordinals import (
    ClosedSet,
    OrdinalTerm,
    format_term,
    is_indecomposable,
    summands,
)
from .patterns import Pattern, is_closed_substructure

Assignment = Dict[OrdinalTerm, OrdinalTerm]


@dataclass(frozen=True)
class Covering:
    source: Pattern
    target: Hierarchy
    assignment: Tuple[Tuple[OrdinalTerm, OrdinalTerm], ...]

    @staticmethod
    def from_map(source: Pattern, target: Hierarchy, mapping: Mapping[OrdinalTerm, OrdinalTerm]) -> "Covering":
        return Covering(source, target, tuple(sorted(mapping.items())))

    def as_dict(self) -> Assignment:
        return dict(self.assignment)

    def __call__(self, x: OrdinalTerm) -> OrdinalTerm:
        for a, b in self.assignment:
            if a == x:
                return b
        raise KeyError(format_term(x))

    @property
    def range_elements(self) -> Tuple[OrdinalTerm, ...]:
        return tuple(sorted(b for _, b in self.assignment))

    def range_indecomposables(self) -> Tuple[OrdinalTerm, ...]:
        return tuple(x for x in self.range_elements if is_indecomposable(x))


class RegressiveMap:
    """bounds[xi] < xi for every indecomposable xi in its domain.

    The carrier minimum can never be in the domain; since the minimum of a
    closed carrier is 0 and 0 is decomposable, every indecomposable in a
    covering's range qualifies.
    """

    __slots__ = ("bounds",)

    def __init__(self, bounds: Mapping[OrdinalTerm, OrdinalTerm]):
        items = tuple(sorted(bounds.items()))
        for xi, b in items:
            if not is_indecomposable(xi):
                raise ValueError(f"{format_term(xi)} is not indecomposable")
            if not b < xi:
                raise ValueError(
                    f"bound {format_term(b)} for {format_term(xi)} is not regressive"
                )
        object.__setattr__(self, "bounds", items)

    def __setattr__(self, name, value):
        raise AttributeError("RegressiveMap is immutable")

    def as_dict(self) -> Dict[OrdinalTerm, OrdinalTerm]:
        return dict(self.bounds)

    def __eq__(self, other):
        if not isinstance(other, RegressiveMap):
            return NotImplemented
        return self.bounds == other.bounds

    def __hash__(self):
        return hash(self.bounds)

    def __repr__(self):
        inner = ", ".join(f"{format_term(k)}->{format_term(v)}" for k, v in self.bounds)
        return f"RegressiveMap({{{inner}}})"

    @staticmethod
    def empty() -> "RegressiveMap":
        return RegressiveMap({})

    @staticmethod
    def maximal(h: Covering) -> "RegressiveMap":
        """The pointwise-largest regressive map on the covering's range: each
        indecomposable is bounded by its carrier predecessor.  It dominates
        every other regressive map on the same domain."""
        carrier = h.target.carrier.elements
        bounds = {}
        for xi in h.range_indecomposables():
            below = [c for c in carrier if c < xi]
            bounds[xi] = below[-1]
        return RegressiveMap(bounds)


def regressive_maps(h: Covering) -> Iterator[RegressiveMap]:
    """All regressive maps on the covering's range indecomposables, the
    pointwise-maximal one first, then the rest in ascending lexicographic
    order of their bound tuples."""
    domain = h.range_indecomposables()
    carrier = h.target.carrier.elements
    choices = [[c for c in carrier if c < xi] for xi in domain]
    maximal = tuple(ch[-1] for ch in choices)
    yield RegressiveMap(dict(zip(domain, maximal)))

    def rec(i, acc):
        if i == len(domain):
            tup = tuple(acc)
            if tup != maximal:
                yield RegressiveMap(dict(zip(domain, tup)))
            return
        for c in choices[i]:
            acc.append(c)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


def is_covering(h: Mapping[OrdinalTerm, OrdinalTerm] | Covering, P: Pattern, H: Hierarchy) -> bool:
    """Check every covering invariant for an arbitrary candidate map."""
    mapping = h.as_dict() if isinstance(h, Covering) else dict(h)
    universe = P.universe.elements
    if set(mapping) != set(universe):
        return False
    carrier = H.carrier.as_set()
    if any(v not in carrier for v in mapping.values()):
        return False
    # arithmetic: the map must be the extension of its indecomposable part
    for x in universe:
        img = mapping[x]
        xs, ys = summands(x), summands(img)
        if len(xs) != len(ys):
            return False
        if any(mapping.get(s) != t for s, t in zip(xs, ys)):
            return False
    indecs = [x for x in universe if is_indecomposable(x)]
    for a, b in zip(indecs, indecs[1:]):
        if not mapping[a] < mapping[b]:
            return False
    if any(not is_indecomposable(mapping[i]) for i in indecs):
        return False
    # closed range inside the carrier
    try:
        ClosedSet(mapping.values())
    except ValueError:
        return False
    # forward preservation
    for k in (1, 2):
        rel_p, rel_h = P.rel(k), H.rel(k)
        for a, b in rel_p:
            if (mapping[a], mapping[b]) not in rel_h:
                return False
    return True


def search_coverings(
    P: Pattern,
    H: Hierarchy,
    fixed: Optional[Mapping[OrdinalTerm, OrdinalTerm]] = None,
    lower_bounds: Optional[Mapping[OrdinalTerm, OrdinalTerm]] = None,
) -> Iterator[Covering]:
    """Enumerate all coverings of P in H, in lexicographic order of the
    indecomposable images.

    fixed pins element images (a fixed prefix); lower_bounds forces chosen
    indecomposable images strictly above the given terms.  Unsatisfiable
    constraints produce an empty stream.
    """
    from .embedding import derive_indec_pins

    pins = derive_indec_pins(dict(fixed)) if fixed else {}
    if pins is None:
        return
    floors = dict(lower_bounds) if lower_bounds else {}
    source = SourceSpec(elements=P.universe.elements, le1=P.le1, le2=P.le2)
    limits = SearchLimits(pinned=pins, indec_floors=floors)
    for assignment in search_embeddings(source, H.target_spec(), limits):
        yield Covering.from_map(P, H, assignment)


def _applicable_bound(
    P: Pattern, h: Covering, phi: RegressiveMap, b: OrdinalTerm
) -> Optional[OrdinalTerm]:
    """The regressive bound governing a fresh indecomposable b, if any.

    b is governed by an indecomposable a of P when b sits strictly between
    everything of P below a and a itself; at most one such a exists.
    """
    bounds = phi.as_dict()
    hmap = h.as_dict()
    for a in P.universe:
        if is_indecomposable(a) and b < a:
            below = [x for x in P.universe.elements if x < a]
            if all(x < b for x in below):
                img = hmap[a]
                if img not in bounds:
                    raise ValueError(
                        f"regressive map lacks a bound for {format_term(img)}"
                    )
                return bounds[img]
            return None
    return None


def extends_above(hplus: Covering, h: Covering, phi: RegressiveMap) -> bool:
    """True iff hplus extends h and every fresh indecomposable sitting under
    an old indecomposable a exceeds phi at h(a)."""
    P, Pplus = h.source, hplus.source
    if not is_closed_substructure(P, Pplus):
        raise ValueError("the smaller covering's pattern must be a closed substructure")
    hmap, hpmap = h.as_dict(), hplus.as_dict()
    for x in P.universe:
        if hpmap.get(x) != hmap[x]:
            raise ValueError("coverings disagree on the common universe")
    new_indecs = [
        b
        for b in Pplus.universe
        if is_indecomposable(b) and b not in P.universe.as_set()
    ]
    for b in new_indecs:
        bound = _applicable_bound(P, h, phi, b)
        if bound is not None and not hpmap[b] > bound:
            return False
    return True


def extend_covering(
    P: Pattern, Pplus: Pattern, h: Covering, phi: RegressiveMap
) -> Optional[Covering]:
    """First covering of Pplus extending h above phi, or None when the carrier
    has no room.  Absence at finite scale carries no weight: extension is a
    statement about the unbounded setting."""
    if not is_closed_substructure(P, Pplus):
        raise ValueError("P must be a closed substructure of Pplus")
    if h.source != P:
        raise ValueError("h must be a covering of P")
    floors = {}
    for b in Pplus.universe:
        if is_indecomposable(b) and b not in P.universe.as_set():
            bound = _applicable_bound(P, h, phi, b)
            if bound is not None:
                floors[b] = bound
    for cov in search_coverings(Pplus, h.target, fixed=h.as_dict(), lower_bounds=floors):
        return cov
    return None


@dataclass(frozen=True)
class Budget:
    """Enumeration caps for cofinal-validity testing; None means exhaustive."""

    max_coverings: Optional[int] = None
    max_regressive_maps: Optional[int] = None


@dataclass(frozen=True)
class CofinalVerdict:
    valid: bool
    coverings_checked: int
    counterexample: Optional[Tuple[Covering, RegressiveMap]] = None

    def __bool__(self):
        return self.valid


def test_cofinal_validity(
    P: Pattern, Pplus: Pattern, H: Hierarchy, budget: Budget = Budget()
) -> CofinalVerdict:
    """Probe the rule P | Pplus: every covering of P must extend above every
    regressive bound.

    Regressive maps are tried maximal-first; an extension above the
    pointwise-maximal map is above every other, so the sweep stops there.
    The first (covering, bound) pair with no extension is returned as a
    counterexample.
    """
    if not is_closed_substructure(P, Pplus):
        raise ValueError("P must be a closed substructure of Pplus")
    checked = 0
    for h in search_coverings(P, H):
        if budget.max_coverings is not None and checked >= budget.max_coverings:
            break
        checked += 1
        tried = 0
        for phi in regressive_maps(h):
            if (
                budget.max_regressive_maps is not None
                and tried >= budget.max_regressive_maps
            ):
                break
            tried += 1
            ext = extend_covering(P, Pplus, h, phi)
            if ext is None:
                return CofinalVerdict(False, checked, (h, phi))
            if tried == 1:
                break  # maximal bound succeeded; dominance covers the rest
    return CofinalVerdict(True, checked, None)
