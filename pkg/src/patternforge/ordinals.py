"""Ordinal arithmetic in Cantor normal form below epsilon_0.

A term denotes w^g1 + w^g2 + ... + w^gk with g1 >= g2 >= ... >= gk, each
exponent itself a term.  The empty sum is 0.  Canonical form is unique, so
term equality is structural equality.  The additively indecomposable terms
are exactly the single-summand terms w^g; 0 is not indecomposable.

Everything here is a pure function of immutable values.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Mapping, Tuple


class TermSyntaxError(ValueError):
    """Raised when an ordinal expression does not match the grammar."""


class NonCanonicalTermError(ValueError):
    """Raised when summands of an ordinal expression are not descending."""


class OrdinalTerm:
    """A Cantor-normal-form ordinal below epsilon_0.

    ``exponents`` is the non-strictly descending tuple of summand exponents;
    the constructor rejects out-of-order input, so every reachable value is
    canonical.
    """

    __slots__ = ("exponents", "_hash")

    def __init__(self, exponents: Tuple["OrdinalTerm", ...] = ()):
        exponents = tuple(exponents)
        for e in exponents:
            if not isinstance(e, OrdinalTerm):
                raise TypeError("exponents must be OrdinalTerm values")
        for hi, lo in zip(exponents, exponents[1:]):
            if compare(hi, lo) < 0:
                raise NonCanonicalTermError(
                    "summand exponents must be non-strictly descending"
                )
        object.__setattr__(self, "exponents", exponents)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("OrdinalTerm is immutable")

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.exponents)
            object.__setattr__(self, "_hash", h)
        return h

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, OrdinalTerm):
            return NotImplemented
        return self.exponents == other.exponents

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __repr__(self):
        return f"OrdinalTerm({format_term(self)!r})"

    def __str__(self):
        return format_term(self)


ZERO = OrdinalTerm()
ONE = OrdinalTerm((ZERO,))
OMEGA = OrdinalTerm((ONE,))


def compare(a: OrdinalTerm, b: OrdinalTerm) -> int:
    """Total order on canonical terms: -1, 0 or 1.

    Descending summand sequences compare lexicographically, a proper prefix
    being smaller; this realizes the ordinal order.
    """
    if a is b:
        return 0
    for ea, eb in zip(a.exponents, b.exponents):
        c = compare(ea, eb)
        if c:
            return c
    la, lb = len(a.exponents), len(b.exponents)
    return (la > lb) - (la < lb)


def add(a: OrdinalTerm, b: OrdinalTerm) -> OrdinalTerm:
    """Ordinal addition: left summands below b's leading exponent are absorbed."""
    if not b.exponents:
        return a
    if not a.exponents:
        return b
    lead = b.exponents[0]
    keep = tuple(e for e in a.exponents if compare(e, lead) >= 0)
    return OrdinalTerm(keep + b.exponents)


def is_indecomposable(a: OrdinalTerm) -> bool:
    """True iff a = w^g for some g.  0 is not indecomposable."""
    return len(a.exponents) == 1


def omega_power(g: OrdinalTerm) -> OrdinalTerm:
    return OrdinalTerm((g,))


def split_parts(a: OrdinalTerm) -> Tuple[OrdinalTerm, ...]:
    """Additive decomposition step: remainder and last summand of a multi-summand
    term.  Terms with fewer than two summands have no parts."""
    if len(a.exponents) < 2:
        return ()
    return (OrdinalTerm(a.exponents[:-1]), OrdinalTerm((a.exponents[-1],)))


def leading_summand(a: OrdinalTerm) -> OrdinalTerm:
    if not a.exponents:
        raise ValueError("0 has no leading summand")
    return OrdinalTerm((a.exponents[0],))


def summands(a: OrdinalTerm) -> Tuple[OrdinalTerm, ...]:
    """The indecomposable summands of a, leading first."""
    return tuple(OrdinalTerm((e,)) for e in a.exponents)


class ClosedSet:
    """A finite term set containing 0 and closed under the remainder/last-summand
    split.  Iteration is always in ascending order."""

    __slots__ = ("elements", "_set")

    def __init__(self, elements: Iterable[OrdinalTerm]):
        elems = sorted(set(elements))
        eset = frozenset(elems)
        if ZERO not in eset:
            raise ValueError("closed set must contain 0")
        for x in elems:
            for p in split_parts(x):
                if p not in eset:
                    raise ValueError(
                        f"closed set is missing {format_term(p)}, a part of {format_term(x)}"
                    )
        object.__setattr__(self, "elements", tuple(elems))
        object.__setattr__(self, "_set", eset)

    def __setattr__(self, name, value):
        raise AttributeError("ClosedSet is immutable")

    def __contains__(self, x):
        return x in self._set

    def __iter__(self) -> Iterator[OrdinalTerm]:
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, ClosedSet):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other: "ClosedSet"):
        return self._set <= other._set

    def __repr__(self):
        inner = ", ".join(format_term(x) for x in self.elements)
        return f"ClosedSet({{{inner}}})"

    def as_set(self) -> frozenset:
        return self._set

    @property
    def indecomposables(self) -> Tuple[OrdinalTerm, ...]:
        return tuple(x for x in self.elements if is_indecomposable(x))


def closure(xs: Iterable[OrdinalTerm]) -> ClosedSet:
    """Least closed superset of xs: add 0 and split summands to a fixed point."""
    out = {ZERO}
    stack = list(xs)
    while stack:
        x = stack.pop()
        if x in out:
            continue
        out.add(x)
        stack.extend(split_parts(x))
    return ClosedSet(out)


def parts_closure(xs: Iterable[OrdinalTerm]) -> frozenset:
    """closure() without the ClosedSet wrapping; used by internal reductions."""
    out = {ZERO}
    stack = list(xs)
    while stack:
        x = stack.pop()
        if x in out:
            continue
        out.add(x)
        stack.extend(split_parts(x))
    return frozenset(out)


def induced_embedding(
    indec_map: Mapping[OrdinalTerm, OrdinalTerm], X: Iterable[OrdinalTerm]
) -> Dict[OrdinalTerm, OrdinalTerm]:
    """Extend a strictly order-preserving map on X's indecomposables to X.

    Each summand w^g of an element is replaced by its image; this is the unique
    extension that commutes with + and decomposition.  Raises ValueError when
    the map is missing an indecomposable, moves one to a decomposable image, or
    is not strictly order-preserving.
    """
    elems = sorted(set(X))
    indecs = [x for x in elems if is_indecomposable(x)]
    for i in indecs:
        if i not in indec_map:
            raise ValueError(f"no image for indecomposable {format_term(i)}")
        img = indec_map[i]
        if not is_indecomposable(img):
            raise ValueError(
                f"image of {format_term(i)} is {format_term(img)}, not indecomposable"
            )
    for a, b in zip(indecs, indecs[1:]):
        if not indec_map[a] < indec_map[b]:
            raise ValueError(
                f"map is not order-preserving at {format_term(a)} < {format_term(b)}"
            )
    out: Dict[OrdinalTerm, OrdinalTerm] = {}
    for x in elems:
        image_exponents = tuple(
            indec_map[OrdinalTerm((g,))].exponents[0] for g in x.exponents
        )
        out[x] = OrdinalTerm(image_exponents)
    return out


# ---------------------------------------------------------------------------
# Text form.  Grammar:  T ::= "0" | S ("+" S)*
#                       S ::= "w^(" T ")" | "w" | "1" | positive integer
# "1" abbreviates w^(0), "w" abbreviates w^(w^(0)), an integer n abbreviates
# n summands w^(0).  Summands must already be descending; the parser rejects
# non-canonical order instead of re-sorting.
# ---------------------------------------------------------------------------


def parse_term(text: str) -> OrdinalTerm:
    """Parse an ordinal expression into its canonical term."""
    s = "".join(text.split())
    if not s:
        raise TermSyntaxError("empty ordinal expression")
    if s == "0":
        return ZERO
    exponents = []
    pos = 0
    while True:
        exps, pos = _parse_summand(s, pos)
        exponents.extend(exps)
        if pos == len(s):
            break
        if s[pos] != "+":
            raise TermSyntaxError(f"unexpected {s[pos]!r} at position {pos} in {text!r}")
        pos += 1
    for hi, lo in zip(exponents, exponents[1:]):
        if compare(hi, lo) < 0:
            raise NonCanonicalTermError(
                f"summands of {text!r} are not in descending order"
            )
    return OrdinalTerm(tuple(exponents))


def _parse_summand(s: str, pos: int):
    if pos >= len(s):
        raise TermSyntaxError("expected a summand, found end of input")
    ch = s[pos]
    if ch == "w":
        if s.startswith("w^(", pos):
            inner, pos = _parse_subterm(s, pos + 3)
            if pos >= len(s) or s[pos] != ")":
                raise TermSyntaxError("missing ')' in w^(...)")
            return [inner], pos + 1
        return [ONE], pos + 1
    if ch.isdigit():
        end = pos
        while end < len(s) and s[end].isdigit():
            end += 1
        n = int(s[pos:end])
        if n == 0:
            raise TermSyntaxError("'0' cannot appear inside a sum")
        return [ZERO] * n, end
    raise TermSyntaxError(f"unexpected {ch!r} at position {pos}")


def _parse_subterm(s: str, pos: int):
    """Parse a T production starting at pos, stopping before an unmatched ')'."""
    if pos < len(s) and s[pos] == "0":
        nxt = pos + 1
        if nxt < len(s) and s[nxt] == "+":
            raise TermSyntaxError("'0' cannot appear inside a sum")
        return ZERO, nxt
    exponents = []
    while True:
        exps, pos = _parse_summand(s, pos)
        exponents.extend(exps)
        if pos < len(s) and s[pos] == "+":
            pos += 1
            continue
        break
    for hi, lo in zip(exponents, exponents[1:]):
        if compare(hi, lo) < 0:
            raise NonCanonicalTermError("summands are not in descending order")
    return OrdinalTerm(tuple(exponents)), pos


def format_term(a: OrdinalTerm, sugar: bool = False) -> str:
    """Canonical text form; bit-exact and parse_term-invertible.

    Sugar-free output spells every summand as w^(...).  With sugar=True the
    summands w^(0) and w^(w^(0)) print as "1" and "w".
    """
    if not a.exponents:
        return "0"
    parts = []
    for g in a.exponents:
        if sugar and g == ZERO:
            parts.append("1")
        elif sugar and g == ONE:
            parts.append("w")
        else:
            parts.append(f"w^({format_term(g, sugar)})")
    return "+".join(parts)
