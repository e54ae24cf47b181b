"""Patterns: two nested partial orders over a closed universe, and the
respect condition that keeps them coherent.

Run:  python3 demos/02_patterns_and_validity.py
"""

from patternforge import (
    OMEGA,
    ONE,
    ZERO,
    Pattern,
    closure,
    find_isomorphism,
    format_term,
    parse_term,
    pointwise_le,
    validate_structure,
)

w1 = parse_term("w+1")

print("A pattern needs le2 inside le1 inside the term order, plus respect:")
print("whenever a le_k c and b sits le_{k-1}-between them, a le_k b.")
print()

violations = validate_structure([ZERO, ONE, OMEGA], [(ZERO, OMEGA)], [])
print("le1 = {(0, w)} over {0, 1, w} skips the midpoint 1:")
for v in violations:
    print("  violation ->", v.describe())

print()
print("Adding the forced pair fixes it:")
P = Pattern(closure([ONE, OMEGA]), le1=[(ZERO, ONE), (ZERO, OMEGA)])
print("  valid:", [(format_term(a, True), format_term(b, True)) for a, b in P.strict_le1()])

print()
print("Isomorphism matches indecomposables in increasing order and must")
print("preserve both relations exactly:")
Q = Pattern(closure([ONE, parse_term("w^(2)")]),
            le1=[(ZERO, ONE), (ZERO, parse_term("w^(2)"))])
iso = find_isomorphism(P, Q)
for a, b in sorted(iso.items()):
    print(f"  {format_term(a, True):3} -> {format_term(b, True)}")

print()
print("The pointwise order compares equal-size sets slot by slot:")
cases = [(["1", "w"], ["1", "w^(2)"]), (["w"], ["1"])]
for xs, ys in cases:
    X = [parse_term(s) for s in xs]
    Y = [parse_term(s) for s in ys]
    print(f"  {xs} <=pw {ys}: {pointwise_le(X, Y)}")
