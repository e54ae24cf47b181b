"""Ordinal terms in Cantor normal form: parsing, ordering, addition, closure.

Run:  python3 demos/01_ordinal_arithmetic.py
"""

from patternforge import (
    OMEGA,
    ONE,
    add,
    closure,
    compare,
    format_term,
    induced_embedding,
    parse_term,
)

print("Every ordinal below epsilon_0 is a descending sum of powers w^g.")
for text in ["0", "1", "w", "w+1", "w+w", "w^(2)", "w^(w)+w^(2)+3"]:
    term = parse_term(text)
    print(f"  {text:14} = {format_term(term)}  (sugar: {format_term(term, sugar=True)})")

print()
print("Addition absorbs small left summands:")
for a, b in [("1", "w"), ("w", "1"), ("w^(2)+w", "w^(2)")]:
    s = add(parse_term(a), parse_term(b))
    print(f"  {a} + {b} = {format_term(s, sugar=True)}")

print()
print("The order is lexicographic on the exponent sequences:")
chain = ["0", "1", "2", "w", "w+1", "w+w", "w^(2)", "w^(w)"]
for lo, hi in zip(chain, chain[1:]):
    assert compare(parse_term(lo), parse_term(hi)) < 0
print("  " + " < ".join(chain))

print()
print("Closure splits decomposable terms into remainder and last summand,")
print("so every carrier automatically contains the pieces it talks about:")
for gens in [["w+1"], ["w+w"], ["w^(2)+w+1"]]:
    c = closure(parse_term(g) for g in gens)
    print(f"  closure({gens}) = {{{', '.join(format_term(x, True) for x in c)}}}")

print()
print("An order map on indecomposables extends uniquely, summand by summand:")
X = closure([parse_term("w+1")])
mapping = induced_embedding({ONE: ONE, OMEGA: parse_term("w^(2)")}, X)
for x in X:
    print(f"  {format_term(x, True):8} -> {format_term(mapping[x], True)}")
