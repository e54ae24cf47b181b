"""Cores: the union of minimal realizations, and the desk-scale check that a
smaller hierarchy's core embeds as an initial segment of a larger one's.

Run:  python3 demos/05_cores_and_categoricity.py
"""

from patternforge import (
    build_hierarchy,
    closure,
    compare_cores,
    compute_core,
    format_term,
    isominimal,
    longest_chain2,
    parse_term,
    trivial_pattern,
)

small = build_hierarchy(closure([parse_term("w+w")]), parse_term("w^(2)"))
large = build_hierarchy(
    closure([parse_term("w^(2)"), parse_term("w+w"), parse_term("w+1")]),
    parse_term("w^(3)"),
)

print("The minimal realization of a pattern is the pointwise-least closed")
print("substructure covering it:")
P = trivial_pattern([parse_term("1"), parse_term("w")])
rep = isominimal(P, large)
print("  pattern {0, 1, w} realizes as",
      "{" + ", ".join(format_term(x, True) for x in rep.realization.universe) + "}")
print("  unique:", rep.unique_minimum,
      "| below all covers:", rep.below_all_covers,
      "| isomorphic:", rep.isomorphic)
print()

core_small = compute_core(small, 2)
core_large = compute_core(large, 2)
for label, core in (("small", core_small), ("large", core_large)):
    members = ", ".join(format_term(m, True) for m in core.members)
    print(f"core({label}, bound 2) = {{{members}}}")
print()

print("Comparing the cores member by member, witness types must agree;")
print("the image is then an initial segment of the larger core:")
result = compare_cores(core_small, core_large)
print("  initial segment:", result.initial_segment_flag)
for a, b in result.mapping:
    print(f"  {format_term(a, True):8} -> {format_term(b, True)}")
print()

ladder = build_hierarchy(closure([parse_term("1"), parse_term("w"), parse_term("w^(2)")]),
                         parse_term("w^(3)"))
chain = longest_chain2(ladder)
print("Longest strict le2 chain in the ladder hierarchy:",
      " < ".join(format_term(x, True) for x in chain))
