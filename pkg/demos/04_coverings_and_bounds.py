"""Coverings: arithmetic embeddings of patterns into a hierarchy, regressive
bounds, and extension above a bound.

Run:  python3 demos/04_coverings_and_bounds.py
"""

from patternforge import (
    OMEGA,
    ONE,
    RegressiveMap,
    build_hierarchy,
    closure,
    extend_covering,
    extends_above,
    format_term,
    parse_term,
    search_coverings,
    trivial_pattern,
)

H = build_hierarchy(closure([ONE, parse_term("w+1"), parse_term("w+w")]),
                    parse_term("w^(2)"))
carrier = ", ".join(format_term(x, True) for x in H.carrier)
print(f"Host hierarchy on {{{carrier}}}")
print()

P = trivial_pattern([ONE, OMEGA])
print("Coverings of the two-indecomposable pattern {0, 1, w}, in")
print("lexicographic order of the indecomposable images:")
for cov in search_coverings(P, H):
    pairs = ", ".join(
        f"{format_term(a, True)}->{format_term(b, True)}" for a, b in cov.assignment
    )
    print(f"  {pairs}")
print()

print("A regressive map bounds each indecomposable in the range from below;")
print("extensions must place fresh indecomposables above those bounds.")
h = next(search_coverings(trivial_pattern([OMEGA]), H, fixed={OMEGA: OMEGA}))
phi = RegressiveMap.maximal(h)
print("  covering: w -> w, maximal bounds:",
      {format_term(k, True): format_term(v, True) for k, v in phi.bounds})

Pplus = trivial_pattern([ONE, OMEGA])
ext = extend_covering(trivial_pattern([OMEGA]), Pplus, h, phi)
print("  extension above the maximal bound:",
      "none" if ext is None else
      {format_term(a, True): format_term(b, True) for a, b in ext.assignment})
loose = RegressiveMap({OMEGA: parse_term("0")})
ext2 = extend_covering(trivial_pattern([OMEGA]), Pplus, h, loose)
print("  extension above the loose bound:",
      {format_term(a, True): format_term(b, True) for a, b in ext2.assignment})
print("  it extends above the bound:", extends_above(ext2, h, loose))
print()
print("The fresh indecomposable must sit under w yet above phi(w) = 1;")
print("this carrier has no second indecomposable below w, hence 'none'.")
