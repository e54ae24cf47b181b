"""Acceptance suite: one test per criterion, each printing a pass/fail line
and enforcing its stated runtime budget.

Golden expectations live in tests/golden/ (regenerate deliberately with
tests/make_goldens.py; every pinned value was cross-checked by hand or by an
independent oracle before freezing).
"""

import time

from patternforge import (
    Budget,
    ONE,
    OMEGA,
    Pattern,
    build_hierarchy,
    check_hierarchy_axioms,
    compare_cores,
    compute_core,
    export_dot,
    extends_above,
    format_term,
    is_indecomposable,
    isominimal,
    one_more_round,
    parse_term,
    regressive_maps,
    search_coverings,
    trivial_pattern,
)
from patternforge.cores import closed_subsets
from patternforge.covering import extend_covering, test_cofinal_validity as cofinal_validity
from patternforge import io as pfio
from conftest import SHIPPED, built, load_golden, make_carrier
from oracles import covering_maps_by_shape, shape_buckets, valid_relation_assignments


class Stopwatch:
    def __init__(self, criterion, budget_seconds):
        self.criterion = criterion
        self.budget = budget_seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"{status} criterion {self.criterion} ({elapsed:.2f}s / {self.budget}s)")
        if exc_type is None:
            assert elapsed < self.budget, (
                f"criterion {self.criterion} exceeded its {self.budget}s budget"
            )


def t(s):
    return parse_term(s)


def test_criterion_1_hierarchy_axioms_by_construction():
    # shipped carrier family: (b), (c), (d) must hold exactly
    with Stopwatch(1, 30):
        for name in SHIPPED:
            report = check_hierarchy_axioms(built(name))
            assert report.order_violations == (), name
            assert report.respect_violations == (), name
            assert report.top_violations == (), name


def test_criterion_2_indecomposability_necessity():
    # strict le1 needs an indecomposable left element, strict le2 both
    with Stopwatch(2, 5):
        for name in ("one", "omega", "omega2", "big", "ladder", "wide20", "wide25"):
            H = built(name)
            for a, b in H.strict(1):
                assert is_indecomposable(a), (name, str(a), str(b))
            for a, b in H.strict(2):
                assert is_indecomposable(a) and is_indecomposable(b), (
                    name,
                    str(a),
                    str(b),
                )


def test_criterion_3_covering_oracle_equivalence():
    # every valid pattern on <= 4 universe elements drawn over the 25-element
    # carrier: search output equals independent exhaustive map enumeration
    with Stopwatch(3, 60):
        H = built("wide25")
        assert len(H.carrier) == 25
        buckets = {n: shape_buckets(H, n) for n in (1, 2, 3, 4)}
        patterns = 0
        for subset in closed_subsets(H.carrier, max_elements=4):
            for le1, le2 in valid_relation_assignments(subset):
                P = Pattern(subset, le1, le2)
                got = sorted(cov.assignment for cov in search_coverings(P, H))
                want = covering_maps_by_shape(P, H, buckets[len(subset)])
                assert got == want, [format_term(x) for x in subset]
                patterns += 1
        assert patterns > 2000


def test_criterion_4_minimal_realization_reports():
    # every covered pattern of size <= 3 on the shipped carriers: the minimal
    # realization sits pointwise below every cover and is isomorphic to the
    # source; outcomes bit-exact against the golden file
    with Stopwatch(4, 60):
        golden = load_golden("realization_reports.json")
        for name in SHIPPED:
            H = built(name)
            entries = []
            for subset in closed_subsets(H.carrier, max_elements=3):
                for le1, le2 in valid_relation_assignments(subset):
                    P = Pattern(subset, le1, le2)
                    report = isominimal(P, H)
                    if report.realization is None:
                        continue
                    assert report.below_all_covers, (name, subset)
                    assert report.isomorphic, (name, subset)
                    entries.append(
                        {
                            "universe": [format_term(x) for x in subset],
                            "le1": [[format_term(a), format_term(b)] for a, b in le1],
                            "le2": [[format_term(a), format_term(b)] for a, b in le2],
                            "realization": [
                                format_term(x) for x in report.realization.universe
                            ],
                            "unique_minimum": report.unique_minimum,
                            "below_all_covers": report.below_all_covers,
                            "isomorphic": report.isomorphic,
                            "covers_enumerated": report.covers_enumerated,
                        }
                    )
            assert entries == golden[name], name


def test_criterion_5_categoricity_desk_check():
    # cores at bound 2 over nested carriers embed as initial segments,
    # bit-exact against the golden mapping
    with Stopwatch(5, 60):
        golden = load_golden("cores.json")
        for name in SHIPPED:
            core = compute_core(built(name), 2)
            assert [format_term(m) for m in core.members] == golden["cores"][name][
                "members"
            ]
        for entry in golden["nested_comparisons"]:
            small, large = entry["pair"]
            assert set(built(small).carrier.elements) <= set(
                built(large).carrier.elements
            )
            res = compare_cores(compute_core(built(small), 2), compute_core(built(large), 2))
            assert getattr(res, "initial_segment_flag", False) is True
            assert entry["initial_segment"] is True
            got = [[format_term(a), format_term(b)] for a, b in res.mapping]
            assert got == entry["mapping"], entry["pair"]


def test_criterion_6_definition_mechanics():
    with Stopwatch(6, 30):
        H = built("wide20")
        assert len(H.carrier) == 20
        # vacuous self-extension above every regressive bound
        sampled = 0
        for P in (trivial_pattern([ONE]), trivial_pattern([OMEGA]), trivial_pattern([t("w+1")])):
            for h in search_coverings(P, H):
                for phi in regressive_maps(h):
                    assert extends_above(h, h, phi)
                    sampled += 1
        assert sampled > 50
        # identity rules are cofinally valid under the full budget
        for gens in ([], [ONE], [OMEGA], [t("w+1")], [ONE, OMEGA]):
            P = trivial_pattern(gens)
            verdict = cofinal_validity(P, P, H, Budget())
            assert verdict.valid
        # maximal-bound dominance: exhaustive sweep over every regressive map
        # on coverings with at most two range indecomposables
        cases = [
            (trivial_pattern([ONE]), trivial_pattern([t("2")])),
            (trivial_pattern([OMEGA]), trivial_pattern([ONE, OMEGA])),
            (trivial_pattern([ONE, OMEGA]), trivial_pattern([ONE, t("w+1")])),
        ]
        for P, Pplus in cases:
            for h in search_coverings(P, H):
                if len(h.range_indecomposables()) > 2:
                    continue
                phis = list(regressive_maps(h))
                if extend_covering(P, Pplus, h, phis[0]) is not None:
                    for phi in phis:
                        assert extend_covering(P, Pplus, h, phi) is not None


def test_criterion_7_determinism_and_formats(tmp_path):
    with Stopwatch(7, 10):
        golden = load_golden("hierarchies.json")
        for name in SHIPPED:
            H1 = built(name)
            top = SHIPPED[name][1]
            H2 = build_hierarchy(make_carrier(name), t(top))
            t1, t2 = pfio.dumps_hierarchy(H1), pfio.dumps_hierarchy(H2)
            assert t1 == t2
            assert pfio.hierarchy_hash(H1) == golden[name]["hash"]
            # round trips are identities
            assert pfio.dumps_hierarchy(pfio.loads_hierarchy(t1)) == t1
            ct = pfio.dumps_carrier(H1.carrier)
            assert pfio.dumps_carrier(pfio.loads_carrier(ct)) == ct
            P = H1.restrict_pattern(H1.carrier)
            pt = pfio.dumps_pattern(P)
            assert pfio.dumps_pattern(pfio.loads_pattern(pt)) == pt
            assert export_dot(H1) == export_dot(pfio.loads_hierarchy(t1))
        H = built("big")
        core = compute_core(H, 2)
        d1, d2 = tmp_path / "first", tmp_path / "second"
        d1.mkdir(), d2.mkdir()
        pfio.write_core(core, d1 / "big.core")
        pfio.write_core(pfio.read_core(d1 / "big.core", H), d2 / "big.core")
        assert (d1 / "big.core").read_bytes() == (d2 / "big.core").read_bytes()
        cov = next(search_coverings(trivial_pattern([ONE]), H))
        vt = pfio.dumps_covering(cov)
        assert pfio.dumps_covering(pfio.loads_covering(vt, H)) == vt


def test_criterion_8_fixed_point_sanity():
    with Stopwatch(8, 30):
        for name in SHIPPED:
            H = built(name)
            assert len(H.build_log) <= len(H.carrier) ** 2, name
            r1, r2 = one_more_round(H)
            assert r1 == H.le1 and r2 == H.le2, name
