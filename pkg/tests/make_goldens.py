"""Regenerate the golden files from a build believed correct.

Run from the repository root:  python3 tests/make_goldens.py
The acceptance suite then asserts bit-exact stability against these files.
Hand-verified anchors behind the pinned content: the big-carrier matrices,
the omega2/big core memberships and their initial-segment mapping, and the
ladder chain, all checked against worked computations before freezing.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import GOLDEN, SHIPPED, built
from oracles import valid_relation_assignments

from patternforge import compare_cores, compute_core, format_term, isominimal, Pattern
from patternforge.cores import closed_subsets
from patternforge import io as pfio


def hierarchy_goldens():
    out = {}
    for name in SHIPPED:
        H = built(name)
        out[name] = {
            "carrier": [format_term(x) for x in H.carrier],
            "le1": [[format_term(a), format_term(b)] for a, b in H.strict(1)],
            "le2": [[format_term(a), format_term(b)] for a, b in H.strict(2)],
            "rounds": len(H.build_log),
            "hash": pfio.hierarchy_hash(H),
        }
    return out


def realization_goldens():
    out = {}
    for name in SHIPPED:
        H = built(name)
        entries = []
        for subset in closed_subsets(H.carrier, max_elements=3):
            for le1, le2 in valid_relation_assignments(subset):
                P = Pattern(subset, le1, le2)
                report = isominimal(P, H)
                if report.realization is None:
                    continue
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
        out[name] = entries
    return out


def core_goldens():
    out = {}
    for name in SHIPPED:
        core = compute_core(built(name), 2)
        out[name] = {
            "members": [format_term(m) for m in core.members],
            "witness_universes": [
                [format_term(m), [format_term(x) for x in pat.universe]]
                for m, pat in core.witness
            ],
        }
    nested = []
    for small, large in (("one", "big"), ("omega", "omega2"), ("omega2", "big")):
        res = compare_cores(compute_core(built(small), 2), compute_core(built(large), 2))
        nested.append(
            {
                "pair": [small, large],
                "initial_segment": getattr(res, "initial_segment_flag", False),
                "mapping": [
                    [format_term(a), format_term(b)] for a, b in res.mapping
                ],
            }
        )
    return {"cores": out, "nested_comparisons": nested}


def main():
    GOLDEN.mkdir(exist_ok=True)
    targets = {
        "hierarchies.json": hierarchy_goldens(),
        "realization_reports.json": realization_goldens(),
        "cores.json": core_goldens(),
    }
    for fname, doc in targets.items():
        (GOLDEN / fname).write_text(json.dumps(doc, indent=2) + "\n")
        print(f"wrote {GOLDEN / fname}")


if __name__ == "__main__":
    main()
