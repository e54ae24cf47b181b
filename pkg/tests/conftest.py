import json
from pathlib import Path

import pytest

from patternforge import ClosedSet, build_hierarchy, closure, parse_term

GOLDEN = Path(__file__).parent / "golden"

# the shipped carrier family: closures of {1}, {w}, {w 2}, {w^2, w 2, w+1}
SHIPPED = {
    "one": (["1"], "w"),
    "omega": (["w"], "w^(2)"),
    "omega2": (["w+w"], "w^(2)"),
    "big": (["w^(2)", "w+w", "w+1"], "w^(3)"),
}

EXTRA = {
    # carrier with a nontrivial le2 pair (w, w^2)
    "ladder": (["1", "w", "w^(2)"], "w^(3)"),
    # 25-element carrier for the covering oracle criterion
    "wide25": (
        [
            "3",
            "w+2",
            "w+w+1",
            "w+w+w+1",
            "w^(2)+1",
            "w^(2)+w+1",
            "w^(2)+w+w",
            "w^(2)+w^(2)+1",
            "w^(3)+1",
            "w^(3)+w+1",
            "w^(3)+w^(2)+w",
            "w^(3)+w^(3)",
        ],
        "w^(4)",
    ),
    # 20-element carrier for the rule-validity criterion
    "wide20": (
        [
            "3",
            "w+2",
            "w+w+1",
            "w+w+w+1",
            "w^(2)+1",
            "w^(2)+w+1",
            "w^(2)+w^(2)",
            "w^(3)+1",
            "w^(3)+w",
            "w^(3)+w^(3)",
        ],
        "w^(4)",
    ),
}


def make_carrier(name) -> ClosedSet:
    gens, _ = {**SHIPPED, **EXTRA}[name]
    return closure(parse_term(g) for g in gens)


_cache = {}


def built(name):
    if name not in _cache:
        gens, top = {**SHIPPED, **EXTRA}[name]
        _cache[name] = build_hierarchy(
            closure(parse_term(g) for g in gens), parse_term(top)
        )
    return _cache[name]


@pytest.fixture(scope="session")
def shipped_hierarchies():
    return {name: built(name) for name in SHIPPED}


@pytest.fixture(scope="session")
def hierarchy_one():
    return built("one")


@pytest.fixture(scope="session")
def hierarchy_omega():
    return built("omega")


@pytest.fixture(scope="session")
def hierarchy_omega2():
    return built("omega2")


@pytest.fixture(scope="session")
def hierarchy_big():
    return built("big")


@pytest.fixture(scope="session")
def hierarchy_ladder():
    return built("ladder")


@pytest.fixture(scope="session")
def hierarchy_wide25():
    return built("wide25")


@pytest.fixture(scope="session")
def hierarchy_wide20():
    return built("wide20")


def load_golden(name):
    return json.loads((GOLDEN / name).read_text())
