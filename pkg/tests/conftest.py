import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from swcohom.formalring import build_formal_ring
from swcohom.repdata import load_fixture, parse_cohomology, parse_repdata
from swcohom.solver import Solver

FIXTURES = ("z4", "q8", "g16_11", "z2cubed", "d8")


@pytest.fixture(scope="session")
def repdata():
    return {name: parse_repdata(load_fixture(name + ".json")) for name in FIXTURES}


@pytest.fixture(scope="session")
def cohomology():
    return {name: parse_cohomology(load_fixture(name + "_cohomology.json"))
            for name in FIXTURES}


@pytest.fixture(scope="session")
def formal_rings(repdata):
    return {name: build_formal_ring(repdata[name]) for name in FIXTURES}


@pytest.fixture(scope="session")
def solved(formal_rings, cohomology):
    out = {}
    for name in FIXTURES:
        outcome = Solver(formal_rings[name], cohomology[name]).run()
        assert outcome.status == "success", (name, outcome.status, outcome.detail)
        out[name] = outcome
    return out
