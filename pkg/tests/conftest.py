import os
from pathlib import Path

import hypothesis
import pytest

from kdcfg.grammar import load_grammar, to_cnf

hypothesis.settings.register_profile("default", max_examples=1000, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=25, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

GRAMMARS = Path(__file__).resolve().parent.parent / "grammars"


@pytest.fixture(scope="session")
def grammar_dir():
    return GRAMMARS


@pytest.fixture(scope="session")
def g1():
    return load_grammar(GRAMMARS / "g1.dcfg")


@pytest.fixture(scope="session")
def g2():
    return load_grammar(GRAMMARS / "g2.dcfg")


@pytest.fixture(scope="session")
def g1_cnf(g1):
    return to_cnf(g1)


@pytest.fixture(scope="session")
def g2_cnf(g2):
    return to_cnf(g2)
