import os
import sys

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from rldgroups import Alphabet

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", deadline=None, max_examples=300)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# the two alphabets the order table was computed for
TESTED = [Alphabet(1, 2), Alphabet(2, 3)]


@pytest.fixture(params=TESTED, ids=str)
def alpha(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240229)


def random_word_element(a, n, rng, length=12):
    """Product of a random word in the automaton generators [p]_n, [q]_n."""
    from rldgroups import gen_p, gen_q, identity, mul

    gens = (gen_p(a, n), gen_q(a, n))
    g = identity(n)
    for b in rng.integers(0, 2, size=length):
        g = mul(g, gens[b])
    return g


def pytest_terminal_summary(terminalreporter):
    lines = []
    for mod in list(sys.modules.values()):
        lines.extend(getattr(mod, "ACCEPTANCE_LINES", None) or [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
