import random

import pytest
from hypothesis import strategies as st

from codepres import SplitScheme, build_code, parse_word
from codepres.codemodel import Universe
from codepres.ctf import bundled

SAMPLE_WORDS = ["00000", "01100", "00110", "11000", "11001", "11011"]


# --- independent oracles, string based -----------------------------------

def oracle_s(n, scheme):
    return {"even": n // 2, "type1": (n + 1) // 2, "type2": (n - 1) // 2}[scheme]


def oracle_groups(words, s):
    """Brute-force split-and-group: zone string -> sorted decinumers."""
    groups = {}
    for w in words:
        groups.setdefault(w[:s], []).append(int(w[s:], 2))
    return {z: sorted(v) for z, v in sorted(groups.items(), key=lambda kv: int(kv[0], 2))}


def table1_sets():
    """Table 1 rows expanded with plain set algebra over T4."""
    T = set(range(16))
    l = {}
    l[8] = set(range(1, 10))
    l[0] = T - {1, 2, 3, 8, 12}
    l[1] = T - {0, 1, 2}
    l[2] = T - {3, 8, 9}
    l[3] = T - {0, 1, 2, 3}
    l[4] = T - l[8]
    l[5] = set(l[4])
    l[6] = l[4] | {1}
    l[7] = l[4] - {0}
    l[9] = set(l[8])
    l[10] = l[8] - {1}
    l[11] = set()
    l[12] = set(l[8])
    l[13] = set(l[8])
    l[14] = set(l[10])
    l[15] = l[8] | {0, 15}
    return {format(i, "X"): frozenset(v) for i, v in l.items()}


# --- fixtures ------------------------------------------------------------

@pytest.fixture
def sample():
    return build_code(5, Universe.LISTED, SAMPLE_WORDS, name="sample-sec2")


@pytest.fixture(scope="session")
def ebcdic():
    return bundled("ebcdic-paper")


def random_code(rng, n, universe=Universe.LISTED, max_order=None):
    space = 1 << n
    top = min(space, max_order or space)
    k = rng.randint(0 if universe is Universe.FULL else 1, top)
    values = rng.sample(range(space), k)
    return build_code(n, universe, [format(v, f"0{n}b") for v in values])


# --- hypothesis strategies -----------------------------------------------

def words(n=None, min_n=1, max_n=12):
    if n is None:
        return st.integers(min_n, max_n).flatmap(lambda k: words(k))
    return st.text("01", min_size=n, max_size=n).map(parse_word)


@st.composite
def word_pairs(draw, min_n=1, max_n=16):
    n = draw(st.integers(min_n, max_n))
    return draw(words(n)), draw(words(n))


@st.composite
def codes(draw, min_n=2, max_n=8, universe=None):
    n = draw(st.integers(min_n, max_n))
    mode = universe or draw(st.sampled_from(list(Universe)))
    values = draw(st.lists(st.integers(0, (1 << n) - 1), unique=True,
                           min_size=0 if mode is Universe.FULL else 1,
                           max_size=min(1 << n, 40)))
    return build_code(n, mode, [format(v, f"0{n}b") for v in values])


def valid_schemes(n):
    return [SplitScheme.EVEN] if n % 2 == 0 else [SplitScheme.TYPE_I, SplitScheme.TYPE_II]


@pytest.fixture
def rng():
    return random.Random(20240601)


# --- acceptance summary --------------------------------------------------

_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
