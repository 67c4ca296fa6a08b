"""The conformance suites themselves, run in process.

The paper suite is the expensive one (it sweeps the width-6 census),
so it runs once per session via a module-scoped fixture.
"""

import pytest

from seqlab.verify import SUITES, run_suite


@pytest.fixture(scope="module")
def paper_result():
    return run_suite("paper")


def test_suite_names():
    assert set(SUITES) == {"paper", "oracles", "all"}


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("vibes")


def test_oracle_suite_all_pass():
    result = run_suite("oracles")
    assert result.exit_code == 0
    assert len(result.checks) == 10
    assert all(c.status == "pass" for c in result.checks)


def test_paper_suite_conforms(paper_result):
    assert paper_result.exit_code == 0
    assert len(paper_result.checks) == 18
    assert not [c for c in paper_result.checks if c.status == "fail"]


def test_paper_suite_documented_errata(paper_result):
    errata = {c.id for c in paper_result.checks if c.status == "erratum"}
    assert errata == {"odd-addon-primes", "even-addon-2p", "census-w5"}
    for c in paper_result.checks:
        if c.status == "erratum":
            assert c.note  # an erratum must explain itself


def test_render_ends_with_counts(paper_result):
    last = paper_result.render().splitlines()[-1]
    assert last.startswith("18 checks:")
    assert last.endswith("3 erratum, 0 fail")
