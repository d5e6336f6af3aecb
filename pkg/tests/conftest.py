"""Shared fixtures and the acceptance summary hook."""

from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from muse_anno import (
    LoweringOptions,
    Modality,
    emit_graph,
    lower_to_model,
    parse_jams,
)

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def bohemian_source() -> bytes:
    return (FIXTURES / "bohemian_rhapsody.jams").read_bytes()


@pytest.fixture(scope="session")
def bohemian_doc(bohemian_source):
    return parse_jams(bohemian_source)


@pytest.fixture(scope="session")
def bohemian_model(bohemian_doc):
    return lower_to_model(bohemian_doc, LoweringOptions(modality=Modality.AUDIO))


@pytest.fixture(scope="session")
def bohemian_graph(bohemian_model):
    return emit_graph(bohemian_model)


@pytest.fixture(scope="session")
def michelle_doc():
    return parse_jams((FIXTURES / "michelle.jams").read_bytes())


@pytest.fixture(scope="session")
def michelle_model(michelle_doc):
    return lower_to_model(michelle_doc, LoweringOptions(modality=Modality.AUDIO))


@pytest.fixture(scope="session")
def mozart_doc():
    return parse_jams((FIXTURES / "mozart_sonata_score.jams").read_bytes())


@pytest.fixture(scope="session")
def mozart_score_model(mozart_doc):
    return lower_to_model(mozart_doc, LoweringOptions(modality=Modality.SCORE))


# --- acceptance criterion reporting ------------------------------------------
#
# tests/test_acceptance.py holds one test per acceptance criterion; print a
# stable pass/fail line for each at the end of the run.

_CRITERIA_TITLES = {
    1: "fixture fidelity",
    2: "usage-example golden graphs",
    3: "violation injection 10/10",
    4: "serialization round-trip over generated models",
    5: "annotator property chain",
    6: "CQ oracle equivalence",
    7: "modality shape",
    8: "end-time arithmetic",
}

_acceptance_outcomes: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if name.startswith("test_c") and name[6].isdigit():
        _acceptance_outcomes[int(name[6])] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(_acceptance_outcomes):
        outcome = _acceptance_outcomes[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        title = _CRITERIA_TITLES.get(number, "")
        terminalreporter.write_line(f"criterion {number} ({title}): {status}")
