import json

import pytest

from opmeans.lab import suites
from opmeans.lab.suites import SUITE_NAMES, SUITES, run_suite
from opmeans.reports import SearchConfig

SMALL = SearchConfig(dims=(2, 3), trials=20)

EXPECTED_NAMES = {
    "lemma24", "theorem25-triviality", "corollary26-powers", "corollary27-screen", "stolarsky",
    "prop210-harmonic", "theorem32-preserving", "corollary33-arithmetic", "algp", "petz-hasegawa",
    "prop42-quasi-arithmetic", "prop45-power-means", "prop46-endpoints", "axioms",
}


def test_suite_names():
    assert set(SUITES) == EXPECTED_NAMES
    assert SUITE_NAMES[-1] == "all" and len(SUITE_NAMES) == 15


@pytest.mark.parametrize("name", sorted(EXPECTED_NAMES))
def test_suite_passes_small(name):
    rep = run_suite(name, SMALL)
    assert rep.items, name
    failed = [i.name for i in rep.items if not i.passed]
    assert not failed, failed[:5]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("theorem99")


def test_all_prefixes_names(monkeypatch):
    monkeypatch.setattr(suites, "SUITES", {k: SUITES[k] for k in ("lemma24", "prop42-quasi-arithmetic")})
    rep = run_suite("all", SMALL)
    assert rep.passed
    assert {i.name.split(":")[0] for i in rep.items} == {"lemma24", "prop42-quasi-arithmetic"}


@pytest.mark.parametrize("name", ["corollary27-screen", "stolarsky", "algp"])
def test_suite_determinism(name):
    one = json.dumps(run_suite(name, SMALL).to_dict(), sort_keys=True, allow_nan=False)
    two = json.dumps(run_suite(name, SMALL).to_dict(), sort_keys=True, allow_nan=False)
    assert one == two


def test_stolarsky_hypotheses_recorded():
    rep = run_suite("stolarsky", SMALL)
    hyp = [i for i in rep.items if "hypothes" in i.name]
    assert hyp and all(i.passed for i in hyp)
