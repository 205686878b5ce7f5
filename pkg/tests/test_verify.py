import pytest

from invlift.root_datum import build_root_datum
from invlift.verify import SuiteConfig, VerificationReport, datum_checks, population, run_suite


@pytest.mark.parametrize("suite", ["r", "b", "tits", "frobenius", "all"])
def test_small_suites_pass(suite):
    rep = run_suite(suite, "B3", SuiteConfig(orders=2, c_samples=2))
    assert rep.ok and rep.checked == 20 and rep.mode == "exhaustive"
    assert rep.passed == rep.checked and not rep.witnesses


def test_report_json_and_summary():
    rep = run_suite("r", "A2")
    d = rep.to_dict()
    assert d["ok"] and d["checked"] == 4
    assert rep.summary().startswith("PASS r A2 [exhaustive]: checked 4")
    bad = VerificationReport("r", "A2", "exhaustive", checked=1, failed=1,
                             witnesses=[{"word": "1", "failures": ["x"]}])
    assert not bad.ok and bad.summary().startswith("FAIL")


def test_population_modes():
    d = build_root_datum("E6")
    assert population(d, SuiteConfig())[0] == "exhaustive"
    mode, pop = population(d, SuiteConfig(mode="sampled", samples=15, seed=2))
    assert mode == "sampled" and len(pop) == 15
    assert population(build_root_datum("E7"), SuiteConfig(samples=5))[0] == "sampled"
    with pytest.raises(ValueError):
        population(d, SuiteConfig(mode="bogus"))


def test_seeded_reproducible():
    cfg = SuiteConfig(samples=8, seed=4, mode="sampled", orders=1)
    a, b = run_suite("b", "D5", cfg), run_suite("b", "D5", cfg)
    assert (a.checked, a.failed) == (b.checked, b.failed) == (8, 0)


def test_workers_merge_deterministically():
    serial = run_suite("r", "D4", SuiteConfig(orders=1))
    par = run_suite("r", "D4", SuiteConfig(orders=1, workers=2))
    assert (serial.checked, serial.failed) == (par.checked, par.failed)


def test_datum_checks():
    assert datum_checks(build_root_datum("F4")) == []


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", "A2")
