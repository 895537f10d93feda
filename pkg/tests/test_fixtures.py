"""Every rule fixture directory must produce exactly its recorded findings."""
import pytest

from fixture_utils import (
    analyze_dir,
    expected_findings,
    finding_map,
    rule_dirs,
    rule_id_for_dir,
)


@pytest.mark.parametrize("dirname", rule_dirs())
def test_fixture_findings_exact(dirname):
    expected = expected_findings(dirname)
    result = analyze_dir(dirname)
    got = finding_map(result)
    want = {
        path: sorted((row["line"], row["rule"]) for row in rows)
        for path, rows in expected.items() if rows
    }
    assert got == want
    assert result.rule_crashes == []
    assert result.parse_diagnostics == []


@pytest.mark.parametrize("dirname", rule_dirs())
def test_fixture_has_positive_and_negative_files(dirname):
    expected = expected_findings(dirname)
    rule_id = rule_id_for_dir(dirname)
    pos = [p for p, rows in expected.items() if any(r["rule"] == rule_id for r in rows)]
    neg = [p for p, rows in expected.items() if all(r["rule"] != rule_id for r in rows)]
    assert len(pos) >= 2, f"{dirname}: needs at least two positive fixtures"
    assert len(neg) >= 2, f"{dirname}: needs at least two negative fixtures"


def test_every_rule_has_a_fixture_dir():
    ids = sorted(rule_id_for_dir(d) for d in rule_dirs())
    assert ids == [f"JSSEC-{n:03d}" for n in range(1, 25)]
