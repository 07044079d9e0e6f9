import json

from albert.verify import run_verification


class TestRunVerification:
    def test_small_batch_all_pass(self):
        report = run_verification(count=15, seed=7)
        assert report.passed
        assert report.count == 15
        assert len(report.rows) == 17
        for row in report.rows:
            assert row.passed, f"{row.name}: {row.max_residual} > {row.threshold}"
            assert row.max_residual <= row.threshold

    def test_oracle_suites_capped(self):
        report = run_verification(count=15, seed=7)
        by_name = {row.name: row for row in report.rows}
        assert by_name["oracle-octonionic"].samples == 15
        report = run_verification(count=300, seed=7)
        by_name = {row.name: row for row in report.rows}
        assert by_name["oracle-octonionic"].samples == 200
        assert by_name["moufang"].samples == 300

    def test_byte_deterministic(self):
        a = json.dumps(run_verification(count=12, seed=5).to_dict(), sort_keys=True)
        b = json.dumps(run_verification(count=12, seed=5).to_dict(), sort_keys=True)
        assert a == b

    def test_suites_use_independent_streams(self):
        # changing the seed perturbs every suite's measured residual
        r1 = run_verification(count=12, seed=5)
        r2 = run_verification(count=12, seed=6)
        diffs = sum(
            1 for a, b in zip(r1.rows, r2.rows) if a.max_residual != b.max_residual
        )
        assert diffs >= 15

    def test_report_dict_shape(self):
        d = run_verification(count=10, seed=3).to_dict()
        assert sorted(d) == ["count", "pass", "rows", "seed"]
        assert sorted(d["rows"][0]) == [
            "max_residual", "name", "pass", "samples", "threshold",
        ]
