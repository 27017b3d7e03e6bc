from unittest import TestCase
from typek.errors import VerificationFailure
from typek.report import FAIL, PASS, SKIP, Check, Report


def _fails():
    raise VerificationFailure("coefficient differs")


class TestCheck(TestCase):
    def test_compare(self):
        self.assertEqual(Check.compare("a", "anchor", 3, "3").status, PASS)
        self.assertEqual(Check.compare("a", "anchor", 3, 4).status, FAIL)

    def test_unknown_status(self):
        with self.assertRaises(ValueError):
            Check("a", "anchor", "maybe", "", "")

    def test_json_without_timing(self):
        check = Check("a", "anchor", PASS, "1", "1", elapsed=2.5)
        self.assertNotIn("elapsed", check.to_json())
        self.assertEqual(Check.from_json(check.to_json()), check)


class TestReport(TestCase):
    def test_run(self):
        report = Report("demo")
        report.run("ok", "anchor", 4, lambda: 2 + 2)
        report.run("broken", "anchor", 4, _fails)
        self.assertEqual(report.summary, {"pass": 1, "fail": 1})
        self.assertFalse(report.passed)
        self.assertEqual(report.checks[1].got, "error: coefficient differs")

    def test_skip_passes(self):
        report = Report("demo")
        report.skip("later", "anchor", "not computed")
        self.assertEqual(report.checks[0].status, SKIP)
        self.assertTrue(report.passed)

    def test_merge(self):
        first, second = Report("a"), Report("b")
        first.compare("x", "anchor", 1, 1)
        second.compare("y", "anchor", 1, 2)
        merged = Report.merge("all", [first, second])
        self.assertEqual([c.id for c in merged.checks], ["x", "y"])
        self.assertEqual(merged.summary, {"pass": 1, "fail": 1})

    def test_json(self):
        report = Report("demo")
        report.compare("x", "anchor", "a", "a")
        data = report.to_json()
        self.assertEqual(data["summary"], {"pass": 1, "fail": 0})
        self.assertEqual(Report.from_json(data).checks, report.checks)

    def test_render(self):
        report = Report("demo")
        report.compare("x", "anchor", 1, 2)
        text = report.render()
        self.assertIn("[fail] x: 2 (expected 1)", text)
        self.assertTrue(text.endswith("0 passed, 1 failed"))
