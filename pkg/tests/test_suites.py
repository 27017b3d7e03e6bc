from unittest import TestCase
from typek.suites import SUITES, run_suite, run_suites
from tests.utils import reset_tables


class TestSuites(TestCase):
    def setUp(self):
        reset_tables()

    def assertPassed(self, report):
        failed = [f"{c.id}: {c.got} (expected {c.expected})" for c in report.checks if not c.ok]
        self.assertEqual(failed, [])

    def test_names(self):
        self.assertEqual(sorted(SUITES), sorted(["duality", "brauer", "coinv-det", "enriques", "tables",
                                                 "proj-models", "pf-d12", "pf-d8", "pf-elliptic"]))

    def test_lattice_suites(self):
        for report in run_suites(["duality", "brauer", "coinv-det", "tables"], jobs=2):
            self.assertPassed(report)
            if report.suite == "tables":
                self.assertIn("tables.lattices.C2xD8", [c.id for c in report.checks])

    def test_enriques(self):
        report = run_suite("enriques")
        self.assertPassed(report)
        self.assertEqual(len(report.checks), 5)

    def test_proj_models(self):
        self.assertPassed(run_suite("proj-models"))

    def test_d12(self):
        report = run_suite("pf-d12", 3)
        self.assertPassed(report)
        self.assertIn("pf-d12.yukawa", [c.id for c in report.checks])

    def test_d8(self):
        self.assertPassed(run_suite("pf-d8", 2))
