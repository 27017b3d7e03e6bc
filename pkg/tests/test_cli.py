import json
from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase
from typek.cli import parse_typek
from tests.utils import reset_tables, run_cli, shipped_tables, tables_file


class TestParse(TestCase):
    def test_unknown_command(self):
        with self.assertRaises(SystemExit):
            parse_typek(["test"])

    def test_unknown_suite(self):
        with self.assertRaises(SystemExit):
            parse_typek(["verify", "everything"])

    def test_no_command(self):
        code, _ = run_cli([])
        self.assertEqual(code, 2)

    def test_negative_trunc(self):
        code, _ = run_cli(["series", "eta", "--trunc", "-1"])
        self.assertEqual(code, 2)


class TestLattice(TestCase):
    def test_info(self):
        code, out = run_cli(["lattice", "info", "U+U(2)+E8(-2)"])
        self.assertEqual(code, 0)
        self.assertIn("rank 12", out)
        self.assertIn("signature (2, 10)", out)
        self.assertIn("|disc| 1024 = 2^10", out)
        self.assertIn("even", out)

    def test_info_json(self):
        code, out = run_cli(["lattice", "info", "A2", "--json"])
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["disc"], 3)
        self.assertEqual(data["discriminant_group"], [3])

    def test_parse_error(self):
        code, out = run_cli(["lattice", "info", "U+X7"])
        self.assertEqual(code, 2)
        self.assertIn("position 2", out)

    def test_eq(self):
        code, out = run_cli(["lattice", "eq", "U+U(2)", "2*U(6)"])
        self.assertEqual(code, 0)
        self.assertIn("over Q: equivalent", out)
        self.assertIn("different fingerprints", out)

    def test_not_eq(self):
        code, _ = run_cli(["lattice", "eq", "U", "A2"])
        self.assertEqual(code, 1)


class TestSeries(TestCase):
    def test_theta3(self):
        code, out = run_cli(["series", "theta3", "--trunc", "2"])
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "1 + 2*q^(1/2) + 2*q^2 + O(q^(5/2))")

    def test_eta(self):
        code, out = run_cli(["series", "eta", "--trunc", "1"])
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "q^(1/24) + O(q^(25/24))")


class TestVerify(TestCase):
    def tearDown(self):
        reset_tables()

    def test_brauer(self):
        code, out = run_cli(["verify", "brauer"])
        self.assertEqual(code, 0)
        self.assertIn("8 passed, 0 failed", out)

    def test_json_report(self):
        with TemporaryDirectory() as directory:
            path = Path(directory) / "report.json"
            code, out = run_cli(["verify", "coinv-det", "--json", "--report", str(path)])
            self.assertEqual(code, 0)
            printed = json.loads(out)
            self.assertEqual(printed["summary"], {"pass": 5, "fail": 0})
            self.assertEqual(json.loads(path.read_text()), printed)

    def test_jobs(self):
        code, out = run_cli(["verify", "pf-elliptic", "--trunc", "8", "--jobs", "2"])
        self.assertEqual(code, 0)
        self.assertIn("7 passed, 0 failed", out)

    def test_failure(self):
        data = shipped_tables()
        for row in data["coinvariant_eigenvalues"]:
            row["det"] += 1
        with tables_file(data) as path:
            code, out = run_cli(["--tables", str(path), "verify", "coinv-det"])
        self.assertEqual(code, 1)
        self.assertIn("0 passed, 5 failed", out)

    def test_missing_tables(self):
        code, _ = run_cli(["--tables", "/nonexistent/tables.json", "verify", "brauer"])
        self.assertEqual(code, 2)

    def test_wrong_rank_column(self):
        data = shipped_tables()
        data["groups"][0]["expected_rank"] = 11
        with tables_file(data) as path:
            code, out = run_cli(["--tables", str(path), "verify", "brauer"])
        self.assertEqual(code, 1)
        self.assertIn("7 passed, 1 failed", out)

    def test_broken_tables(self):
        data = shipped_tables()
        data["groups"][0]["disc_N"] = 7
        with tables_file(data) as path:
            code, _ = run_cli(["--tables", str(path), "verify", "brauer"])
        self.assertEqual(code, 2)
