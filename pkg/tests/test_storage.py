from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase
from typek import storage, type_k
from typek.errors import FixtureError
from tests.utils import reset_tables, shipped_tables, tables_file


class TestTablesPath(TestCase):
    def tearDown(self):
        reset_tables()

    def test_shipped(self):
        reset_tables()
        data = storage.load_tables()
        self.assertEqual(len(data["groups"]), 8)

    def test_missing_file(self):
        with TemporaryDirectory() as directory:
            storage.set_tables_path(Path(directory) / "missing.json")
            type_k.tables.cache_clear()
            self.assertEqual(storage.load_tables(), {})
            with self.assertRaises(FixtureError):
                type_k.tables()

    def test_other_file(self):
        data = shipped_tables()
        data["groups"] = data["groups"][:1]
        with tables_file(data) as path:
            storage.set_tables_path(path)
            type_k.tables.cache_clear()
            self.assertEqual(storage.get_tables_path(), path)
            self.assertEqual([r.tag for r in type_k.records()], ["C2"])


class TestReports(TestCase):
    def test_write_and_read(self):
        report = {"suite": "brauer", "checks": [], "summary": {"pass": 0, "fail": 0}}
        with TemporaryDirectory() as directory:
            path = Path(directory) / "out" / "report.json"
            self.assertTrue(storage.write_report(path, report))
            self.assertEqual(storage.read_report(path), report)

    def test_read_missing(self):
        with TemporaryDirectory() as directory:
            self.assertIsNone(storage.read_report(Path(directory) / "missing.json"))
