from pathlib import Path
from unittest import TestCase
from typek import settings
from typek.errors import FixtureError, TypeKError
from typek.utils import TABLES_FILE, find_data_file, run_in_threads


class TestDataFiles(TestCase):
    def test_tables_found(self):
        path = find_data_file(TABLES_FILE)
        self.assertTrue(path.is_file())
        self.assertEqual(path, settings.TABLES_PATH)

    def test_missing(self):
        with self.assertRaises(FixtureError):
            find_data_file(Path("share/typek/no_such_file.json"))


class TestThreads(TestCase):
    def test_order(self):
        funcs = [lambda k=k: k * k for k in range(6)]
        self.assertEqual(run_in_threads(funcs, jobs=3), [0, 1, 4, 9, 16, 25])
        self.assertEqual(run_in_threads(funcs), [0, 1, 4, 9, 16, 25])

    def test_error_reraised(self):
        def broken():
            raise TypeKError("broken suite")

        with self.assertRaises(TypeKError):
            run_in_threads([lambda: 1, broken, lambda: 3], jobs=2)
