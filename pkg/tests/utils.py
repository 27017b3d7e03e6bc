import json
from contextlib import contextmanager, redirect_stdout
from io import StringIO
from pathlib import Path
from random import Random
from tempfile import TemporaryDirectory
from typing import Iterator, List, Tuple
from typek import settings, storage, type_k
from typek.cli import parse_typek


def reset_tables():
    storage.set_tables_path(settings.TABLES_PATH)
    type_k.tables.cache_clear()


@contextmanager
def tables_file(data: dict) -> Iterator[Path]:
    """
    Write ``data`` to a temporary fixture file and yield its path.
    """
    with TemporaryDirectory() as directory:
        path = Path(directory) / "tables.json"
        path.write_text(json.dumps(data))
        yield path


def shipped_tables() -> dict:
    with open(settings.TABLES_PATH) as f:
        return json.load(f)


def run_cli(args: List[str]) -> Tuple[int, str]:
    out = StringIO()
    with redirect_stdout(out):
        code = parse_typek(args)
    return code, out.getvalue()


SEED = settings.RANDOM_SEED


def random_matrix(rng: Random, rows: int, cols: int, bound: int = 9) -> List[List[int]]:
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def random_nonzero(rng: Random, bound: int = 60) -> int:
    value = 0
    while value == 0:
        value = rng.randint(-bound, bound)
    return value


# even lattices whose discriminant groups contain isotropic elements
ISOTROPIC_POOL = ("U(2)", "U(4)", "U(2)+U(2)", "<4>+<-4>", "4*<2>")
