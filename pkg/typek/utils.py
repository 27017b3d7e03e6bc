import threading
from functools import lru_cache
from logging import getLogger
from pathlib import Path
from sys import prefix
from typing import Callable, List, Optional, Sequence, TypeVar
from typek.errors import FixtureError

logger = getLogger(__file__)

T = TypeVar('T')

TABLES_FILE = Path('share/typek/type_k_tables.json')


def get_logger(name_space: str):
    return getLogger(name_space)


def data_prefixes() -> List[Path]:
    """
    Places searched for the shipped data files, the source checkout first.
    """
    checkout = Path(__file__).resolve().parent.parent
    return [checkout, Path.home() / '.local', Path('/usr/local'), Path(prefix)]


@lru_cache(maxsize=None)
def find_data_file(relative: Path = TABLES_FILE) -> Path:
    """
    args:
        relative: path of a data file below an installation prefix
    returns:
        the first existing ``prefix / relative``
    """
    for option in data_prefixes():
        candidate = option / relative
        logger.debug(f"looking for '{relative}' in '{option}'")
        if candidate.is_file():
            return candidate
    searched = ", ".join(str(p) for p in data_prefixes())
    raise FixtureError(f"can't find {relative} in any of {searched}")


def run_in_threads(funcs: Sequence[Callable[[], T]], jobs: int = 1) -> List[T]:
    """
    Call every function and return the results in the given order.

    With ``jobs > 1`` at most ``jobs`` functions run at the same time,
    each in its own daemon thread. Exceptions are re-raised in the caller.
    """
    if jobs <= 1 or len(funcs) <= 1:
        return [func() for func in funcs]

    results: List[Optional[T]] = [None] * len(funcs)
    errors: List[Optional[BaseException]] = [None] * len(funcs)
    slots = threading.Semaphore(jobs)

    def runner(index: int):
        try:
            results[index] = funcs[index]()
        except BaseException as e:
            errors[index] = e
        finally:
            slots.release()

    workers = []
    for index in range(len(funcs)):
        slots.acquire()
        worker = threading.Thread(target=runner, args=(index,), name=f'suite-{index}', daemon=True)
        worker.start()
        workers.append(worker)
    for worker in workers:
        worker.join()

    for error in errors:
        if error is not None:
            raise error
    return results  # type: ignore
