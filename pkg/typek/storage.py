"""
This module reads the shipped classification tables and reads and writes
verification reports as JSON files.
"""
from functools import lru_cache
from os import PathLike
from typing import Optional, Union
import json
from pathlib import Path
from typek.settings import TABLES_PATH
from typek.utils import get_logger

logger = get_logger(__name__)

_tables_path: Path = TABLES_PATH


def set_tables_path(path: Union[str, PathLike]) -> None:
    """
    Use another fixture file for the classification tables.
    """
    global _tables_path
    _tables_path = Path(path)
    load_tables.cache_clear()


def get_tables_path() -> Path:
    return _tables_path


@lru_cache(maxsize=1)
def load_tables() -> dict:
    """
    Read the classification tables, returns an empty dict in case of failure.
    """
    if _tables_path.exists():
        try:
            with open(_tables_path, 'r') as f:
                data = json.load(f)
                logger.info(f"loaded tables from {_tables_path}")
                return data
        except Exception as e:
            logger.error(f"Error reading tables {_tables_path}: {e}")
    else:
        logger.error(f"tables file {_tables_path} does not exist")
    return {}


def write_report(path: Union[str, PathLike], report: dict) -> bool:
    """
    Write a report to disk, returns False in case of failure.
    """
    path = Path(path)
    try:
        dump = json.dumps(report, indent=2, sort_keys=False)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w') as f:
            f.write(dump + "\n")
        return True
    except Exception as e:
        logger.error(f"Error writing report {path}: {e}")
        return False


def read_report(path: Union[str, PathLike]) -> Optional[dict]:
    """
    Read a report from disk, returns None in case of failure.
    """
    path = Path(path)
    try:
        with open(path, 'r') as f:
            return json.load(f)
    except Exception as e:
        logger.error(f"Error reading report {path}: {e}")
        return None
