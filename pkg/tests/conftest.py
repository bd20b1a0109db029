"""共享 fixtures"""

import io
from pathlib import Path
from typing import Callable, Optional, Sequence, Tuple

import pytest

from reluctant.main import main
from reluctant.models.domain import AlgorithmId, SortOutcome, SortRun
from reluctant.sorts import run_sort

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def sort() -> Callable[..., SortOutcome]:
    """sort(algorithm, values, **run_kwargs) -> SortOutcome"""
    def _sort(algorithm: AlgorithmId, values: Sequence[int], **kwargs) -> SortOutcome:
        return run_sort(SortRun(input=tuple(values), algorithm=algorithm, **kwargs))
    return _sort


@pytest.fixture
def cli(capsys, monkeypatch) -> Callable[..., Tuple[int, str, str]]:
    """cli(*argv, stdin=None) -> (exit code, stdout, stderr)"""
    def _cli(*argv: str, stdin: Optional[str] = None) -> Tuple[int, str, str]:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin or ""))
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _cli


@pytest.fixture
def golden() -> Callable[[str], str]:
    def _golden(name: str) -> str:
        return (GOLDEN_DIR / name).read_text(encoding="utf-8")
    return _golden
