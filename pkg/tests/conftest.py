from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


def odd_primes_below(bound: int) -> list[int]:
    out = []
    for n in range(3, bound, 2):
        if all(n % d for d in range(3, int(n**0.5) + 1, 2)):
            out.append(n)
    return out
