import pytest

from vincular import PATTERN, brute_avoiders


@pytest.fixture(scope="session")
def brute_levels() -> dict[int, list[tuple[int, ...]]]:
    """Avoiders of 1-32-4 by brute force, shared across test modules."""
    return {n: brute_avoiders(PATTERN, n) for n in range(1, 8)}
