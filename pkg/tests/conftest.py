import pytest

from latlab import SearchBudget


@pytest.fixture
def quick_budget():
    """Generous-but-bounded budget for unit-scale solver calls."""
    return SearchBudget(max_nodes=10**8, max_time=120.0)
