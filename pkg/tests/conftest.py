import warnings

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _quiet_hypothesis_warnings():
    with warnings.catch_warnings():
        warnings.filterwarnings("ignore", message=".*theorem comparison suppressed.*")
        warnings.filterwarnings("ignore", message=".*comparison suppressed.*")
        warnings.filterwarnings("ignore", message=".*infinite-dimensional.*")
        yield
