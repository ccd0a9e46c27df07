import warnings

import pytest

from areawalks import dp_enumerate


@pytest.fixture(scope="session")
def dp_hists():
    """Exact oracle histograms for all lengths the suites compare against."""
    return {n: dp_enumerate(n) for n in range(1, 15)}


@pytest.fixture(scope="session")
def client():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from areawalks.service import app

    return TestClient(app)
