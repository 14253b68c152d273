import pytest

from ptsip.catalog import CATALOG, reference_spec


@pytest.fixture(params=CATALOG, ids=lambda p: p.value)
def spec(request):
    """Every named potential at its reference parameters."""
    return reference_spec(request.param)
