import pytest
from hypothesis import HealthCheck, settings

from hypersimplex import Vertex

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def worked_pair():
    return Vertex.parse("110101101000"), Vertex.parse("100110010110")
