import pytest
from hypothesis import settings

from symmetric_systems.core.config import VERTEX_CAP_ENV
from symmetric_systems.core.graph_io import save_graph
from symmetric_systems.systems import build_system
from tests.support import cycle_graph

settings.register_profile("default", deadline=None, max_examples=80)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def default_vertex_cap(monkeypatch):
    monkeypatch.delenv(VERTEX_CAP_ENV, raising=False)


@pytest.fixture(scope="session")
def petersen():
    return build_system("subsets:n=5,k=2,t=1")


@pytest.fixture(scope="session")
def k42():
    """2-subsets of [4] meeting in at least one point: three disjoint edges."""
    return build_system("subsets:n=4,k=2,t=1")


@pytest.fixture(scope="session")
def s3():
    """Permutations of [3] agreeing somewhere: two disjoint triangles."""
    return build_system("perms:n=3,t=1")


@pytest.fixture(scope="session")
def c5():
    return cycle_graph(5)


@pytest.fixture
def graph_file(tmp_path):
    def write(graph, generators=None, name="graph.json"):
        return save_graph(str(tmp_path / name), graph, generators)
    return write
