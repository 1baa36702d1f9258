import pytest

from app.barrier import validate_and_build
from app.coverage import fix_iso_barrier
from app.geom_core import Point, Segment


def segs(*pairs):
    return [Segment(Point(*a), Point(*b)) for a, b in pairs]


@pytest.fixture
def triangle():
    return validate_and_build(segs(((0, 0), (4, 0)), ((4, 0), (0, 4)), ((0, 4), (0, 0))))


@pytest.fixture
def unit_square():
    return validate_and_build(segs(((0, 0), (1, 0)), ((1, 0), (1, 1)),
                                   ((1, 1), (0, 1)), ((0, 1), (0, 0))))


@pytest.fixture
def single_segment():
    return validate_and_build(segs(((0, 0), (4, 0))))


@pytest.fixture
def fixiso():
    return fix_iso_barrier()


@pytest.fixture
def write_doc(tmp_path):
    """Write a barrier document and return its path."""
    def write(text, name="barrier.json"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def make_barrier():
    def make(*pairs):
        return validate_and_build(segs(*pairs))
    return make
