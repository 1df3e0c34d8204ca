import pytest

from semicoh.cli import corpus_names, load_spec
from semicoh.semigroup import AffineSemigroup

SQUARE = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
SQUARE_NAMES = {"x": (0, 0, 1), "y": (1, 0, 1), "v": (0, 1, 1), "u": (1, 1, 1)}
TWO_ZERO = [(2, 0), (1, 1), (0, 2)]
FOUR = [(4, 0), (3, 1), (1, 3), (0, 4)]
N3 = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def face_by_rays(Q, *vectors):
    """The face spanned by the given ray directions (as ambient vectors)."""
    index = {r: j for j, r in enumerate(Q.cone.rays)}
    return Q.cone.face_from_rays([index[v] for v in vectors])


@pytest.fixture(scope="session")
def corpus():
    return {name: AffineSemigroup(load_spec(name).generators) for name in corpus_names()}
