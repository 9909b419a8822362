import pytest

from lieproj import build_algebra

# (type, highest weight) pairs exercised by the acceptance suite
MATRIX = [
    ("A1", (1,)),
    ("A1", (2,)),
    ("A2", (1, 0)),
    ("A2", (1, 1)),
    ("A3", (0, 1, 0)),
    ("A3", (1, 0, 1)),
    ("B2", (1, 0)),
    ("B2", (0, 1)),
    ("G2", (1, 0)),
]
ADJOINT = [("A1", (2,)), ("A2", (1, 1)), ("A3", (1, 0, 1))]


def entry_id(entry):
    t, w = entry
    return f"{t}[{','.join(map(str, w))}]"


@pytest.fixture(params=MATRIX, ids=entry_id)
def algebra(request):
    t, w = request.param
    return build_algebra(t, w)


@pytest.fixture(params=ADJOINT, ids=entry_id)
def adjoint_algebra(request):
    t, w = request.param
    return build_algebra(t, w)
