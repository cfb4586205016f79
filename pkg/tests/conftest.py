import pytest

from selfinverse.rng import new_stream


@pytest.fixture
def stream():
    return new_stream(seed=12345, stream_id=0)


def make_stream(seed, stream_id=0):
    return new_stream(seed=seed, stream_id=stream_id)
