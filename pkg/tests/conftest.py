import numpy as np
import pytest


class ConstantDraws:
    """Stands in for ``Generator.random``: always returns ``value``."""

    def __init__(self, value):
        self.value = value
        self.consumed = 0

    def __call__(self, n):
        self.consumed += n
        return np.full(n, float(self.value))

    random = __call__


class RecordingRNG:
    """Wraps a Generator and keeps every uniform draw, in order."""

    def __init__(self, seed):
        self._rng = np.random.default_rng(seed)
        self.transcript = []

    def random(self, n=None):
        out = self._rng.random(n)
        self.transcript.extend(np.atleast_1d(out).tolist())
        return out


@pytest.fixture
def ones():
    return ConstantDraws(1.0)
