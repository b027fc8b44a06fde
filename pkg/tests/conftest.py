import numpy as np
import pytest

from npcs import DistributionSpec, LabeledSample, Seed, generate


@pytest.fixture
def tiny_sample():
    # labels [0,0,1,1] with a single feature that doubles as a score
    return LabeledSample(
        np.array([[0.2], [0.9], [0.4], [0.8]]), np.array([0, 0, 1, 1])
    )


@pytest.fixture
def gauss_spec():
    return DistributionSpec("gaussian", 30)


@pytest.fixture
def small_gauss():
    return generate(DistributionSpec("gaussian", 5), 400, Seed(123))


def make_sample(rng, n0, n1, d=2, shift=1.0):
    x0 = rng.standard_normal((n0, d))
    x1 = rng.standard_normal((n1, d)) + shift
    features = np.vstack([x0, x1])
    labels = np.concatenate([np.zeros(n0, dtype=int), np.ones(n1, dtype=int)])
    return LabeledSample(features, labels)
