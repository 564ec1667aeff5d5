from __future__ import annotations

import numpy as np
import pytest

from stegotext import CharNGramModel, load_corpus, synthetic_cover


@pytest.fixture(scope="session")
def corpus() -> str:
    return load_corpus()


@pytest.fixture(scope="session")
def model(corpus) -> CharNGramModel:
    return CharNGramModel(order=3).fit([corpus])


@pytest.fixture(scope="session")
def cover() -> np.ndarray:
    return synthetic_cover(512, 512, seed=7)


@pytest.fixture()
def small_cover() -> np.ndarray:
    return synthetic_cover(32, 32, seed=3)
