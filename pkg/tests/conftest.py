from __future__ import annotations

import numpy as np
import pytest


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260809)


def natural_image() -> np.ndarray:
    """512x512 8-bit natural photo used for the operating-point checks."""
    from skimage import data

    return np.asarray(data.camera(), dtype=np.uint8)


@pytest.fixture(scope="session")
def photo_512() -> np.ndarray:
    return natural_image()


@pytest.fixture(scope="session")
def photo_128(photo_512) -> np.ndarray:
    # central crop keeps natural statistics at desk scale
    return photo_512[192:320, 192:320].copy()
