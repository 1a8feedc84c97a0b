import numpy as np
import pytest

import fuzzycorner as fc


def test_pgm_round_trip():
    img = np.arange(12, dtype=np.uint8).reshape(3, 4)
    for binary in (True, False):
        back = fc.read_pgm(fc.write_pgm(img, binary))
        assert back.shape == (3, 4)
        assert np.array_equal(back, img)


def test_bad_pgm_raises_value_error():
    with pytest.raises(ValueError):
        fc.read_pgm(b"P5\n2 2\n65535\n\x00\x00")


def test_rectangle_corners():
    img = fc.standard_rectangle()
    corners = fc.detect_fuzzy(img)
    assert sorted((x, y) for x, y, _ in corners) == [(17, 17), (17, 46), (46, 17), (46, 46)]
    mu = fc.cornerness_map(img)
    assert mu.shape == img.shape
    assert mu[17, 17] == 1.0
    assert fc.select_corners(mu, 0.7, 10) == corners


def test_harris_rectangle():
    corners = fc.harris_detect(fc.standard_rectangle())
    assert len(corners) == 4


def test_degradations():
    img = np.full((32, 32), 100, dtype=np.uint8)
    assert fc.brighten(img, 200).max() == 255
    assert fc.darken(img, 40).max() == 60
    assert np.array_equal(fc.blur(img, 5), img)
    a = fc.impulse_noise(img, 0.1, 7)
    b = fc.impulse_noise(img, 0.1, 7)
    assert np.array_equal(a, b)
    assert int((a != 100).sum()) == round(0.1 * img.size)


def test_metrics():
    a = [(0, 0, 1.0), (10, 10, 1.0)]
    b = [(1, 0, 1.0)]
    assert fc.stability(a, b, 3.0) == 100.0
    assert fc.noise_immunity(a, b, 3.0) == 50.0
    assert fc.stability([], [], 3.0) is None


def test_bad_template_text():
    with pytest.raises(ValueError):
        fc.detect_fuzzy(fc.standard_rectangle(), templates="1,1 1,2\n")
