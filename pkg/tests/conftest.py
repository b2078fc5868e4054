import pytest

from curvecover import CurveSpec, build_curve, generate

UNIT_SQUARE = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]


def make_corpus():
    """The standard test corpus: one curve per generator family."""
    return {
        "circle": generate(CurveSpec("circle")),
        "ellipse_2_1": generate(CurveSpec("ellipse", {"a": 2.0, "b": 1.0})),
        "square": build_curve(UNIT_SQUARE, normalize=True),
        "rectangle_10": generate(CurveSpec("rectangle", {"aspect": 10.0})),
        "random_d2": generate(CurveSpec("random_closed", {"n": 16, "seed": 2}, dim=2)),
        "random_d3": generate(CurveSpec("random_closed", {"n": 16, "seed": 3}, dim=3)),
        "random_d5": generate(CurveSpec("random_closed", {"n": 16, "seed": 5}, dim=5)),
        "lissajous3d": generate(CurveSpec("lissajous3d", {"freq_a": 3, "freq_b": 4})),
    }


@pytest.fixture(scope="session")
def corpus():
    return make_corpus()


@pytest.fixture(scope="session")
def circle(corpus):
    return corpus["circle"]


@pytest.fixture(scope="session")
def square(corpus):
    return corpus["square"]
