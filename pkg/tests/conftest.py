import random

import pytest

from khv import corpus
from khv.diagram import parse_pd, random_braid_diagram

# right-handed trefoil, mirror of KnotAtlas 3_1
RIGHT_TREFOIL = "X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)"
LEFT_TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIGURE_EIGHT = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
POS_KINK = "X(1,1,2,2)"
NEG_KINK = "X(1,2,2,1)"
POS_HOPF = "X(1,3,2,4) X(3,1,4,2)"


@pytest.fixture(scope="session")
def corpus_entries():
    return corpus.entries()


@pytest.fixture(scope="session")
def right_trefoil():
    return parse_pd(RIGHT_TREFOIL)


@pytest.fixture(scope="session")
def figure_eight():
    return parse_pd(FIGURE_EIGHT)


def random_diagrams(count, max_crossings=6, seed=20240611):
    rng = random.Random(seed)
    return [random_braid_diagram(max_crossings, rng) for _ in range(count)]
