import random

import pytest

from dmodkit.galgebra import commutative, weyl, weyl_gl, weyl_homog, weyl_shift


@pytest.fixture(scope="session")
def D1():
    return weyl(1, ["x"])


@pytest.fixture(scope="session")
def D2():
    return weyl(2, ["x", "y"])


@pytest.fixture(scope="session")
def RXY():
    return commutative(["x", "y"])


@pytest.fixture(scope="session")
def presets_for_fuzz():
    return [
        weyl(2, ["x", "y"]),
        weyl_shift(1, 1, ["x"]),
        weyl_homog(1, (1,), (1,), ["x"]),
        weyl_gl(1, 2, ["x"]),
    ]


def random_element(alg, rng: random.Random, terms=3, deg=2, coeff=4):
    """Small random algebra element for fuzz tests."""
    out = alg.zero()
    for _ in range(terms):
        e = [0] * alg.n
        for _ in range(deg):
            e[rng.randrange(alg.n)] += rng.randrange(2)
        c = rng.randrange(-coeff, coeff + 1)
        out = out + alg.poly({tuple(e): c})
    return out


def random_commutative_poly(ring, rng: random.Random, terms=3, deg=3, coeff=4):
    out = ring.zero()
    for _ in range(terms):
        e = tuple(rng.randrange(deg + 1) for _ in range(ring.n))
        if sum(e) > deg:
            continue
        c = rng.randrange(-coeff, coeff + 1)
        out = out + ring.poly({e: c})
    return out
