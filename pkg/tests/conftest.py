from fractions import Fraction

import pytest
from hypothesis import settings

from cmmcheck.laurent import LaurentQ
from cmmcheck.roots import Weight, from_fundamental

settings.register_profile("fixed", derandomize=True, deadline=None)
settings.load_profile("fixed")


def W(*coords) -> Weight:
    return Weight([Fraction(c) for c in coords])


def fw(n, *a) -> Weight:
    return from_fundamental(n, list(a))


def Q(terms) -> LaurentQ:
    return LaurentQ(terms)


q = LaurentQ.monomial(1)
one = LaurentQ.one()


@pytest.fixture
def rng():
    import random
    return random.Random(20240611)
