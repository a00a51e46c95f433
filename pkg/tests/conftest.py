import random

import pytest

from altalg.fields import PrimeField, RatFunField, RationalField


@pytest.fixture
def rng():
    return random.Random(42)


@pytest.fixture(params=["gf2", "gf3", "rationals", "ratfun2"])
def any_field(request):
    return {
        "gf2": PrimeField(2),
        "gf3": PrimeField(3),
        "rationals": RationalField(),
        "ratfun2": RatFunField(2),
    }[request.param]


def sample_elements(field, rng, count=128):
    """Deterministic elements for property checks: exhaustive for the tiny
    prime fields, seeded samples elsewhere."""
    if field.is_finite and field.order <= 3:
        return list(field.elements())
    return [field.random_element(rng) for _ in range(count)]


def sparse_element(field, rng):
    """Matrix-entry sampler; for ratfun2 the field's own sampler already keeps
    entries monomial/monomial so unreduced matrices stay inside the budget."""
    return field.random_element(rng)
