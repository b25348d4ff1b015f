import pytest

from indepgen import kernels
from indepgen.primes import sieve_primes


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    previous = kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(previous)


@pytest.fixture(scope="session")
def sieve_1e6():
    return sieve_primes(10**6)
