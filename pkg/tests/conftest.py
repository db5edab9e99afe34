import pytest

from loopalg.loop_affine import AlgebraSpec
from loopalg.twisted_grading import TwistedBasis

_TB = {}
_SPEC = {}


@pytest.fixture(scope="session")
def tb_cache():
    def get(label):
        if label not in _TB:
            _TB[label] = TwistedBasis.from_label(label)
        return _TB[label]
    return get


@pytest.fixture(scope="session")
def spec_cache(tb_cache):
    def get(label, flavor="loop", level=0):
        key = (label, flavor, str(level))
        if key not in _SPEC:
            _SPEC[key] = AlgebraSpec(tb_cache(label), flavor=flavor,
                                     level=level)
        return _SPEC[key]
    return get
