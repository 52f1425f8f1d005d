import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wsuper.catalog import CATALOG_NAMES, minimal_setup
from wsuper.relations import SuiteContext

_setups = {}
_contexts = {}


def get_setup(name):
    if name not in _setups:
        _setups[name] = minimal_setup(name)
    return _setups[name]


def get_ctx(name):
    if name not in _contexts:
        _contexts[name] = SuiteContext(get_setup(name))
    return _contexts[name]


@pytest.fixture(params=CATALOG_NAMES)
def catalog_setup(request):
    return get_setup(request.param)


@pytest.fixture
def psl22():
    return get_setup("psl22")
