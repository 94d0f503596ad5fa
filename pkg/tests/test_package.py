import importlib.metadata

import paraplactic as m


def test_version():
    assert importlib.metadata.version("paraplactic") == m.__version__
