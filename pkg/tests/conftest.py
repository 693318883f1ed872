import pytest

import config


@pytest.fixture(autouse=True, scope='session')
def _log_to_tmp(tmp_path_factory):
    config.LOG_FILE = str(tmp_path_factory.mktemp('logs') / 'conic_nets.log')
    yield
