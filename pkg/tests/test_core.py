import logging

from src.core.config import get_env
from src.core.logger import get_logger, log_exception
from src.core.paths import paths


def test_get_env_coerces_to_default_type(monkeypatch):
    monkeypatch.setenv('ZDT_TEST_INT', '12')
    monkeypatch.setenv('ZDT_TEST_BOOL', 'no')
    monkeypatch.setenv('ZDT_TEST_STR', 'DEBUG')
    assert get_env('ZDT_TEST_INT', 4) == 12
    assert get_env('ZDT_TEST_BOOL', True) is False
    assert get_env('ZDT_TEST_STR', 'INFO') == 'DEBUG'
    assert get_env('ZDT_TEST_MISSING', 7) == 7


def test_logger_is_configured_once():
    first = get_logger('test_core')
    second = get_logger('test_core')
    assert first is second
    assert len(first.handlers) == len(second.handlers)
    assert not first.propagate


def test_log_exception(caplog):
    logger = get_logger('test_core_exception')
    logger.propagate = True
    with caplog.at_level(logging.ERROR, logger='test_core_exception'):
        log_exception(logger, "Ошибка", ValueError("bad"))
    assert "Ошибка: bad" in caplog.text


def test_result_file_path():
    assert paths.result_file('pd', 'json') == paths.RESULTS_DIR / 'pd.json'
