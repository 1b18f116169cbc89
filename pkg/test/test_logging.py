import os
import logging as _logging
import pytest
from simadc import logging
from test.tutils import random_str


LEVELS = [
    logging.DEBUG,
    logging.INFO,
    logging.WARNING,
    logging.ERROR,
    logging.CRITICAL,
]


@pytest.fixture
def restore_level():
    yield
    logging.setLevel(logging.INFO)


def emit_all(logger):
    msgs = {}
    for level in LEVELS:
        msgs[level] = random_str(12)
        logger.log(level, msgs[level])
    return msgs


@pytest.mark.parametrize('level', LEVELS)
def test_set_level(caplog, restore_level, level):
    logger = logging.getLogger('test_logging.set_level')
    assert logging.getLogger('test_logging.set_level') is logger
    with caplog.at_level(level):
        logging.setLevel(level)
        msgs = emit_all(logger)
    for mlevel, msg in msgs.items():
        assert (msg in caplog.text) == (mlevel >= level)


def test_run_log(tmp_path, restore_level):
    logger = logging.getLogger('test_logging.run_log')
    # Only the stderr handler outside a run
    assert len(logger.handlers) == 1

    logging.setLevel(logging.WARNING)
    with logging.run_log(str(tmp_path), 'sweep') as path:
        assert path == os.path.join(str(tmp_path), logging.RUN_LOG_NAME)
        assert len(logger.handlers) == 2
        # Loggers created inside the run are wired too
        late = logging.getLogger('test_logging.run_log_late')
        assert len(late.handlers) == 2
        msgs = emit_all(logger)
        late_msg = random_str(12)
        late.error(late_msg)
    after = random_str(12)
    logger.error(after)

    assert len(logger.handlers) == 1
    assert len(late.handlers) == 1
    with open(path, 'r', encoding='utf-8') as f:
        log = f.read()
    for mlevel, msg in msgs.items():
        assert (msg in log) == (mlevel >= logging.WARNING)
    assert late_msg in log
    assert after not in log
    assert '| ERROR | sweep | [test_logging.run_log_late.' in log
    assert '\033[' not in log


def test_run_log_closes_on_error(tmp_path):
    logger = logging.getLogger('test_logging.run_log_error')
    with pytest.raises(RuntimeError):
        with logging.run_log(str(tmp_path)) as path:
            hdlr = logger.handlers[-1]
            logger.error('before the failure')
            raise RuntimeError
    assert hdlr not in logger.handlers
    assert hdlr.stream is None
    with open(path, 'r', encoding='utf-8') as f:
        assert '| ERROR | - | ' in f.read()


@pytest.mark.parametrize(
    'value,level',
    [
        ('debug', logging.DEBUG),
        ('WARNING', logging.WARNING),
        ('', logging.INFO),
        ('loud', logging.INFO),
    ],
)
def test_level_from_env(monkeypatch, value, level):
    monkeypatch.setenv('SIMADC_VERBOSE', value)
    assert logging.level_from_env() == level


def test_color_formatter():
    record = _logging.LogRecord(
        'simadc.test', _logging.WARNING, __file__, 1, 'message', None, None
    )
    plain = logging.ColorFormatter(use_color=False).format(record)
    assert '| WARNING | [simadc.test.' in plain
    assert '\033[' not in plain

    colored = logging.ColorFormatter(use_color=True).format(record)
    assert '\033[0;33mWARNING\033[0m' in colored
    assert '\033[1msimadc.test.' in colored
    # The record itself keeps its plain level name
    assert record.levelname == 'WARNING'
