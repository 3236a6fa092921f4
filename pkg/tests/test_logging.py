from __future__ import annotations

import logging

from dncsort.logging import err_console, get_logger, set_verbose


def test_package_logger_is_configured_once():
    root = get_logger()
    get_logger("dncsort.verify")
    assert len(root.handlers) == 1
    assert root.propagate is False
    assert get_logger("dncsort.verify").parent is root


def test_verbose_toggles_debug():
    set_verbose(True)
    assert get_logger().level == logging.DEBUG
    set_verbose(False)
    assert get_logger().level == logging.INFO


def test_diagnostics_go_to_stderr():
    assert err_console().stderr
