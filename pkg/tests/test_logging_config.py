"""Tests for lightsout.logging_config module."""

import logging
import logging.handlers

from lightsout import logging_config
from lightsout.logging_config import configure_logging, get_logger


class TestGetLogger:
    def test_root_logger(self):
        assert get_logger().name == "lightsout"

    def test_sub_logger(self):
        assert get_logger("gf2").name == "lightsout.gf2"


class TestConfigureLogging:
    def teardown_method(self):
        configure_logging("WARNING", None)

    def test_console_level(self):
        configure_logging("DEBUG")
        assert logging_config.console_handler.level == logging.DEBUG

    def test_unknown_level_falls_back_to_warning(self):
        configure_logging("chatty")
        assert logging_config.console_handler.level == logging.WARNING

    def test_file_handler_writes(self, tmp_path):
        log_file = tmp_path / "logs" / "lightsout.log"
        configure_logging("WARNING", log_file)
        get_logger("test").debug("hello from the test")
        logging_config._file_handler.flush()

        assert "hello from the test" in log_file.read_text(encoding="utf-8")

    def test_file_handler_replaced_not_stacked(self, tmp_path):
        configure_logging("WARNING", tmp_path / "a.log")
        configure_logging("WARNING", tmp_path / "b.log")

        files = [
            h for h in logging_config.logger.handlers
            if isinstance(h, logging.handlers.RotatingFileHandler)
        ]
        assert len(files) == 1
        assert files[0].baseFilename.endswith("b.log")

    def test_file_handler_removed(self, tmp_path):
        configure_logging("WARNING", tmp_path / "a.log")
        configure_logging("WARNING", None)
        assert logging_config._file_handler is None
