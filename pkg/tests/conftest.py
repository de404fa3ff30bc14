import os
import sys

import pytest

from tweetsent.textprep import bundled_path

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running sweep, opt in with TWEETSENT_SLOW=1")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("TWEETSENT_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="set TWEETSENT_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def sample_csv():
    return str(bundled_path("sample_tweets.csv"))


@pytest.fixture
def write_csv(tmp_path):
    def _write(text, name="in.csv"):
        path = tmp_path / name
        path.write_bytes(text.encode("utf-8") if isinstance(text, str) else text)
        return str(path)

    return _write


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
