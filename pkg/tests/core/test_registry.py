import pytest

import synalg.checks  # noqa: F401
from synalg.checks.base import BaseSuite
from synalg.core.exceptions import SuiteNotFoundError
from synalg.core.registry import SuiteRegistry, register_suite
from synalg.utils.config import EngineConfig


class MockSuite(BaseSuite):
    def run(self):
        return self.result(1, [])


def test_registry_registration():
    registry = SuiteRegistry()
    registry.register("mock", MockSuite)

    assert registry.get("mock") == MockSuite
    assert "mock" in registry.list()


def test_register_decorator_names_the_suite():
    @register_suite("decorated")
    class DecoratedSuite(MockSuite):
        pass

    assert SuiteRegistry().get("decorated") == DecoratedSuite
    assert DecoratedSuite.name == "decorated"
    result = DecoratedSuite(EngineConfig()).run()
    assert result.suite == "decorated"
    assert result.passed


def test_registry_not_found():
    with pytest.raises(SuiteNotFoundError, match="Known suites"):
        SuiteRegistry().get("non_existent")


def test_builtin_suites_registered():
    names = SuiteRegistry().list()
    for name in ["ex52", "ex512", "ex517", "oracle", "prop34", "prop51", "lemma513", "omega"]:
        assert name in names


def test_singleton():
    assert SuiteRegistry() is SuiteRegistry()
