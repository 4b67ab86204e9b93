from collections.abc import Callable
from typing import TYPE_CHECKING, Optional

from synalg.core.exceptions import SuiteNotFoundError

if TYPE_CHECKING:
    from synalg.checks.base import BaseSuite


class SuiteRegistry:
    """Singleton registry for named check suites."""

    _instance: Optional["SuiteRegistry"] = None
    _suites: dict[str, type["BaseSuite"]] = {}

    def __new__(cls) -> "SuiteRegistry":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def register(self, name: str, suite_cls: type["BaseSuite"]) -> None:
        """Register a suite class under ``name``."""
        self._suites[name] = suite_cls

    def get(self, name: str) -> type["BaseSuite"]:
        """Retrieve a suite class by name."""
        if name not in self._suites:
            raise SuiteNotFoundError(
                f"Suite '{name}' not found. Known suites: {', '.join(self.list())}",
                component="checks",
                details={"suite": name},
            )
        return self._suites[name]

    def list(self) -> list[str]:
        """All registered suite names, sorted."""
        return sorted(self._suites)


def register_suite(name: str) -> Callable[[type["BaseSuite"]], type["BaseSuite"]]:
    """Class decorator for registering check suites."""

    def decorator(cls: type["BaseSuite"]) -> type["BaseSuite"]:
        cls.name = name
        SuiteRegistry().register(name, cls)
        return cls

    return decorator
