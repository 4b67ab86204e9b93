from abc import ABC, abstractmethod
from logging import Logger
from typing import ClassVar

from synalg.core.models import SuiteResult
from synalg.utils.config import EngineConfig
from synalg.utils.logger import get_logger


class BaseSuite(ABC):
    """Abstract base class for named check suites."""

    name: ClassVar[str] = ""

    def __init__(self, config: EngineConfig, logger: Logger | None = None) -> None:
        self.config = config
        self.logger = logger or get_logger(f"synalg.checks.{self.name or 'suite'}")

    @abstractmethod
    def run(self) -> SuiteResult:
        """Run every check of the suite and summarize the outcome."""

    def result(self, checked: int, failures: list[str], **details: object) -> SuiteResult:
        passed = not failures
        self.logger.info("suite %s: %d checked, %d failures", self.name, checked, len(failures))
        return SuiteResult(suite=self.name, passed=passed, checked=checked, failures=failures, details=dict(details))
