"""Run statistics shared by the coloring algorithms."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

logger = logging.getLogger("halinstar")


@dataclass
class ColoringStats:
    """Counters the coloring drivers fill in as they run.

    A "finding" is any activation of a recovery fallback: the constructions
    are expected to succeed greedily, so every activation is surfaced both
    here and on the package logger.
    """

    algorithm: str = ""
    fallbacks: int = 0
    findings: list[str] = field(default_factory=list)
    cd_completions: int = 0
    min_cd_margin: int | None = None

    def finding(self, message: str) -> None:
        self.fallbacks += 1
        self.findings.append(message)
        logger.warning("fallback activated: %s", message)

    def margin(self, value: int) -> None:
        self.cd_completions += 1
        if self.min_cd_margin is None or value < self.min_cd_margin:
            self.min_cd_margin = value
