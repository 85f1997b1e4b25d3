from __future__ import annotations

from dataclasses import dataclass


@dataclass
class StepCounter:
    """Elementary-step tally for the most recent public cache operation.

    One step is one link read or write, one set mutation, or one table
    probe. Public operations reset the counter on entry, so after a call
    returns (or raises) ``count`` holds that call's cost.
    """

    count: int = 0

    def reset(self) -> None:
        self.count = 0

    def add(self, n: int = 1) -> None:
        self.count += n
