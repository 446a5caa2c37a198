"""Wall-clock / node-count budgets for the enumeration-heavy operations."""

from __future__ import annotations

import time


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration blows past its budget.

    Carries partial-progress information so callers can report how far the
    computation got before giving up.
    """

    def __init__(self, message: str, *, nodes: int = 0, elapsed: float = 0.0):
        super().__init__(message)
        self.nodes = nodes
        self.elapsed = elapsed


class Budget:
    """A combined wall-clock and node-count budget.

    Either limit may be None (unlimited).  `charge(n)` is called from inner
    loops; it checks the clock only every few thousand nodes to keep the
    overhead negligible.
    """

    __slots__ = ("max_seconds", "max_nodes", "nodes", "_start", "_next_clock_check")

    CLOCK_STRIDE = 8192

    def __init__(self, max_seconds: float | None = None, max_nodes: int | None = None):
        if max_seconds is not None and max_seconds <= 0:
            raise ValueError("max_seconds must be positive")
        if max_nodes is not None and max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        self.max_seconds = max_seconds
        self.max_nodes = max_nodes
        self.nodes = 0
        self._start = time.monotonic()
        self._next_clock_check = self.CLOCK_STRIDE

    def elapsed(self) -> float:
        return time.monotonic() - self._start

    def charge(self, n: int = 1) -> None:
        self.nodes += n
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(
                f"node budget exhausted ({self.nodes} > {self.max_nodes})",
                nodes=self.nodes, elapsed=self.elapsed())
        if self.max_seconds is not None and self.nodes >= self._next_clock_check:
            self._next_clock_check = self.nodes + self.CLOCK_STRIDE
            if self.elapsed() > self.max_seconds:
                raise BudgetExceeded(
                    f"time budget exhausted ({self.elapsed():.1f}s > {self.max_seconds}s)",
                    nodes=self.nodes, elapsed=self.elapsed())
