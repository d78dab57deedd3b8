"""The machine-readable report every command returns, plus shared argument helpers."""

import argparse
import json
import time
from contextlib import contextmanager
from typing import Any

from pydantic import BaseModel, Field

from src import __version__


class Report(BaseModel):
    """Verdicts decide the exit code; everything else is informational."""

    command: str
    version: str = __version__
    config: dict[str, Any] = Field(default_factory=dict)
    verdicts: dict[str, bool] = Field(default_factory=dict)
    properties: dict[str, Any] = Field(default_factory=dict)
    witnesses: dict[str, Any] = Field(default_factory=dict)
    statistics: dict[str, Any] = Field(default_factory=dict)
    timings: dict[str, float] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self, include_timings: bool = False) -> str:
        data = self.model_dump(exclude=None if include_timings else {"timings"})
        return json.dumps(data, sort_keys=True, indent=2) + "\n"

    @contextmanager
    def timed(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = round(time.perf_counter() - start, 6)


def common_options() -> argparse.ArgumentParser:
    """Flags accepted by every subcommand; None means 'use the configured default'."""
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("global options")
    group.add_argument("--seed", type=int, default=None, help="PRNG seed (default: POLYMATROID_SEED or 1)")
    group.add_argument("--jobs", type=int, default=None, help="Worker processes for corpus runs")
    group.add_argument("--output", default=None, help="Write the JSON report here instead of stdout")
    group.add_argument("--d-max", dest="d_max", type=int, default=None, help="Fiber truncation degree")
    group.add_argument("--fiber-cap", dest="fiber_cap", type=int, default=None, help="Largest fiber enumerated")
    group.add_argument("--step-cap", dest="step_cap", type=int, default=None, help="Buchberger reduction cap")
    group.add_argument("--timings", action="store_true", help="Include timings in the JSON report")
    group.add_argument("--log-level", dest="log_level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    return parent


def resolve(value, default):
    return value if value is not None else default


def binomial_list(binomials, presentation) -> list[str]:
    from src.utils.formatters import format_binomial

    return [format_binomial(b, presentation) for b in sorted(binomials)]
