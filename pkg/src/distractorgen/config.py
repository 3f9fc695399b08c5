"""Pipeline configuration with validated defaults."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError

# Per-kind window radius for local random perturbation, in the kind's natural
# unit (years, counts, hours, ...).
DEFAULT_LOCAL_WINDOWS: dict[str, int] = {
    "year": 10,
    "cardinal": 5,
    "ordinal": 5,
    "word-cardinal": 5,
    "word-ordinal": 5,
    "time-of-day": 2,
    "weekday": 2,
    "month": 2,
}

# Inclusive bounds for global random perturbation.
DEFAULT_GLOBAL_DOMAINS: dict[str, tuple[int, int]] = {
    "year": (1900, 2100),
    "cardinal": (0, 100),
    "ordinal": (1, 100),
    "word-cardinal": (0, 99),
    "word-ordinal": (1, 99),
    "time-of-day": (0, 23),
    "weekday": (1, 7),
    "month": (1, 12),
}

ALL_STRATEGIES = ("unit_shift", "local_random", "global_random")


@dataclass(frozen=True)
class Config:
    """Tunable knobs for candidate selection, scoring and perturbation."""

    sim_lo: float = 0.6
    sim_hi: float = 0.85
    wup_fallback: float = 0.1
    relax_step: float = 0.05
    relax_max_rounds: int = 3
    sd_inverted: bool = False
    seed: int | None = None
    strategies: tuple[str, ...] = ALL_STRATEGIES
    local_windows: dict[str, int] = field(default_factory=lambda: dict(DEFAULT_LOCAL_WINDOWS))
    global_domains: dict[str, tuple[int, int]] = field(
        default_factory=lambda: {k: tuple(v) for k, v in DEFAULT_GLOBAL_DOMAINS.items()}
    )

    def validate(self) -> None:
        if not (0.0 <= self.sim_lo < self.sim_hi <= 1.0):
            raise ConfigError("sim_lo", f"need 0 <= sim_lo < sim_hi <= 1, got [{self.sim_lo}, {self.sim_hi}]")
        if not (0.0 < self.wup_fallback < 1.0):
            raise ConfigError("wup_fallback", f"must lie in (0, 1), got {self.wup_fallback}")
        if self.relax_step < 0.0:
            raise ConfigError("relax_step", f"must be >= 0, got {self.relax_step}")
        if self.relax_max_rounds < 0:
            raise ConfigError("relax_max_rounds", f"must be >= 0, got {self.relax_max_rounds}")
        if not self.strategies:
            raise ConfigError("strategies", "at least one strategy must be enabled")
        for name in self.strategies:
            if name not in ALL_STRATEGIES:
                raise ConfigError("strategies", f"unknown strategy {name!r}")
        for kind, w in self.local_windows.items():
            if kind not in DEFAULT_LOCAL_WINDOWS:
                raise ConfigError("local_windows", f"unknown kind {kind!r}")
            if w < 1:
                raise ConfigError("local_windows", f"window for {kind!r} must be >= 1, got {w}")
        for kind, bounds in self.global_domains.items():
            if kind not in DEFAULT_GLOBAL_DOMAINS:
                raise ConfigError("global_domains", f"unknown kind {kind!r}")
            lo, hi = bounds
            if lo > hi:
                raise ConfigError("global_domains", f"bounds for {kind!r} are empty: ({lo}, {hi})")

    def relaxed(self, rounds: int) -> tuple[float, float]:
        """Similarity interval after ``rounds`` symmetric widenings, clamped to [0, 1]."""
        lo = max(0.0, self.sim_lo - rounds * self.relax_step)
        hi = min(1.0, self.sim_hi + rounds * self.relax_step)
        return lo, hi
