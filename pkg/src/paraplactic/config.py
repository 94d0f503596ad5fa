import dataclasses
from fractions import Fraction
from typing import Literal, Optional, Union

MAX_CAP = 12
OutputFormat = Literal["json", "text"]


class ConfigError(ValueError):
    """Invalid run configuration."""


def parse_q0(value: Union[str, int, Fraction]) -> Fraction:
    """Parse a rational specialization such as ``2`` or ``3/2``."""
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        msg = f"Cannot parse q0={value!r} as a rational number"
        raise ConfigError(msg) from None


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Parameters shared by every subcommand."""

    m: int = 1
    """Number of even letters / variables."""
    n: int = 1
    """Number of odd letters / variables."""
    p: Optional[int] = None
    """Order of the parastatistics, if the command uses one."""
    cap: int = 6
    """Truncation degree, at most MAX_CAP."""
    q0: Fraction = Fraction(2)
    """Rational specialization of q for eigenvalue checks."""
    format: OutputFormat = "json"
    """Output rendering."""
    seed: int = 0
    """Seed for randomized law checks."""
    only: Optional[tuple[str, ...]] = None
    """Check groups to run in verify-all; None runs all."""

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            msg = f"m and n must be nonnegative, got m={self.m}, n={self.n}"
            raise ConfigError(msg)
        if not 0 <= self.cap <= MAX_CAP:
            msg = f"cap must lie in 0..{MAX_CAP}, got {self.cap}"
            raise ConfigError(msg)
        if self.p is not None and self.p < 0:
            msg = f"p must be nonnegative, got {self.p}"
            raise ConfigError(msg)
        object.__setattr__(self, "q0", parse_q0(self.q0))
        if self.q0 in (0, 1, -1):
            msg = f"q0 must not be 0 or +-1, got {self.q0}"
            raise ConfigError(msg)
        if self.format not in ("json", "text"):
            msg = f"Unknown output format {self.format!r}"
            raise ConfigError(msg)
        if self.only is not None:
            object.__setattr__(self, "only", tuple(self.only))
