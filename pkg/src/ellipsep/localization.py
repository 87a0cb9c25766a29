"""Guaranteed localization from emitter-object-receiver path lengths.

A sound emitted at sonar ``e`` and received at sonar ``r`` after bouncing on
the object at ``x`` travels ``|x - e| + |x - r|``. A measured interval
``[lo, hi]`` on that length confines ``x`` to the elliptical annulus between
the ellipses with foci ``e, r`` and distance sums ``lo`` and ``hi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Mapping

from .interval import Box
from .paver import Paving, pave
from .quadric import Foci, from_foci
from .separators import (EllipseSeparator, FwdBwdSeparator, Separator,
                         sep_complement, sep_intersect)


class ConfigError(ValueError):
    """Malformed localization configuration."""


@dataclass(frozen=True)
class Measurement:
    emitter: str
    receiver: str
    lo: float
    hi: float

    @property
    def name(self) -> str:
        return f"{self.emitter}-{self.receiver}"


@dataclass(frozen=True)
class LocalizationConfig:
    sonars: dict[str, tuple[float, float]]
    measurements: tuple[Measurement, ...]
    frame: Box
    eps: float

    def __post_init__(self) -> None:
        if not self.measurements:
            raise ConfigError("at least one measurement is required")
        for m in self.measurements:
            for name in (m.emitter, m.receiver):
                if name not in self.sonars:
                    raise ConfigError(f"unknown sonar {name!r}")
            if not m.lo <= m.hi:
                raise ConfigError(f"measurement {m.name}: empty interval [{m.lo}, {m.hi}]")
        if not self.eps > 0:
            raise ConfigError("eps must be positive")
        if len(self.frame) != 2 or self.frame.is_empty:
            raise ConfigError("frame must be a non-empty 2-dimensional box")

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> LocalizationConfig:
        try:
            sonars = {str(k): (float(v[0]), float(v[1])) for k, v in d["sonars"].items()}
            ms = tuple(Measurement(str(m["emitter"]), str(m["receiver"]),
                                   float(m["interval"][0]), float(m["interval"][1]))
                       for m in d["measurements"])
            frame = Box([(float(lo), float(hi)) for lo, hi in d["frame"]])
            eps = float(d["eps"])
        except (KeyError, TypeError, IndexError, ValueError) as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(f"malformed localization config: {e}") from e
        return cls(sonars, ms, frame, eps)

    def to_dict(self) -> dict[str, Any]:
        return {
            "sonars": {k: list(v) for k, v in self.sonars.items()},
            "measurements": [{"emitter": m.emitter, "receiver": m.receiver,
                              "interval": [m.lo, m.hi]} for m in self.measurements],
            "frame": self.frame.as_list(),
            "eps": self.eps,
        }


# three sonars, emitter a heard by b and c
SONAR_EXAMPLE = {
    "sonars": {"a": [-2.0, 1.0], "b": [-2.0, -1.0], "c": [3.0, 2.0]},
    "measurements": [
        {"emitter": "a", "receiver": "b", "interval": [4.0, 6.0]},
        {"emitter": "a", "receiver": "c", "interval": [7.0, 9.0]},
    ],
    "frame": [[-7.0, 7.0], [-7.0, 7.0]],
    "eps": 0.1,
}


def measurement_separator(config: LocalizationConfig, m: Measurement,
                          baseline: str | None = None) -> Separator:
    """Separator for ``lo <= |x-e| + |x-r| <= hi``.

    The lower bound is dropped when it cannot exceed the focal distance,
    since every point then satisfies it.
    """
    e, r = config.sonars[m.emitter], config.sonars[m.receiver]
    outer = _ellipse_sep(from_foci(Foci(e, r, m.hi)), baseline, f"{m.name} <= {m.hi}")
    if m.lo <= math.dist(e, r):
        return outer
    inner = _ellipse_sep(from_foci(Foci(e, r, m.lo)), baseline, f"{m.name} < {m.lo}")
    return sep_intersect([outer, sep_complement(inner)])


def _ellipse_sep(q, baseline: str | None, label: str) -> Separator:
    if baseline == "fwdbwd":
        s = FwdBwdSeparator(q)
    elif baseline is None:
        s = EllipseSeparator(q)
    else:
        raise ValueError(f"unknown baseline {baseline!r}")
    s.label = label
    return s


def localization_separator(config: LocalizationConfig, baseline: str | None = None) -> Separator:
    return sep_intersect([measurement_separator(config, m, baseline) for m in config.measurements])


def localize(config: LocalizationConfig, baseline: str | None = None
             ) -> tuple[Paving, list[tuple[Measurement, Paving]]]:
    """Pave the frame for all measurements jointly and for each one alone."""
    per = [(m, pave(measurement_separator(config, m, baseline), config.frame, config.eps))
           for m in config.measurements]
    combined = pave(localization_separator(config, baseline), config.frame, config.eps)
    return combined, per
