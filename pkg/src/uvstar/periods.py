"""Calendar periods at monthly or quarterly frequency.

Periods are (year, sub-period index) pairs rather than timestamps, which
sidesteps day/timezone ambiguity for monthly data. Printed forms are
``1951Q1`` and ``2020M4``; parsing also accepts ``YYYY-MM`` and
``YYYY-MM-DD`` for monthly data.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator

from .errors import FrequencyMismatch


class Frequency(enum.Enum):
    MONTHLY = "monthly"
    QUARTERLY = "quarterly"

    @property
    def periods_per_year(self) -> int:
        return 12 if self is Frequency.MONTHLY else 4


_MONTHLY_RE = re.compile(r"^(\d{4})[-/](\d{1,2})(?:[-/]\d{1,2})?$")
_COMPACT_RE = re.compile(r"^(\d{4})([QM])(\d{1,2})$", re.IGNORECASE)


@total_ordering
@dataclass(frozen=True)
class Period:
    """One calendar month or quarter."""

    year: int
    index: int
    frequency: Frequency

    def __post_init__(self) -> None:
        n = self.frequency.periods_per_year
        if not 1 <= self.index <= n:
            raise ValueError(f"index {self.index} out of range for {self.frequency.value}")

    @staticmethod
    def month(year: int, month: int) -> "Period":
        return Period(year, month, Frequency.MONTHLY)

    @staticmethod
    def quarter(year: int, quarter: int) -> "Period":
        return Period(year, quarter, Frequency.QUARTERLY)

    @staticmethod
    def parse(text: str, frequency: Frequency | None = None) -> "Period":
        """Parse ``1951Q1``, ``2020M4``, ``2020-04`` or ``2020-04-01``."""
        text = text.strip()
        m = _COMPACT_RE.match(text)
        if m:
            year, kind, idx = int(m.group(1)), m.group(2).upper(), int(m.group(3))
            freq = Frequency.QUARTERLY if kind == "Q" else Frequency.MONTHLY
            if frequency is not None and freq is not frequency:
                raise FrequencyMismatch(f"{text!r} is not a {frequency.value} period")
            return Period(year, idx, freq)
        m = _MONTHLY_RE.match(text)
        if m:
            if frequency is Frequency.QUARTERLY:
                raise FrequencyMismatch(f"{text!r} is not a quarterly period")
            return Period(int(m.group(1)), int(m.group(2)), Frequency.MONTHLY)
        raise ValueError(f"unrecognized period {text!r}")

    @property
    def ordinal(self) -> int:
        """Position on this frequency's integer timeline."""
        return self.year * self.frequency.periods_per_year + (self.index - 1)

    def _check(self, other: "Period") -> None:
        if self.frequency is not other.frequency:
            raise FrequencyMismatch(
                f"cannot compare {self.frequency.value} with {other.frequency.value}"
            )

    def __lt__(self, other: "Period") -> bool:
        self._check(other)
        return self.ordinal < other.ordinal

    def shift(self, steps: int) -> "Period":
        n = self.frequency.periods_per_year
        o = self.ordinal + steps
        return Period(o // n, o % n + 1, self.frequency)

    def quarter_of(self) -> "Period":
        """Containing quarter (identity for quarterly periods)."""
        if self.frequency is Frequency.QUARTERLY:
            return self
        return Period.quarter(self.year, (self.index - 1) // 3 + 1)

    def year_fraction(self) -> float:
        """Midpoint of the period as a fractional year, for plotting."""
        n = self.frequency.periods_per_year
        return self.year + (self.index - 0.5) / n

    def __str__(self) -> str:
        tag = "Q" if self.frequency is Frequency.QUARTERLY else "M"
        return f"{self.year}{tag}{self.index}"


@dataclass(frozen=True)
class DateRange:
    """Inclusive period range at one frequency."""

    start: Period
    end: Period

    def __post_init__(self) -> None:
        if self.start.frequency is not self.end.frequency:
            raise FrequencyMismatch("range endpoints have different frequencies")
        if self.start > self.end:
            raise ValueError(f"range start {self.start} after end {self.end}")

    @staticmethod
    def parse(start: str, end: str, frequency: Frequency | None = None) -> "DateRange":
        return DateRange(Period.parse(start, frequency), Period.parse(end, frequency))

    @property
    def frequency(self) -> Frequency:
        return self.start.frequency

    def __contains__(self, p: Period) -> bool:
        if p.frequency is not self.frequency:
            return False
        return self.start.ordinal <= p.ordinal <= self.end.ordinal

    def overlaps(self, other: "DateRange") -> bool:
        if self.frequency is not other.frequency:
            return False
        return self.start.ordinal <= other.end.ordinal and other.start.ordinal <= self.end.ordinal

    def __len__(self) -> int:
        return self.end.ordinal - self.start.ordinal + 1

    def __iter__(self) -> Iterator[Period]:
        p = self.start
        while p <= self.end:
            yield p
            p = p.shift(1)

    def __str__(self) -> str:
        return f"{self.start}..{self.end}"
