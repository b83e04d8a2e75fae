"""Cell-level text codecs: numeric literals, calendar dates, durations.

These are shared by the dataset summary and the feature encoder. All
functions raise ValueError on malformed text; callers attach row/column
context.
"""

import re
from datetime import date

_EPOCH = date(1970, 1, 1)

# Integer/decimal literals with optional exponent. Deliberately narrower than
# float(): no nan/inf, no underscores, no locale separators.
_NUMERIC_RE = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_DATE_RE = re.compile(r"\d{4}-\d{2}-\d{2}")
_ISO_DURATION_RE = re.compile(r"PT(?:(\d+)H)?(?:(\d+)M)?(?:(\d+)S)?")
_CLOCK_RE = re.compile(r"(\d+):([0-5]?\d):([0-5]?\d)")


def parse_numeric(text: str) -> float:
    """Parse an integer or decimal literal (scientific notation allowed)."""
    stripped = text.strip()
    if not _NUMERIC_RE.fullmatch(stripped):
        raise ValueError(f"not a numeric literal: {text!r}")
    return float(stripped)


def try_parse_numeric(text: str):
    """float value, or None if the cell is not a numeric literal."""
    stripped = text.strip()
    if not _NUMERIC_RE.fullmatch(stripped):
        return None
    return float(stripped)


def parse_date_days(text: str) -> int:
    """YYYY-MM-DD -> whole days since 1970-01-01 (may be negative)."""
    stripped = text.strip()
    if not _DATE_RE.fullmatch(stripped):
        raise ValueError(f"not a YYYY-MM-DD date: {text!r}")
    try:
        parsed = date.fromisoformat(stripped)
    except ValueError as exc:
        raise ValueError(f"not a valid calendar date: {text!r}") from exc
    return (parsed - _EPOCH).days


def parse_duration(text: str) -> int:
    """Duration text -> total seconds.

    Accepts ISO-8601 `PT[#H][#M][#S]` (at least one component) and clock
    form `HH:MM:SS`.
    """
    stripped = text.strip()
    match = _ISO_DURATION_RE.fullmatch(stripped)
    if match and any(g is not None for g in match.groups()):
        hours, minutes, seconds = (int(g) if g is not None else 0 for g in match.groups())
        return hours * 3600 + minutes * 60 + seconds
    match = _CLOCK_RE.fullmatch(stripped)
    if match:
        hours, minutes, seconds = (int(g) for g in match.groups())
        return hours * 3600 + minutes * 60 + seconds
    raise ValueError(f"not a recognized duration: {text!r}")


def format_duration_iso(total_seconds: int) -> str:
    """Total seconds -> compact ISO-8601 duration (PT45S, PT15M33S, PT1H2M3S)."""
    if total_seconds < 0:
        raise ValueError("duration must be nonnegative")
    hours, rest = divmod(int(total_seconds), 3600)
    minutes, seconds = divmod(rest, 60)
    parts = []
    if hours:
        parts.append(f"{hours}H")
    if minutes:
        parts.append(f"{minutes}M")
    if seconds or not parts:
        parts.append(f"{seconds}S")
    return "PT" + "".join(parts)
