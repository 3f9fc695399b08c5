"""Recognition, perturbation and re-rendering of numeric and temporal targets.

Surfaces are parsed into exact rational values plus a format descriptor that
is sufficient to render any in-domain value back in the same shape (digits
stay digits, words stay words, capitalization and separators survive).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from fractions import Fraction
from random import Random

from .config import Config
from .errors import InsufficientCandidatesError, PerturbError, RenderError

WEEKDAYS = ("monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday")
MONTHS = (
    "january", "february", "march", "april", "may", "june",
    "july", "august", "september", "october", "november", "december",
)

_UNIT_WORDS = (
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
    "seventeen", "eighteen", "nineteen", "twenty",
)
_TENS_WORDS = {20: "twenty", 30: "thirty", 40: "forty", 50: "fifty",
               60: "sixty", 70: "seventy", 80: "eighty", 90: "ninety"}
_ORD_UNIT_WORDS = (
    None, "first", "second", "third", "fourth", "fifth", "sixth", "seventh",
    "eighth", "ninth", "tenth", "eleventh", "twelfth", "thirteenth",
    "fourteenth", "fifteenth", "sixteenth", "seventeenth", "eighteenth",
    "nineteenth", "twentieth",
)
_ORD_TENS_WORDS = {20: "twentieth", 30: "thirtieth", 40: "fortieth", 50: "fiftieth",
                   60: "sixtieth", 70: "seventieth", 80: "eightieth", 90: "ninetieth"}

_WORD_TO_CARDINAL = {w: i for i, w in enumerate(_UNIT_WORDS)}
_WORD_TO_CARDINAL.update({w: v for v, w in _TENS_WORDS.items()})
_WORD_TO_ORDINAL = {w: i for i, w in enumerate(_ORD_UNIT_WORDS) if w}
_WORD_TO_ORDINAL.update({w: v for v, w in _ORD_TENS_WORDS.items()})

# Quantifier words peeled off a token run and re-attached on render.
_PREFIX_QUANTIFIERS = {"by", "about", "around", "nearly", "almost", "over", "under"}
_SUFFIX_QUANTIFIERS = {"percent", "%", "years", "dollars", "times"}

_YEAR_RE = re.compile(r"^[12]\d{3}$")
_CARDINAL_RE = re.compile(r"^(0|[1-9]\d*)$")
_GROUPED_RE = re.compile(r"^\d{1,3}(?:,\d{3})+$")
_DECIMAL_RE = re.compile(r"^(0|[1-9]\d*)\.(\d+)$")
_ORDINAL_DIGIT_RE = re.compile(r"^([1-9]\d*)(st|nd|rd|th)$")
_CLOCK_RE = re.compile(r"^(\d{1,2}):([0-5]\d)$")


@dataclass(frozen=True)
class SurfaceFormat:
    """How a recognized value was written; enough to render it back."""

    family: str                 # digits | words | name | clock | range
    case: str = "lower"         # lower | title | upper
    grouped: bool = False       # thousands separators
    decimals: int = 0
    ordinal: bool = False
    hour_width: int = 1
    prefix: str = ""            # quantifier text kept verbatim, e.g. "by "
    suffix: str = ""
    joiner: str = ""            # range joiner, e.g. " to "
    parts: tuple["SurfaceFormat", ...] = ()
    endpoint_kind: str = ""     # kind shared by range endpoints


@dataclass(frozen=True)
class NumericValue:
    """A parsed number/time; ``value`` is a Fraction (pair of them for ranges)."""

    value: Fraction | tuple[Fraction, Fraction]
    kind: str
    surface_format: SurfaceFormat
    unit: str | None = None


@dataclass(frozen=True)
class PerturbStrategy:
    variant: str                              # unit_shift | local_random | global_random
    delta: int = 0                            # unit_shift
    window: int = 0                           # local_random
    bounds: tuple[int, int] = (0, 0)          # global_random

    def label(self) -> str:
        if self.variant == "unit_shift":
            return f"unit_shift({self.delta:+d})"
        if self.variant == "local_random":
            return f"local_random(w={self.window})"
        return f"global_random({self.bounds[0]}..{self.bounds[1]})"


def _case_of(word: str) -> str:
    alpha = [c for c in word if c.isalpha()]
    if alpha and all(c.isupper() for c in alpha) and len(alpha) > 1:
        return "upper"
    if alpha and alpha[0].isupper():
        return "title"
    return "lower"


def _apply_case(word: str, case: str) -> str:
    if case == "upper":
        return word.upper()
    if case == "title":
        return word[:1].upper() + word[1:]
    return word


def _parse_number_word(word: str) -> int | None:
    low = word.casefold()
    if low in _WORD_TO_CARDINAL:
        return _WORD_TO_CARDINAL[low]
    if "-" in low:
        tens, _, unit = low.partition("-")
        if tens in _TENS_WORDS.values() and unit in _WORD_TO_CARDINAL:
            u = _WORD_TO_CARDINAL[unit]
            t = next(v for v, w in _TENS_WORDS.items() if w == tens)
            if 1 <= u <= 9:
                return t + u
    return None


def _parse_ordinal_word(word: str) -> int | None:
    low = word.casefold()
    if low in _WORD_TO_ORDINAL:
        return _WORD_TO_ORDINAL[low]
    if "-" in low:
        tens, _, unit = low.partition("-")
        if tens in _TENS_WORDS.values() and unit in _WORD_TO_ORDINAL:
            u = _WORD_TO_ORDINAL[unit]
            t = next(v for v, w in _TENS_WORDS.items() if w == tens)
            if 1 <= u <= 9:
                return t + u
    return None


def _render_number_word(n: int) -> str:
    if 0 <= n <= 20:
        return _UNIT_WORDS[n]
    if 21 <= n <= 99:
        tens, unit = divmod(n, 10)
        if unit == 0:
            return _TENS_WORDS[tens * 10]
        return f"{_TENS_WORDS[tens * 10]}-{_UNIT_WORDS[unit]}"
    raise RenderError(f"no word form for cardinal {n}")


def _render_ordinal_word(n: int) -> str:
    if 1 <= n <= 20:
        return _ORD_UNIT_WORDS[n]
    if 21 <= n <= 99:
        tens, unit = divmod(n, 10)
        if unit == 0:
            return _ORD_TENS_WORDS[tens * 10]
        return f"{_TENS_WORDS[tens * 10]}-{_ORD_UNIT_WORDS[unit]}"
    raise RenderError(f"no word form for ordinal {n}")


def _ordinal_suffix(n: int) -> str:
    if 10 <= n % 100 <= 13:
        return "th"
    return {1: "st", 2: "nd", 3: "rd"}.get(n % 10, "th")


def _recognize_single(surface: str) -> NumericValue | None:
    """Recognize one token (no quantifier affixes, no ranges)."""
    s = surface.strip()
    if not s:
        return None
    low = s.casefold()
    case = _case_of(s)

    # Day and month names; a fully lowercase surface is not accepted so that
    # the modal "may" and the verb "march" are never misread.
    if low in WEEKDAYS and case != "lower":
        fmt = SurfaceFormat(family="name", case=case)
        return NumericValue(Fraction(WEEKDAYS.index(low) + 1), "weekday", fmt)
    if low in MONTHS and case != "lower":
        fmt = SurfaceFormat(family="name", case=case)
        return NumericValue(Fraction(MONTHS.index(low) + 1), "month", fmt)

    m = _CLOCK_RE.match(s)
    if m:
        hh, mm = int(m.group(1)), int(m.group(2))
        if hh <= 23:
            fmt = SurfaceFormat(family="clock", hour_width=len(m.group(1)))
            return NumericValue(Fraction(hh * 60 + mm, 60), "time-of-day", fmt)

    m = _ORDINAL_DIGIT_RE.match(s)
    if m:
        n = int(m.group(1))
        if m.group(2) == _ordinal_suffix(n):
            fmt = SurfaceFormat(family="digits", ordinal=True)
            return NumericValue(Fraction(n), "ordinal", fmt)
        return None

    if _YEAR_RE.match(s):
        return NumericValue(Fraction(int(s)), "year", SurfaceFormat(family="digits"))
    if _GROUPED_RE.match(s):
        n = int(s.replace(",", ""))
        return NumericValue(Fraction(n), "cardinal", SurfaceFormat(family="digits", grouped=True))
    if _CARDINAL_RE.match(s):
        return NumericValue(Fraction(int(s)), "cardinal", SurfaceFormat(family="digits"))
    m = _DECIMAL_RE.match(s)
    if m:
        decimals = len(m.group(2))
        value = Fraction(int(m.group(1) + m.group(2)), 10 ** decimals)
        return NumericValue(value, "cardinal", SurfaceFormat(family="digits", decimals=decimals))

    n = _parse_number_word(s)
    if n is not None:
        fmt = SurfaceFormat(family="words", case=case)
        return NumericValue(Fraction(n), "word-cardinal", fmt)
    n = _parse_ordinal_word(s)
    if n is not None:
        fmt = SurfaceFormat(family="words", case=case, ordinal=True)
        return NumericValue(Fraction(n), "word-ordinal", fmt)
    return None


_RANGE_KINDS = {"cardinal", "year", "time-of-day"}


def _recognize_range(surface: str) -> NumericValue | None:
    s = surface.strip()
    candidates: list[tuple[str, str, str]] = []
    m = re.match(r"^(.+?)\s+(to)\s+(.+)$", s, re.IGNORECASE)
    if m:
        candidates.append((m.group(1), f" {m.group(2)} ", m.group(3)))
    for dash in ("–", "—"):
        if dash in s:
            left, _, right = s.partition(dash)
            candidates.append((left.strip(), dash, right.strip()))
    m = re.match(r"^([^\s-]+)\s*(-)\s*([^\s-]+)$", s)
    if m and any(c.isdigit() for c in m.group(1)):
        candidates.append((m.group(1), m.group(2), m.group(3)))
    for left, joiner, right in candidates:
        lo = _recognize_single(left)
        hi = _recognize_single(right)
        if lo is None or hi is None:
            continue
        if lo.kind != hi.kind or lo.kind not in _RANGE_KINDS:
            continue
        if lo.value > hi.value:
            continue
        fmt = SurfaceFormat(
            family="range", joiner=joiner,
            parts=(lo.surface_format, hi.surface_format), endpoint_kind=lo.kind,
        )
        return NumericValue((lo.value, hi.value), "range", fmt)
    return None


def recognize_numeric(surface: str) -> NumericValue | None:
    """Parse a token or contiguous token run; None means "not a type-1 target"."""
    s = surface.strip()
    if not s:
        return None
    hit = _recognize_single(s) or _recognize_range(s)
    if hit:
        return hit
    # Peel at most one quantifier word from each end.
    parts = s.split()
    if len(parts) < 2:
        return None
    prefix = suffix = ""
    units: list[str] = []
    if parts[0].casefold() in _PREFIX_QUANTIFIERS:
        prefix = parts[0]
        units.append(parts[0].casefold())
        parts = parts[1:]
    if parts and parts[-1].casefold() in _SUFFIX_QUANTIFIERS:
        suffix = parts[-1]
        units.append(parts[-1].casefold())
        parts = parts[:-1]
    if not units or not parts:
        return None
    core = " ".join(parts)
    inner = _recognize_single(core) or _recognize_range(core)
    if inner is None:
        return None
    fmt = replace(
        inner.surface_format,
        prefix=f"{prefix} " if prefix else "",
        suffix=f" {suffix}" if suffix else "",
    )
    return NumericValue(inner.value, inner.kind, fmt, unit=" ".join(units))


def _render_scalar(value: Fraction, kind: str, fmt: SurfaceFormat) -> str:
    if kind == "weekday":
        if value.denominator != 1 or not 1 <= value <= 7:
            raise RenderError(f"weekday out of range: {value}")
        return _apply_case(WEEKDAYS[int(value) - 1], fmt.case)
    if kind == "month":
        if value.denominator != 1 or not 1 <= value <= 12:
            raise RenderError(f"month out of range: {value}")
        return _apply_case(MONTHS[int(value) - 1], fmt.case)
    if kind == "time-of-day":
        total = value * 60
        if total.denominator != 1 or not 0 <= value < 24:
            raise RenderError(f"time of day out of range: {value}")
        hh, mm = divmod(int(total), 60)
        return f"{hh:0{fmt.hour_width}d}:{mm:02d}"
    if kind in ("word-cardinal", "word-ordinal"):
        if value.denominator != 1:
            raise RenderError(f"no word form for non-integer {value}")
        n = int(value)
        word = _render_ordinal_word(n) if kind == "word-ordinal" else _render_number_word(n)
        return _apply_case(word, fmt.case)
    if kind == "ordinal":
        if value.denominator != 1 or value < 1:
            raise RenderError(f"ordinal out of range: {value}")
        n = int(value)
        return f"{n}{_ordinal_suffix(n)}"
    if kind in ("year", "cardinal"):
        if value < 0:
            raise RenderError(f"negative value not renderable: {value}")
        if kind == "year":
            if value.denominator != 1 or not 1000 <= value <= 2999:
                raise RenderError(f"year out of range: {value}")
            return str(int(value))
        if fmt.decimals:
            scaled = value * 10 ** fmt.decimals
            if scaled.denominator != 1:
                raise RenderError(f"value {value} does not fit {fmt.decimals} decimals")
            text = str(int(scaled)).rjust(fmt.decimals + 1, "0")
            return f"{text[:-fmt.decimals]}.{text[-fmt.decimals:]}"
        if value.denominator != 1:
            raise RenderError(f"non-integer cardinal without decimal format: {value}")
        if fmt.grouped:
            return f"{int(value):,d}"
        return str(int(value))
    raise RenderError(f"unknown kind {kind!r}")


def render(v: NumericValue) -> str:
    """Render a value back into its original surface shape."""
    if v.kind == "range":
        lo, hi = v.value
        body = (
            _render_scalar(lo, v.surface_format.endpoint_kind, v.surface_format.parts[0])
            + v.surface_format.joiner
            + _render_scalar(hi, v.surface_format.endpoint_kind, v.surface_format.parts[1])
        )
    else:
        body = _render_scalar(v.value, v.kind, v.surface_format)
    return f"{v.surface_format.prefix}{body}{v.surface_format.suffix}"


# Static renderable domains, used to reject perturbation results early.
def _in_domain(kind: str, value: Fraction) -> bool:
    if kind == "weekday":
        return value.denominator == 1 and 1 <= value <= 7
    if kind == "month":
        return value.denominator == 1 and 1 <= value <= 12
    if kind == "time-of-day":
        return 0 <= value < 24 and (value * 60).denominator == 1
    if kind == "year":
        return value.denominator == 1 and 1000 <= value <= 2999
    if kind == "word-cardinal":
        return value.denominator == 1 and 0 <= value <= 99
    if kind == "word-ordinal":
        return value.denominator == 1 and 1 <= value <= 99
    if kind == "ordinal":
        return value.denominator == 1 and value >= 1
    if kind == "cardinal":
        return value >= 0
    return False


_MODULUS = {"weekday": 7, "month": 12}


def _perturb_scalar(value: Fraction, kind: str, strategy: PerturbStrategy, rng: Random) -> Fraction:
    if strategy.variant == "unit_shift":
        delta = strategy.delta
        if delta == 0:
            raise PerturbError("unit shift of zero would not change the value")
        if kind in _MODULUS:
            mod = _MODULUS[kind]
            shifted = Fraction((int(value) - 1 + delta) % mod + 1)
        else:
            shifted = value + delta
        if shifted == value:
            raise PerturbError(f"shift {delta:+d} wraps onto the original value")
        if not _in_domain(kind, shifted):
            raise PerturbError(f"shift {delta:+d} leaves the {kind} domain")
        return shifted
    if strategy.variant == "local_random":
        w = strategy.window
        feasible = [value + k for k in range(-w, w + 1)
                    if k != 0 and _in_domain(kind, value + k)]
        if not feasible:
            raise PerturbError(f"no {kind} values within window {w}")
        return rng.choice(feasible)
    if strategy.variant == "global_random":
        lo, hi = strategy.bounds
        frac = value - int(value)
        feasible = [Fraction(k) + frac for k in range(lo, hi + 1)
                    if Fraction(k) + frac != value and _in_domain(kind, Fraction(k) + frac)]
        if not feasible:
            raise PerturbError(f"no {kind} values in {lo}..{hi} other than the original")
        return rng.choice(feasible)
    raise PerturbError(f"unknown strategy variant {strategy.variant!r}")


def perturb(v: NumericValue, strategy: PerturbStrategy, rng: Random) -> NumericValue:
    """Return a same-kind value with a different numeric content."""
    if v.kind == "range":
        lo, hi = v.value
        idx = rng.randrange(2)
        kind = v.surface_format.endpoint_kind
        if idx == 0:
            lo = _perturb_scalar(lo, kind, strategy, rng)
        else:
            hi = _perturb_scalar(hi, kind, strategy, rng)
        if lo > hi:
            raise PerturbError("perturbed endpoint inverted the range")
        return replace(v, value=(lo, hi))
    new_value = _perturb_scalar(v.value, v.kind, strategy, rng)
    return replace(v, value=new_value)


_UNIT_SHIFT_DELTAS = (-2, -1, 1, 2)
_RETRIES_PER_DISTRACTOR = 32


def _strategy_for(variant: str, kind_key: str, cfg: Config, rng: Random) -> PerturbStrategy:
    if variant == "unit_shift":
        return PerturbStrategy("unit_shift", delta=rng.choice(_UNIT_SHIFT_DELTAS))
    if variant == "local_random":
        return PerturbStrategy("local_random", window=cfg.local_windows[kind_key])
    return PerturbStrategy("global_random", bounds=tuple(cfg.global_domains[kind_key]))


def numeric_distractor_draws(
    target, n: int, cfg: Config, rng: Random
) -> list[tuple[str, str]]:
    """Draw ``n`` distinct rendered perturbations with strategy labels.

    ``target`` is a TargetWord or a bare surface string.
    """
    surface = getattr(target, "surface", target)
    v = recognize_numeric(surface)
    if v is None:
        raise ValueError(f"surface {surface!r} is not a recognized numeric target")
    if n < 1:
        raise ValueError("n must be >= 1")
    kind_key = v.surface_format.endpoint_kind if v.kind == "range" else v.kind
    results: list[tuple[str, str]] = []
    seen = {surface.strip().casefold()}
    for _ in range(n):
        for _attempt in range(_RETRIES_PER_DISTRACTOR):
            variant = rng.choice(cfg.strategies)
            strategy = _strategy_for(variant, kind_key, cfg, rng)
            try:
                text = render(perturb(v, strategy, rng))
            except (PerturbError, RenderError):
                continue
            if text.casefold() in seen:
                continue
            seen.add(text.casefold())
            results.append((text, strategy.label()))
            break
        else:
            raise InsufficientCandidatesError(
                f"only {len(results)} distinct perturbations of {surface!r} found, needed {n}",
                found=[t for t, _ in results],
            )
    return results


def generate_numeric_distractors(target, n: int, cfg: Config, rng: Random) -> list[str]:
    """``n`` pairwise-distinct rendered texts, each differing from the target surface."""
    return [text for text, _ in numeric_distractor_draws(target, n, cfg, rng)]
