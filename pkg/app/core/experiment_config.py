"""
Plain-text key=value experiment files for `bench --config`.

    # hypercubes at desk scale
    suite = hypercubes
    sizes = 5, 6, 7
    algorithms = greedy, a1, hybrid-a1
    emit = markdown

'#' starts a comment, blank lines are skipped and every key may appear once.
"""

from typing import Callable, Dict, Iterable, List, Optional, TextIO

from core.errors import ConfigError, InputError
from core.lp_engine import HighsEngine
from core.models import (
    AlgorithmName, AlgorithmSpec, GraphFormat, LowerBoundMode, OutputFormat, TiePolicy, VariantTag
)


def _enum(enum_cls) -> Callable[[str], object]:
    def parse(text: str):
        try:
            return enum_cls(text.lower())
        except ValueError:
            choices = ", ".join(member.value for member in enum_cls)
            raise ValueError(f"expected one of {choices}") from None
    return parse


def _int(minimum: int) -> Callable[[str], int]:
    def parse(text: str) -> int:
        value = int(text)
        if value < minimum:
            raise ValueError(f"must be >= {minimum}")
        return value
    return parse


def _fraction(low_open: bool, high_open: bool) -> Callable[[str], float]:
    def parse(text: str) -> float:
        value = float(text)
        too_low = value <= 0 if low_open else value < 0
        too_high = value >= 1 if high_open else value > 1
        if too_low or too_high:
            interval = f"{'(' if low_open else '['}0, 1{')' if high_open else ']'}"
            raise ValueError(f"must lie in {interval}")
        return value
    return parse


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise ValueError("must be positive")
    return value


def _bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError("expected true or false")


def _lp_method(text: str) -> str:
    if text not in HighsEngine.METHODS:
        raise ValueError(f"expected one of {', '.join(HighsEngine.METHODS)}")
    return text


def _int_list(text: str) -> List[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _str(text: str) -> str:
    return text


CONFIG_KEYS: Dict[str, Callable[[str], object]] = {
    "suite": _str,
    "input": _str,
    "format": GraphFormat.parse,
    "family": _str,
    "family_k": _int(1),
    "sizes": _int_list,
    "algorithms": _str,
    "alpha": _fraction(False, False),
    "variant": _enum(VariantTag),
    "arboricity": _int(1),
    "threshold": _positive_float,
    "tie": _enum(TiePolicy),
    "lower_bound": _enum(LowerBoundMode),
    "prefix_fraction": _fraction(True, True),
    "emit": _enum(OutputFormat),
    "seed": _int(0),
    "timings": _bool,
    "jobs": _int(1),
    "lp_method": _lp_method,
    "lp_time_limit": _positive_float,
    "lp_max_vertices": _int(1),
    "max_n": _int(1),
    "compare": _bool,
}


def parse_config(stream: TextIO) -> Dict[str, object]:
    """
    Parse an experiment file into typed settings.

    Raises:
        ConfigError: unknown or repeated key, missing '=', or a malformed value
    """
    settings: Dict[str, object] = {}
    for line_number, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip().lower(), value.strip()
        if not sep:
            raise ConfigError(line_number, f"expected key = value, got '{line}'")
        if key not in CONFIG_KEYS:
            raise ConfigError(line_number, f"unknown key '{key}' (known: {', '.join(sorted(CONFIG_KEYS))})")
        if key in settings:
            raise ConfigError(line_number, f"key '{key}' given twice")
        if not value:
            raise ConfigError(line_number, f"key '{key}' has no value")
        try:
            settings[key] = CONFIG_KEYS[key](value)
        except ValueError as e:
            raise ConfigError(line_number, f"bad value '{value}' for '{key}': {e}") from None
    return settings


def parse_algorithm(token: str, variant: VariantTag = VariantTag.A1, alpha: float = 0.5,
                    tie: TiePolicy = TiePolicy.MIN_ID) -> AlgorithmSpec:
    """
    'greedy', 'a1' ... 'a3', 'lp-only', 'exact', 'hybrid' (uses the default
    variant) or 'hybrid-<variant>' such as 'hybrid-a2'.
    """
    name = token.strip().lower()
    hybrid_variant: Optional[VariantTag] = None
    if name.startswith("hybrid-") or name.startswith("hybrid:"):
        try:
            hybrid_variant = VariantTag(name[7:])
        except ValueError:
            raise InputError(f"unknown hybrid variant in '{token}'") from None
        name = "hybrid"
    try:
        algorithm = AlgorithmName(name)
    except ValueError:
        choices = ", ".join(member.value for member in AlgorithmName)
        raise InputError(f"unknown algorithm '{token}' (expected one of {choices} or hybrid-<variant>)") from None
    if algorithm == AlgorithmName.HYBRID:
        return AlgorithmSpec(algorithm, hybrid_variant or variant, alpha, tie)
    return AlgorithmSpec(algorithm, None, alpha, tie)


def parse_algorithms(tokens: Iterable[str], variant: VariantTag = VariantTag.A1, alpha: float = 0.5,
                     tie: TiePolicy = TiePolicy.MIN_ID) -> List[AlgorithmSpec]:
    """Accepts repeated tokens as well as comma-separated lists."""
    specs = []
    for token in tokens:
        for part in token.split(","):
            if part.strip():
                specs.append(parse_algorithm(part, variant, alpha, tie))
    return specs
