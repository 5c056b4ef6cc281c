"""Engine configuration: defaults for every tunable, JSON loading with
key-by-key overrides, and strict validation (unknown keys rejected).

The file format is one JSON object with up to six sections: ``affect``,
``needs``, ``evolution``, ``interaction``, ``display``, ``lexicon``.
Every key inside a section overrides the matching default; nested tables
(base affect, decay rates, replenishment, lexicon) merge entry by entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Final

from .affect import EventKind, VAPoint
from .display import DisplayConfig
from .evolution import EvolutionConfig
from .interactions import InteractionConfig, Lexicon, DEFAULT_LEXICON
from .needs import NeedKind, NeedsConfig, Severity

_METER_NAMES: Final = {k.value.lower(): k for k in NeedKind}


class ConfigError(ValueError):
    """A configuration file or override dict failed validation."""


# Intrinsic (valence, arousal) seed per event kind.  Signs follow the
# qualitative design (with-grain strokes pleasant, against-grain and
# scolding unpleasant and activating, departures deflating); magnitudes
# are tuning defaults.
DEFAULT_BASE_AFFECT: Final[dict[EventKind, VAPoint]] = {
    EventKind.STROKE_WITH_GRAIN: VAPoint(0.6, 0.3),
    EventKind.STROKE_AGAINST_GRAIN: VAPoint(-0.5, 0.5),
    EventKind.PAT: VAPoint(0.3, 0.2),
    EventKind.WORD_GREETING: VAPoint(0.4, 0.4),
    EventKind.WORD_PRAISE: VAPoint(0.6, 0.3),
    EventKind.WORD_SCOLD: VAPoint(-0.6, 0.5),
    EventKind.WORD_FEED: VAPoint(0.5, 0.4),
    EventKind.WORD_UNKNOWN: VAPoint(0.0, 0.1),
    EventKind.EYE_CONTACT: VAPoint(0.3, 0.4),
    EventKind.LOOKING_AWAY: VAPoint(-0.3, -0.2),
    EventKind.APPROACH_NEAR: VAPoint(0.4, 0.5),
    EventKind.DEPART_FAR: VAPoint(-0.4, -0.1),
    EventKind.SUSTAINED_NEAR: VAPoint(0.3, -0.2),
}

# NeedPrompt events carry severity-dependent negative affect instead of a
# per-kind entry above.
DEFAULT_NEED_PROMPT_AFFECT: Final[dict[Severity, VAPoint]] = {
    Severity.LOW: VAPoint(-0.3, 0.2),
    Severity.CRITICAL: VAPoint(-0.5, 0.4),
}


@dataclass(frozen=True, slots=True)
class AffectConfig:
    mood_weight: float = 0.25
    temperament_weight: float = 0.15
    noise_sigma: float = 0.05
    band_boundary: float = 1.0 / 3.0
    base_affect: dict[EventKind, VAPoint] = field(
        default_factory=lambda: dict(DEFAULT_BASE_AFFECT)
    )
    need_prompt_affect: dict[Severity, VAPoint] = field(
        default_factory=lambda: dict(DEFAULT_NEED_PROMPT_AFFECT)
    )


@dataclass(frozen=True, slots=True)
class EngineConfig:
    affect: AffectConfig = field(default_factory=AffectConfig)
    needs: NeedsConfig = field(default_factory=NeedsConfig)
    evolution: EvolutionConfig = field(default_factory=EvolutionConfig)
    interaction: InteractionConfig = field(default_factory=InteractionConfig)
    display: DisplayConfig = field(default_factory=DisplayConfig)
    lexicon: Lexicon = field(default_factory=lambda: DEFAULT_LEXICON)


def default_config() -> EngineConfig:
    return EngineConfig()


# ---------------------------------------------------------------------------
# Parsing helpers


def _expect_mapping(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(f"{path}: expected an object, got {type(value).__name__}")
    return value


def _expect_number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path}: expected a number, got {value!r}")
    return float(value)


def _expect_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{path}: expected an integer, got {value!r}")
    return value


def _expect_va(value: Any, path: str) -> VAPoint:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ConfigError(f"{path}: expected [valence, arousal]")
    v = _expect_number(value[0], f"{path}[0]")
    a = _expect_number(value[1], f"{path}[1]")
    if not -1.0 <= v <= 1.0 or not -1.0 <= a <= 1.0:
        raise ConfigError(f"{path}: components must be in [-1, 1]")
    return VAPoint(v, a)


def _reject_unknown(data: dict, known: set[str], path: str) -> None:
    unknown = set(data) - known
    if unknown:
        names = ", ".join(sorted(unknown))
        raise ConfigError(f"{path}: unknown key(s): {names}")


def _event_kind(name: Any, path: str) -> EventKind:
    try:
        kind = EventKind(name)
    except ValueError:
        raise ConfigError(f"{path}: unknown event kind {name!r}") from None
    if kind is EventKind.NEED_PROMPT:
        raise ConfigError(
            f"{path}: NeedPrompt affect is configured via need_prompt_affect"
        )
    return kind


def _need_kind(name: Any, path: str) -> NeedKind:
    if not isinstance(name, str) or name.lower() not in _METER_NAMES:
        raise ConfigError(f"{path}: unknown need {name!r}")
    return _METER_NAMES[name.lower()]


def _scalar_overrides(
    data: dict, base: Any, path: str, *, skip: tuple[str, ...] = ()
) -> dict[str, Any]:
    """Numeric field overrides for a config dataclass, by field name."""
    out: dict[str, Any] = {}
    by_name = {f.name: f for f in fields(base)}
    for key, value in data.items():
        if key in skip or key not in by_name:
            continue
        if by_name[key].type == "int":
            out[key] = _expect_int(value, f"{path}.{key}")
        else:
            out[key] = _expect_number(value, f"{path}.{key}")
    return out


def _build_affect(data: dict, base: AffectConfig) -> AffectConfig:
    path = "affect"
    known = {
        "mood_weight",
        "temperament_weight",
        "noise_sigma",
        "band_boundary",
        "base_affect",
        "need_prompt_affect",
    }
    _reject_unknown(data, known, path)
    kwargs = _scalar_overrides(
        data, base, path, skip=("base_affect", "need_prompt_affect")
    )
    if "base_affect" in data:
        table = dict(base.base_affect)
        for name, value in _expect_mapping(
            data["base_affect"], f"{path}.base_affect"
        ).items():
            kind = _event_kind(name, f"{path}.base_affect")
            table[kind] = _expect_va(value, f"{path}.base_affect.{name}")
        kwargs["base_affect"] = table
    if "need_prompt_affect" in data:
        table2 = dict(base.need_prompt_affect)
        for name, value in _expect_mapping(
            data["need_prompt_affect"], f"{path}.need_prompt_affect"
        ).items():
            try:
                sev = Severity(name)
            except ValueError:
                raise ConfigError(
                    f"{path}.need_prompt_affect: unknown severity {name!r}"
                ) from None
            table2[sev] = _expect_va(value, f"{path}.need_prompt_affect.{name}")
        kwargs["need_prompt_affect"] = table2
    return replace(base, **kwargs)


def _build_needs(data: dict, base: NeedsConfig) -> NeedsConfig:
    path = "needs"
    known = {
        "decay_rates",
        "prompt_threshold",
        "critical_threshold",
        "rearm_threshold",
        "idle_after_s",
        "rest_regen_per_s",
        "replenish",
    }
    _reject_unknown(data, known, path)
    kwargs = _scalar_overrides(data, base, path, skip=("decay_rates", "replenish"))
    if "decay_rates" in data:
        rates = dict(base.decay_rates)
        for name, value in _expect_mapping(
            data["decay_rates"], f"{path}.decay_rates"
        ).items():
            need = _need_kind(name, f"{path}.decay_rates")
            rates[need] = _expect_number(value, f"{path}.decay_rates.{name}")
        kwargs["decay_rates"] = rates
    if "replenish" in data:
        table = dict(base.replenish)
        for name, value in _expect_mapping(
            data["replenish"], f"{path}.replenish"
        ).items():
            kind = _event_kind(name, f"{path}.replenish")
            deltas = {}
            for need_name, delta in _expect_mapping(
                value, f"{path}.replenish.{name}"
            ).items():
                need = _need_kind(need_name, f"{path}.replenish.{name}")
                deltas[need] = _expect_number(
                    delta, f"{path}.replenish.{name}.{need_name}"
                )
            table[kind] = deltas
        kwargs["replenish"] = table
    return replace(base, **kwargs)


def _build_evolution(data: dict, base: EvolutionConfig) -> EvolutionConfig:
    path = "evolution"
    known = {"eta", "mood_gain", "mood_range", "day_length_s", "initial_temperament"}
    _reject_unknown(data, known, path)
    kwargs = _scalar_overrides(data, base, path, skip=("initial_temperament",))
    if "initial_temperament" in data:
        kwargs["initial_temperament"] = _expect_va(
            data["initial_temperament"], f"{path}.initial_temperament"
        )
    return replace(base, **kwargs)


def _build_interaction(data: dict, base: InteractionConfig) -> InteractionConfig:
    path = "interaction"
    known = {f.name for f in fields(base)}
    _reject_unknown(data, known, path)
    try:
        return replace(base, **_scalar_overrides(data, base, path))
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def _build_display(data: dict, base: DisplayConfig) -> DisplayConfig:
    path = "display"
    known = {f.name for f in fields(base)}
    _reject_unknown(data, known, path)
    try:
        return replace(base, **_scalar_overrides(data, base, path))
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def _build_lexicon(data: Any, base: Lexicon) -> Lexicon:
    words = dict(base.words)
    for word, category in _expect_mapping(data, "lexicon").items():
        if not isinstance(category, str):
            raise ConfigError(f"lexicon.{word}: expected a category string")
        try:
            addition = Lexicon.from_pairs([(word, category)])
        except ValueError as exc:
            raise ConfigError(f"lexicon.{word}: {exc}") from None
        words.update(addition.words)
    return Lexicon(words=words)


def config_from_dict(
    data: dict, base: EngineConfig | None = None
) -> EngineConfig:
    """Apply a (possibly partial) override dict on top of ``base``."""
    base = base if base is not None else default_config()
    data = _expect_mapping(data, "config")
    known = {"affect", "needs", "evolution", "interaction", "display", "lexicon"}
    _reject_unknown(data, known, "config")
    cfg = base
    if "affect" in data:
        cfg = replace(
            cfg, affect=_build_affect(_expect_mapping(data["affect"], "affect"), cfg.affect)
        )
    if "needs" in data:
        cfg = replace(
            cfg, needs=_build_needs(_expect_mapping(data["needs"], "needs"), cfg.needs)
        )
    if "evolution" in data:
        cfg = replace(
            cfg,
            evolution=_build_evolution(
                _expect_mapping(data["evolution"], "evolution"), cfg.evolution
            ),
        )
    if "interaction" in data:
        cfg = replace(
            cfg,
            interaction=_build_interaction(
                _expect_mapping(data["interaction"], "interaction"), cfg.interaction
            ),
        )
    if "display" in data:
        cfg = replace(
            cfg,
            display=_build_display(
                _expect_mapping(data["display"], "display"), cfg.display
            ),
        )
    if "lexicon" in data:
        cfg = replace(cfg, lexicon=_build_lexicon(data["lexicon"], cfg.lexicon))
    validate_config(cfg)
    return cfg


def load_config(path: str | Path, base: EngineConfig | None = None) -> EngineConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from None
    return config_from_dict(data, base)


def validate_config(cfg: EngineConfig) -> None:
    """Range and consistency checks beyond what section types enforce."""
    a = cfg.affect
    if a.noise_sigma < 0:
        raise ConfigError("affect.noise_sigma must be >= 0")
    if not 0.0 < a.band_boundary < 1.0:
        raise ConfigError("affect.band_boundary must be in (0, 1)")
    if a.mood_weight < 0 or a.temperament_weight < 0:
        raise ConfigError("affect weights must be >= 0")
    missing = set(EventKind) - {EventKind.NEED_PROMPT} - set(a.base_affect)
    if missing:
        names = ", ".join(sorted(k.value for k in missing))
        raise ConfigError(f"affect.base_affect missing kinds: {names}")
    if set(a.need_prompt_affect) != set(Severity):
        raise ConfigError("affect.need_prompt_affect must cover both severities")

    n = cfg.needs
    if not 0.0 <= n.critical_threshold < n.prompt_threshold < n.rearm_threshold <= 1.0:
        raise ConfigError(
            "needs thresholds must satisfy 0 <= critical < prompt < rearm <= 1"
        )
    if set(n.decay_rates) != set(NeedKind):
        raise ConfigError("needs.decay_rates must cover all four needs")
    if any(rate < 0 for rate in n.decay_rates.values()):
        raise ConfigError("needs.decay_rates must be >= 0")
    if n.idle_after_s <= 0:
        raise ConfigError("needs.idle_after_s must be positive")
    if n.rest_regen_per_s < 0:
        raise ConfigError("needs.rest_regen_per_s must be >= 0")

    e = cfg.evolution
    if not 0.0 <= e.eta <= 1.0:
        raise ConfigError("evolution.eta must be in [0, 1]")
    if e.mood_gain < 0:
        raise ConfigError("evolution.mood_gain must be >= 0")
    if not 0.0 <= e.mood_range <= 1.0:
        raise ConfigError("evolution.mood_range must be in [0, 1]")
    if e.day_length_s <= 0:
        raise ConfigError("evolution.day_length_s must be positive")


def config_to_dict(cfg: EngineConfig) -> dict:
    """Full dump in the file format; round-trips through config_from_dict."""
    return {
        "affect": {
            "mood_weight": cfg.affect.mood_weight,
            "temperament_weight": cfg.affect.temperament_weight,
            "noise_sigma": cfg.affect.noise_sigma,
            "band_boundary": cfg.affect.band_boundary,
            "base_affect": {
                kind.value: [va.valence, va.arousal]
                for kind, va in cfg.affect.base_affect.items()
            },
            "need_prompt_affect": {
                sev.value: [va.valence, va.arousal]
                for sev, va in cfg.affect.need_prompt_affect.items()
            },
        },
        "needs": {
            "decay_rates": {
                kind.value.lower(): rate
                for kind, rate in cfg.needs.decay_rates.items()
            },
            "prompt_threshold": cfg.needs.prompt_threshold,
            "critical_threshold": cfg.needs.critical_threshold,
            "rearm_threshold": cfg.needs.rearm_threshold,
            "idle_after_s": cfg.needs.idle_after_s,
            "rest_regen_per_s": cfg.needs.rest_regen_per_s,
            "replenish": {
                kind.value: {
                    need.value.lower(): delta for need, delta in deltas.items()
                }
                for kind, deltas in cfg.needs.replenish.items()
            },
        },
        "evolution": {
            "eta": cfg.evolution.eta,
            "mood_gain": cfg.evolution.mood_gain,
            "mood_range": cfg.evolution.mood_range,
            "day_length_s": cfg.evolution.day_length_s,
            "initial_temperament": [
                cfg.evolution.initial_temperament.valence,
                cfg.evolution.initial_temperament.arousal,
            ],
        },
        "interaction": {
            f.name: getattr(cfg.interaction, f.name)
            for f in fields(cfg.interaction)
        },
        "display": {
            f.name: getattr(cfg.display, f.name) for f in fields(cfg.display)
        },
        "lexicon": {
            word: kind.value.removeprefix("Word").lower()
            for word, kind in cfg.lexicon.words.items()
        },
    }
