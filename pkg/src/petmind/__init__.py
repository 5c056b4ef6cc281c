"""A simulated companion-robot mind: circumplex affect appraisal, need
meters, daily mood and temperament evolution, sensor-event classification,
and multimodal display planning, with a deterministic scenario harness and
a live websocket service.
"""

from .affect import (
    AffectEvent,
    AppraisedAffect,
    Band,
    EmotionLabel,
    EventKind,
    VAPoint,
    add_noise,
    appraise,
    band_of,
    clamp_va,
    select_response,
)
from .config import (
    AffectConfig,
    ConfigError,
    EngineConfig,
    config_from_dict,
    config_to_dict,
    default_config,
    load_config,
    validate_config,
)
from .display import (
    AuraSpec,
    BubbleIcon,
    DirectiveReason,
    DisplayConfig,
    DisplayDirective,
    SoundCue,
    cue_for,
    plan_need_display,
    plan_passive_display,
    plan_response_display,
    valence_to_hue,
)
from .engine import Engine
from .evolution import (
    Archetype,
    DayLog,
    EvolutionConfig,
    Mood,
    SimClock,
    Temperament,
    archetype_of,
    end_of_day_update,
    mood_feedback,
    sample_daily_mood,
)
from .harness import dump_records, read_log, run, write_log
from .interactions import (
    GazeSample,
    GazeTracker,
    InteractionConfig,
    Lexicon,
    ProximitySample,
    ProximityTracker,
    StrokeTracker,
    TouchContact,
    TouchRegion,
    classify_stroke,
    classify_word,
    parse_region,
)
from .needs import (
    NeedKind,
    NeedPrompt,
    NeedsConfig,
    NeedsState,
    Severity,
    apply_event_to_needs,
    check_thresholds,
    decay_tick,
)
from .scenario import (
    Scenario,
    ScenarioEntry,
    ScenarioError,
    dump_scenario,
    load_scenario,
    parse_scenario,
    write_scenario,
)

__version__ = "0.1.0"

__all__ = [
    "AffectConfig",
    "AffectEvent",
    "AppraisedAffect",
    "Archetype",
    "AuraSpec",
    "Band",
    "BubbleIcon",
    "ConfigError",
    "DayLog",
    "DirectiveReason",
    "DisplayConfig",
    "DisplayDirective",
    "EmotionLabel",
    "Engine",
    "EngineConfig",
    "EventKind",
    "EvolutionConfig",
    "GazeSample",
    "GazeTracker",
    "InteractionConfig",
    "Lexicon",
    "Mood",
    "NeedKind",
    "NeedPrompt",
    "NeedsConfig",
    "NeedsState",
    "ProximitySample",
    "ProximityTracker",
    "Scenario",
    "ScenarioEntry",
    "ScenarioError",
    "Severity",
    "SimClock",
    "SoundCue",
    "StrokeTracker",
    "Temperament",
    "TouchContact",
    "TouchRegion",
    "VAPoint",
    "add_noise",
    "appraise",
    "apply_event_to_needs",
    "archetype_of",
    "band_of",
    "check_thresholds",
    "clamp_va",
    "classify_stroke",
    "classify_word",
    "config_from_dict",
    "config_to_dict",
    "cue_for",
    "decay_tick",
    "default_config",
    "dump_records",
    "dump_scenario",
    "end_of_day_update",
    "load_config",
    "load_scenario",
    "mood_feedback",
    "parse_region",
    "parse_scenario",
    "plan_need_display",
    "plan_passive_display",
    "plan_response_display",
    "read_log",
    "run",
    "sample_daily_mood",
    "select_response",
    "valence_to_hue",
    "validate_config",
    "write_log",
    "write_scenario",
]
