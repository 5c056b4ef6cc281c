"""Display planning: maps responses, passive mood, and need prompts to
multimodal directives (face, aura, sound cue, thought bubble).

Higher arousal recruits more modalities: every response shows a face,
arousal above the aura threshold adds a colored aura, and above the sound
threshold a cue as well.  Passive mood is face-only; need prompts pair a
thought bubble with a negative face scaled to severity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Final

from .affect import BAND_BOUNDARY, EmotionLabel, VAPoint, select_response
from .needs import NeedKind, NeedPrompt, Severity


class SoundCue(str, Enum):
    CUE1 = "cue1"
    CUE2 = "cue2"
    CUE3 = "cue3"
    CUE4 = "cue4"
    CUE5 = "cue5"


class BubbleIcon(str, Enum):
    HAND = "Hand"
    SLEEPING = "Sleeping"
    CHAT = "Chat"
    BOWL = "Bowl"
    HEART = "Heart"


class DirectiveReason(str, Enum):
    RESPONSE = "Response"
    PASSIVE_MOOD = "PassiveMood"
    NEED_PROMPT = "NeedPrompt"


CUE_TABLE: Final[dict[EmotionLabel, SoundCue]] = {
    EmotionLabel.EXCITED: SoundCue.CUE1,
    EmotionLabel.HAPPY: SoundCue.CUE1,
    EmotionLabel.ANGRY: SoundCue.CUE2,
    EmotionLabel.ALERT: SoundCue.CUE3,
    EmotionLabel.UPSET: SoundCue.CUE4,
    EmotionLabel.SAD: SoundCue.CUE4,
    EmotionLabel.NEUTRAL: SoundCue.CUE5,
    EmotionLabel.SLEEPY: SoundCue.CUE5,
    EmotionLabel.CONTENT: SoundCue.CUE5,
}

BUBBLE_FOR_NEED: Final[dict[NeedKind, BubbleIcon]] = {
    NeedKind.TOUCH: BubbleIcon.HAND,
    NeedKind.REST: BubbleIcon.SLEEPING,
    NeedKind.SOCIAL: BubbleIcon.CHAT,
    NeedKind.HUNGER: BubbleIcon.BOWL,
}

FACE_FOR_SEVERITY: Final[dict[Severity, EmotionLabel]] = {
    Severity.LOW: EmotionLabel.UPSET,
    Severity.CRITICAL: EmotionLabel.SAD,
}


@dataclass(frozen=True, slots=True)
class AuraSpec:
    hue_deg: float
    intensity: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.hue_deg <= 360.0:
            raise ValueError(f"hue_deg must be in [0, 360], got {self.hue_deg}")
        if not 0.0 <= self.intensity <= 1.0:
            raise ValueError(f"intensity must be in [0, 1], got {self.intensity}")


@dataclass(frozen=True, slots=True)
class DisplayDirective:
    face: EmotionLabel
    reason: DirectiveReason
    duration_ms: int
    aura: AuraSpec | None = None
    sound: SoundCue | None = None
    bubble: BubbleIcon | None = None

    def __post_init__(self) -> None:
        if self.duration_ms <= 0:
            raise ValueError(f"duration_ms must be positive, got {self.duration_ms}")

    def to_wire(self, t_ms: float) -> dict:
        """Serialization used in logs and on the wire; field names fixed."""
        body: dict = {"reason": self.reason.value, "face": self.face.value}
        if self.aura is not None:
            body["aura"] = {
                "hue": self.aura.hue_deg,
                "intensity": self.aura.intensity,
            }
        if self.sound is not None:
            body["sound"] = self.sound.value
        if self.bubble is not None:
            body["bubble"] = self.bubble.value
        body["duration_ms"] = self.duration_ms
        body["t"] = int(round(t_ms))
        return body


@dataclass(frozen=True, slots=True)
class DisplayConfig:
    aura_arousal_threshold: float = 0.5
    sound_arousal_threshold: float = 0.6
    response_duration_ms: int = 3000
    need_duration_ms: int = 5000
    passive_duration_ms: int = 3000
    hue_lo_deg: float = 0.0
    hue_hi_deg: float = 120.0

    def __post_init__(self) -> None:
        if self.response_duration_ms <= 0 or self.need_duration_ms <= 0:
            raise ValueError("directive durations must be positive")
        if self.passive_duration_ms <= 0:
            raise ValueError("directive durations must be positive")
        if not 0.0 <= self.hue_lo_deg <= 360.0 or not 0.0 <= self.hue_hi_deg <= 360.0:
            raise ValueError("hue endpoints must be in [0, 360]")


DEFAULT_DISPLAY_CONFIG: Final = DisplayConfig()


def valence_to_hue(
    v: float, lo_deg: float = 0.0, hi_deg: float = 120.0
) -> float:
    """Linear valence -> hue map; defaults run red (-1) through yellow (0)
    to green (+1)."""
    if not -1.0 <= v <= 1.0:
        raise ValueError(f"valence must be in [-1, 1], got {v}")
    return lo_deg + (v + 1.0) / 2.0 * (hi_deg - lo_deg)


def cue_for(label: EmotionLabel) -> SoundCue:
    return CUE_TABLE[label]


def plan_response_display(
    label: EmotionLabel,
    va: VAPoint,
    cfg: DisplayConfig = DEFAULT_DISPLAY_CONFIG,
) -> DisplayDirective:
    aura = None
    if va.arousal > cfg.aura_arousal_threshold:
        aura = AuraSpec(
            hue_deg=valence_to_hue(va.valence, cfg.hue_lo_deg, cfg.hue_hi_deg),
            intensity=abs(va.arousal),
        )
    sound = cue_for(label) if va.arousal > cfg.sound_arousal_threshold else None
    return DisplayDirective(
        face=label,
        reason=DirectiveReason.RESPONSE,
        duration_ms=cfg.response_duration_ms,
        aura=aura,
        sound=sound,
    )


def plan_passive_display(
    mood: VAPoint,
    cfg: DisplayConfig = DEFAULT_DISPLAY_CONFIG,
    band_boundary: float = BAND_BOUNDARY,
) -> DisplayDirective:
    return DisplayDirective(
        face=select_response(mood, band_boundary),
        reason=DirectiveReason.PASSIVE_MOOD,
        duration_ms=cfg.passive_duration_ms,
    )


def plan_need_display(
    prompt: NeedPrompt,
    cfg: DisplayConfig = DEFAULT_DISPLAY_CONFIG,
) -> DisplayDirective:
    return DisplayDirective(
        face=FACE_FOR_SEVERITY[prompt.severity],
        reason=DirectiveReason.NEED_PROMPT,
        duration_ms=cfg.need_duration_ms,
        bubble=BUBBLE_FOR_NEED[prompt.need],
    )
