"""Tests for display planning: faces, auras, sounds, and bubbles."""
from __future__ import annotations

import pytest

from petmind.affect import EmotionLabel, VAPoint
from petmind.display import (
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
from petmind.needs import NeedKind, NeedPrompt, Severity

CFG = DisplayConfig()


class TestValenceToHue:
    @pytest.mark.parametrize(
        "v,hue",
        [(-1.0, 0.0), (0.0, 60.0), (0.5, 90.0), (0.8, 108.0), (1.0, 120.0)],
    )
    def test_linear_map(self, v, hue):
        assert valence_to_hue(v) == pytest.approx(hue, abs=1e-12)

    def test_custom_endpoints(self):
        assert valence_to_hue(0.0, lo_deg=120.0, hi_deg=240.0) == pytest.approx(180.0)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            valence_to_hue(1.5)


class TestCueTable:
    @pytest.mark.parametrize(
        "label,cue",
        [
            (EmotionLabel.EXCITED, SoundCue.CUE1),
            (EmotionLabel.HAPPY, SoundCue.CUE1),
            (EmotionLabel.ANGRY, SoundCue.CUE2),
            (EmotionLabel.ALERT, SoundCue.CUE3),
            (EmotionLabel.UPSET, SoundCue.CUE4),
            (EmotionLabel.SAD, SoundCue.CUE4),
            (EmotionLabel.NEUTRAL, SoundCue.CUE5),
            (EmotionLabel.SLEEPY, SoundCue.CUE5),
            (EmotionLabel.CONTENT, SoundCue.CUE5),
        ],
    )
    def test_mapping(self, label, cue):
        assert cue_for(label) is cue

    def test_every_label_has_a_cue(self):
        assert {cue_for(label) for label in EmotionLabel} == set(SoundCue)


class TestResponsePlanning:
    def test_high_arousal_gets_aura_and_sound(self):
        d = plan_response_display(EmotionLabel.EXCITED, VAPoint(0.8, 0.8), CFG)
        assert d.face is EmotionLabel.EXCITED
        assert d.reason is DirectiveReason.RESPONSE
        assert d.aura == AuraSpec(hue_deg=108.0, intensity=0.8)
        assert d.sound is SoundCue.CUE1
        assert d.bubble is None
        assert d.duration_ms == 3000

    def test_low_arousal_face_only(self):
        d = plan_response_display(EmotionLabel.NEUTRAL, VAPoint(0.0, 0.0), CFG)
        assert d.aura is None
        assert d.sound is None

    def test_aura_threshold_strict(self):
        at = plan_response_display(EmotionLabel.ALERT, VAPoint(0.0, 0.5), CFG)
        assert at.aura is None
        above = plan_response_display(EmotionLabel.ALERT, VAPoint(0.0, 0.500001), CFG)
        assert above.aura is not None

    def test_sound_threshold_strict(self):
        at = plan_response_display(EmotionLabel.ALERT, VAPoint(0.0, 0.6), CFG)
        assert at.aura is not None
        assert at.sound is None
        above = plan_response_display(EmotionLabel.ALERT, VAPoint(0.0, 0.600001), CFG)
        assert above.sound is SoundCue.CUE3

    def test_aura_intensity_is_arousal_magnitude(self):
        d = plan_response_display(EmotionLabel.ANGRY, VAPoint(-0.9, 0.72), CFG)
        assert d.aura.intensity == pytest.approx(0.72)
        assert d.aura.hue_deg == pytest.approx(valence_to_hue(-0.9))

    def test_negative_arousal_never_aura(self):
        d = plan_response_display(EmotionLabel.CONTENT, VAPoint(0.9, -0.95), CFG)
        assert d.aura is None
        assert d.sound is None

    def test_modality_set_monotone_in_arousal(self):
        for v in (-0.8, 0.0, 0.42, 0.9):
            prev = -1
            for step in range(0, 101):
                a = step / 100.0
                d = plan_response_display(
                    EmotionLabel.ALERT, VAPoint(v, a), CFG
                )
                count = 1 + (d.aura is not None) + (d.sound is not None)
                assert count >= prev
                prev = count

    def test_sound_implies_aura(self):
        for step in range(0, 201):
            a = step / 200.0
            d = plan_response_display(EmotionLabel.ALERT, VAPoint(0.0, a), CFG)
            if d.sound is not None:
                assert d.aura is not None


class TestPassivePlanning:
    def test_face_follows_mood_band(self):
        d = plan_passive_display(VAPoint(0.8, 0.0), CFG)
        assert d.face is EmotionLabel.HAPPY
        assert d.reason is DirectiveReason.PASSIVE_MOOD

    def test_face_only_even_at_high_arousal(self):
        d = plan_passive_display(VAPoint(0.8, 0.9), CFG)
        assert d.aura is None
        assert d.sound is None
        assert d.bubble is None

    def test_duration_nominal(self):
        d = plan_passive_display(VAPoint(0, 0), CFG)
        assert d.duration_ms == 3000


class TestNeedPlanning:
    @pytest.mark.parametrize(
        "need,bubble",
        [
            (NeedKind.TOUCH, BubbleIcon.HAND),
            (NeedKind.REST, BubbleIcon.SLEEPING),
            (NeedKind.SOCIAL, BubbleIcon.CHAT),
            (NeedKind.HUNGER, BubbleIcon.BOWL),
        ],
    )
    def test_bubble_per_need(self, need, bubble):
        d = plan_need_display(NeedPrompt(need, Severity.LOW), CFG)
        assert d.bubble is bubble

    @pytest.mark.parametrize(
        "severity,face",
        [(Severity.LOW, EmotionLabel.UPSET), (Severity.CRITICAL, EmotionLabel.SAD)],
    )
    def test_face_per_severity(self, severity, face):
        d = plan_need_display(NeedPrompt(NeedKind.TOUCH, severity), CFG)
        assert d.face is face

    def test_reason_and_duration(self):
        d = plan_need_display(NeedPrompt(NeedKind.REST, Severity.LOW), CFG)
        assert d.reason is DirectiveReason.NEED_PROMPT
        assert d.duration_ms == 5000
        assert d.aura is None
        assert d.sound is None


class TestWireFormat:
    def test_field_order_full(self):
        d = DisplayDirective(
            face=EmotionLabel.EXCITED,
            reason=DirectiveReason.RESPONSE,
            duration_ms=3000,
            aura=AuraSpec(hue_deg=108.0, intensity=0.8),
            sound=SoundCue.CUE1,
        )
        wire = d.to_wire(1234.0)
        assert list(wire) == ["reason", "face", "aura", "sound", "duration_ms", "t"]
        assert wire["reason"] == "Response"
        assert wire["face"] == "Excited"
        assert list(wire["aura"]) == ["hue", "intensity"]
        assert wire["aura"]["hue"] == 108.0
        assert wire["t"] == 1234

    def test_optional_fields_omitted(self):
        d = DisplayDirective(
            face=EmotionLabel.NEUTRAL,
            reason=DirectiveReason.PASSIVE_MOOD,
            duration_ms=3000,
        )
        wire = d.to_wire(0.0)
        assert list(wire) == ["reason", "face", "duration_ms", "t"]

    def test_bubble_field(self):
        d = DisplayDirective(
            face=EmotionLabel.UPSET,
            reason=DirectiveReason.NEED_PROMPT,
            duration_ms=5000,
            bubble=BubbleIcon.HAND,
        )
        wire = d.to_wire(10.0)
        assert list(wire) == ["reason", "face", "bubble", "duration_ms", "t"]
        assert wire["bubble"] == "Hand"

    def test_t_rounded_to_int(self):
        d = DisplayDirective(
            face=EmotionLabel.NEUTRAL,
            reason=DirectiveReason.PASSIVE_MOOD,
            duration_ms=3000,
        )
        assert d.to_wire(1500.5)["t"] == 1500  # bankers rounding like int(round())
        assert d.to_wire(1501.5)["t"] == 1502
        assert isinstance(d.to_wire(7.0)["t"], int)


class TestValidation:
    def test_aura_bounds(self):
        with pytest.raises(ValueError):
            AuraSpec(hue_deg=-1.0, intensity=0.5)
        with pytest.raises(ValueError):
            AuraSpec(hue_deg=0.0, intensity=1.5)

    def test_duration_positive(self):
        with pytest.raises(ValueError):
            DisplayDirective(
                face=EmotionLabel.NEUTRAL,
                reason=DirectiveReason.RESPONSE,
                duration_ms=0,
            )

    def test_display_config_thresholds(self):
        with pytest.raises(ValueError):
            DisplayConfig(response_duration_ms=0)
