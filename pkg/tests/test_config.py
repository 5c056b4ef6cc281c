"""Tests for configuration loading, merging, validation, and round-trips."""
from __future__ import annotations

import json

import pytest

from petmind.affect import EventKind, VAPoint
from petmind.config import (
    ConfigError,
    config_from_dict,
    config_to_dict,
    default_config,
    load_config,
    validate_config,
)


class TestDefaults:
    def test_default_config_validates(self):
        validate_config(default_config())

    def test_documented_defaults(self):
        cfg = default_config()
        assert cfg.affect.mood_weight == 0.25
        assert cfg.affect.temperament_weight == 0.15
        assert cfg.affect.noise_sigma == 0.05
        assert cfg.affect.base_affect[EventKind.STROKE_WITH_GRAIN] == VAPoint(0.6, 0.3)
        assert cfg.needs.prompt_threshold == 0.3
        assert cfg.needs.critical_threshold == 0.1
        assert cfg.needs.rearm_threshold == 0.5
        assert cfg.evolution.eta == 0.05
        assert cfg.evolution.day_length_s == 86400.0
        assert cfg.interaction.stroke_window_ms == 1500
        assert cfg.display.response_duration_ms == 3000

    def test_base_affect_covers_all_external_kinds(self):
        cfg = default_config()
        covered = set(cfg.affect.base_affect)
        assert covered == set(EventKind) - {EventKind.NEED_PROMPT}


class TestOverrides:
    def test_scalar_override(self):
        cfg = config_from_dict({"affect": {"noise_sigma": 0.0}})
        assert cfg.affect.noise_sigma == 0.0
        assert cfg.affect.mood_weight == 0.25  # untouched

    def test_nested_base_affect_merge(self):
        cfg = config_from_dict(
            {"affect": {"base_affect": {"WordPraise": [0.9, 0.1]}}}
        )
        assert cfg.affect.base_affect[EventKind.WORD_PRAISE] == VAPoint(0.9, 0.1)
        assert cfg.affect.base_affect[EventKind.PAT] == VAPoint(0.3, 0.2)

    def test_needs_overrides(self):
        cfg = config_from_dict(
            {"needs": {"decay_rates": {"hunger": 0.01}, "prompt_threshold": 0.4}}
        )
        from petmind.needs import NeedKind

        assert cfg.needs.decay_rates[NeedKind.HUNGER] == 0.01
        assert cfg.needs.decay_rates[NeedKind.TOUCH] == 0.0010
        assert cfg.needs.prompt_threshold == 0.4

    def test_lexicon_merge_adds_words(self):
        cfg = config_from_dict({"lexicon": {"bonjour": "greeting"}})
        assert cfg.lexicon.words["bonjour"] is EventKind.WORD_GREETING
        assert cfg.lexicon.words["hello"] is EventKind.WORD_GREETING

    def test_empty_dict_is_default(self):
        assert config_from_dict({}) == default_config()

    def test_base_argument_layering(self):
        base = config_from_dict({"affect": {"noise_sigma": 0.0}})
        cfg = config_from_dict({"evolution": {"eta": 0.1}}, base)
        assert cfg.affect.noise_sigma == 0.0
        assert cfg.evolution.eta == 0.1


class TestRejection:
    def test_unknown_top_level_key(self):
        with pytest.raises(ConfigError, match="mystery"):
            config_from_dict({"mystery": 1})

    def test_unknown_section_key(self):
        with pytest.raises(ConfigError, match="affect"):
            config_from_dict({"affect": {"sparkle": 1}})

    def test_unknown_event_kind(self):
        with pytest.raises(ConfigError):
            config_from_dict({"affect": {"base_affect": {"Tickle": [0, 0]}}})

    def test_need_prompt_not_allowed_in_base_affect(self):
        with pytest.raises(ConfigError):
            config_from_dict({"affect": {"base_affect": {"NeedPrompt": [0, 0]}}})

    def test_non_numeric_value(self):
        with pytest.raises(ConfigError):
            config_from_dict({"affect": {"noise_sigma": "high"}})

    def test_bool_is_not_a_number(self):
        with pytest.raises(ConfigError):
            config_from_dict({"affect": {"noise_sigma": True}})

    def test_va_out_of_bounds(self):
        with pytest.raises(ConfigError):
            config_from_dict({"affect": {"base_affect": {"Pat": [2.0, 0.0]}}})

    def test_va_wrong_arity(self):
        with pytest.raises(ConfigError):
            config_from_dict({"affect": {"base_affect": {"Pat": [0.1]}}})

    def test_bad_lexicon_category(self):
        with pytest.raises(ConfigError):
            config_from_dict({"lexicon": {"snack": "nibble"}})

    def test_section_must_be_mapping(self):
        with pytest.raises(ConfigError):
            config_from_dict({"affect": 7})


class TestValidation:
    def test_negative_sigma(self):
        cfg = config_from_dict({})
        bad = config_from_dict({"affect": {"noise_sigma": 0.0}})
        object.__setattr__(bad.affect, "noise_sigma", -0.1)
        with pytest.raises(ConfigError):
            validate_config(bad)
        validate_config(cfg)

    def test_threshold_ordering_enforced(self):
        with pytest.raises(ConfigError):
            validate_config(
                config_from_dict(
                    {"needs": {"prompt_threshold": 0.1, "critical_threshold": 0.3}}
                )
            )

    def test_rearm_must_exceed_prompt(self):
        with pytest.raises(ConfigError):
            validate_config(
                config_from_dict({"needs": {"rearm_threshold": 0.2}})
            )

    def test_band_boundary_in_unit_interval(self):
        with pytest.raises(ConfigError):
            validate_config(
                config_from_dict({"affect": {"band_boundary": 1.0}})
            )

    def test_eta_range(self):
        with pytest.raises(ConfigError):
            validate_config(config_from_dict({"evolution": {"eta": 1.5}}))


class TestRoundTrip:
    def test_to_dict_from_dict_identity(self):
        cfg = config_from_dict(
            {
                "affect": {"noise_sigma": 0.01, "base_affect": {"Pat": [0.2, 0.1]}},
                "needs": {"decay_rates": {"social": 0.002}},
                "evolution": {"mood_range": 0.1},
                "interaction": {"stroke_window_ms": 2000},
                "display": {"hue_hi_deg": 240.0},
                "lexicon": {"bonjour": "greeting"},
            }
        )
        dumped = config_to_dict(cfg)
        assert config_from_dict(dumped) == cfg

    def test_dump_is_json_serializable(self):
        text = json.dumps(config_to_dict(default_config()))
        assert "base_affect" in text


class TestLoadConfig:
    def test_load_from_file(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps({"affect": {"noise_sigma": 0.02}}))
        cfg = load_config(path)
        assert cfg.affect.noise_sigma == 0.02

    def test_missing_file_is_oserror(self, tmp_path):
        with pytest.raises(OSError):
            load_config(tmp_path / "absent.json")

    def test_invalid_json_is_config_error(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ConfigError):
            load_config(path)
