"""Tests for moods, temperament evolution, and the simulated-day clock."""
from __future__ import annotations

import random

import pytest

from petmind.affect import AppraisedAffect, VAPoint
from petmind.evolution import (
    Archetype,
    DayLog,
    SimClock,
    Temperament,
    archetype_of,
    end_of_day_update,
    mood_feedback,
    sample_daily_mood,
)


def reference_archetype(valence: float, arousal: float) -> Archetype:
    """Independent nine-way lookup used as an oracle for archetype_of."""
    b = 1.0 / 3.0
    if arousal > b:
        if valence < -b:
            return Archetype.IRRITABLE
        if valence > b:
            return Archetype.EXCITABLE
        return Archetype.SKITTISH
    if arousal < -b:
        if valence < -b:
            return Archetype.GLOOMY
        if valence > b:
            return Archetype.RELAXED
        return Archetype.PLACID
    if valence < -b:
        return Archetype.SULLEN
    if valence > b:
        return Archetype.CHEERFUL
    return Archetype.EVEN_TEMPERED


def appraised(v: float, a: float) -> AppraisedAffect:
    return AppraisedAffect(va=VAPoint(v, a), source=None)


class TestArchetype:
    @pytest.mark.parametrize(
        "v,a,want",
        [
            (0.0, 0.0, Archetype.EVEN_TEMPERED),
            (-0.8, 0.8, Archetype.IRRITABLE),
            (0.8, 0.8, Archetype.EXCITABLE),
            (0.0, 0.8, Archetype.SKITTISH),
            (-0.8, 0.0, Archetype.SULLEN),
            (0.8, 0.0, Archetype.CHEERFUL),
            (-0.8, -0.8, Archetype.GLOOMY),
            (0.0, -0.8, Archetype.PLACID),
            (0.8, -0.8, Archetype.RELAXED),
        ],
    )
    def test_region_centers(self, v, a, want):
        assert archetype_of(VAPoint(v, a)) is want

    def test_grid_against_reference(self):
        steps = [i / 5.0 for i in range(-5, 6)]
        for v in steps:
            for a in steps:
                assert archetype_of(VAPoint(v, a)) is reference_archetype(v, a)

    def test_temperament_from_va_labels_itself(self):
        t = Temperament.from_va(VAPoint(0.6, 0.3))
        assert t.archetype is Archetype.CHEERFUL


class TestDailyMood:
    def test_golden_draws(self):
        rng = random.Random(12345)
        mood = sample_daily_mood(VAPoint(0.0, 0.0), 0.2, rng)
        assert mood.va.valence == -0.03335205098186353
        assert mood.va.arousal == -0.19593233221717266

    def test_valence_drawn_before_arousal(self):
        ref = random.Random(12345)
        expected_v = ref.uniform(-0.2, 0.2)
        mood = sample_daily_mood(VAPoint(0.0, 0.0), 0.2, random.Random(12345))
        assert mood.va.valence == expected_v

    def test_zero_range_is_exact_and_draws_nothing(self):
        rng = random.Random(5)
        before = rng.getstate()
        mood = sample_daily_mood(VAPoint(0.25, -0.5), 0.0, rng, day_index=3)
        assert mood.va == VAPoint(0.25, -0.5)
        assert mood.day_index == 3
        assert rng.getstate() == before

    def test_clamped_at_corner(self):
        rng = random.Random(0)
        for _ in range(100):
            mood = sample_daily_mood(VAPoint(1.0, -1.0), 0.2, rng)
            assert -1.0 <= mood.va.valence <= 1.0
            assert -1.0 <= mood.va.arousal <= 1.0

    def test_stays_inside_box(self):
        rng = random.Random(8)
        centre = VAPoint(0.1, -0.3)
        for _ in range(500):
            mood = sample_daily_mood(centre, 0.2, rng)
            assert abs(mood.va.valence - centre.valence) <= 0.2 + 1e-12
            assert abs(mood.va.arousal - centre.arousal) <= 0.2 + 1e-12

    def test_range_out_of_bounds_rejected(self):
        with pytest.raises(ValueError):
            sample_daily_mood(VAPoint(0, 0), -0.1, random.Random(0))
        with pytest.raises(ValueError):
            sample_daily_mood(VAPoint(0, 0), 1.5, random.Random(0))


class TestMoodFeedback:
    def test_basic_nudge(self):
        out = mood_feedback(VAPoint(0.1, 0.0), appraised(0.5, -0.5), 0.02)
        assert out.valence == pytest.approx(0.11, abs=1e-12)
        assert out.arousal == pytest.approx(-0.01, abs=1e-12)

    def test_zero_gain_identity(self):
        start = VAPoint(0.3, -0.2)
        assert mood_feedback(start, appraised(1.0, 1.0), 0.0) == start

    def test_clamped(self):
        out = mood_feedback(VAPoint(1.0, 1.0), appraised(1.0, 1.0), 0.5)
        assert out == VAPoint(1.0, 1.0)

    def test_negative_gain_rejected(self):
        with pytest.raises(ValueError):
            mood_feedback(VAPoint(0, 0), appraised(0, 0), -0.01)


class TestEndOfDay:
    def test_empty_day_unchanged(self):
        t = Temperament.from_va(VAPoint(0.2, -0.1))
        assert end_of_day_update(t, DayLog(day_index=0), 0.05) is t

    def test_single_step_ema(self):
        t = Temperament.from_va(VAPoint(0.0, 0.0))
        log = DayLog(day_index=0)
        log.append(appraised(0.6, 0.3))
        out = end_of_day_update(t, log, 0.05)
        assert out.va.valence == pytest.approx(0.03, abs=1e-12)
        assert out.va.arousal == pytest.approx(0.015, abs=1e-12)

    def test_mean_of_multiple_appraisals(self):
        t = Temperament.from_va(VAPoint(0.0, 0.0))
        log = DayLog(day_index=0)
        log.append(appraised(1.0, 0.0))
        log.append(appraised(0.0, 1.0))
        out = end_of_day_update(t, log, 0.1)
        assert out.va.valence == pytest.approx(0.05, abs=1e-12)
        assert out.va.arousal == pytest.approx(0.05, abs=1e-12)

    def test_eta_one_jumps_to_mean(self):
        t = Temperament.from_va(VAPoint(-0.5, 0.5))
        log = DayLog(day_index=0)
        log.append(appraised(0.4, -0.2))
        out = end_of_day_update(t, log, 1.0)
        assert out.va.valence == pytest.approx(0.4, abs=1e-12)
        assert out.va.arousal == pytest.approx(-0.2, abs=1e-12)

    def test_eta_out_of_bounds_rejected(self):
        log = DayLog(day_index=0)
        log.append(appraised(0, 0))
        with pytest.raises(ValueError):
            end_of_day_update(Temperament.from_va(VAPoint(0, 0)), log, 1.5)

    def test_sixty_day_convergence_matches_closed_form(self):
        # Constant daily mean m from zero start follows
        # t_d = m * (1 - (1 - eta)^d) exactly.
        eta = 0.05
        target = (0.6, 0.3)
        t = Temperament.from_va(VAPoint(0.0, 0.0))
        for day in range(1, 61):
            log = DayLog(day_index=day - 1)
            for _ in range(5):
                log.append(appraised(*target))
            t = end_of_day_update(t, log, eta)
            factor = 1.0 - (1.0 - eta) ** day
            assert t.va.valence == pytest.approx(target[0] * factor, abs=1e-9)
            assert t.va.arousal == pytest.approx(target[1] * factor, abs=1e-9)
        assert abs(t.va.valence - target[0]) < 0.05
        assert abs(t.va.arousal - target[1]) < 0.05

    def test_archetype_shifts_with_temperament(self):
        t = Temperament.from_va(VAPoint(0.0, 0.0))
        assert t.archetype is Archetype.EVEN_TEMPERED
        log = DayLog(day_index=0)
        log.append(appraised(1.0, 0.0))
        for _ in range(40):
            t = end_of_day_update(t, log, 0.05)
        assert t.va.valence > 1.0 / 3.0
        assert t.archetype is Archetype.CHEERFUL


class TestSimClock:
    def test_no_boundary_before_day_end(self):
        clock = SimClock(day_length_ms=86_400_000.0)
        assert clock.advance_to(86_399_999.0) == []
        assert clock.day_index == 0

    def test_boundary_at_exact_day_end(self):
        clock = SimClock(day_length_ms=86_400_000.0)
        crossed = clock.advance_to(86_400_000.0)
        assert crossed == [(86_400_000.0, 1)]
        assert clock.day_index == 1

    def test_multiple_boundaries_in_order(self):
        clock = SimClock(day_length_ms=1000.0)
        crossed = clock.advance_to(3500.0)
        assert crossed == [(1000.0, 1), (2000.0, 2), (3000.0, 3)]
        assert clock.day_index == 3

    def test_next_boundary_tracks_progress(self):
        clock = SimClock(day_length_ms=1000.0)
        assert clock.next_boundary_ms() == 1000.0
        clock.advance_to(1500.0)
        assert clock.next_boundary_ms() == 2000.0

    def test_backwards_rejected(self):
        clock = SimClock(day_length_ms=1000.0)
        clock.advance_to(500.0)
        with pytest.raises(ValueError):
            clock.advance_to(400.0)

    def test_restored_day_index_offsets_numbering(self):
        clock = SimClock(day_length_ms=1000.0, day_index=7)
        assert clock.advance_to(1000.0) == [(1000.0, 8)]

    def test_advance_delta(self):
        clock = SimClock(day_length_ms=1000.0)
        clock.advance(600.0)
        crossed = clock.advance(600.0)
        assert crossed == [(1000.0, 1)]
        assert clock.t_ms == 1200.0
