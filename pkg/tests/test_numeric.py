from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distractorgen import Config
from distractorgen.errors import InsufficientCandidatesError, PerturbError, RenderError
from distractorgen.numeric import (
    PerturbStrategy,
    WEEKDAYS,
    generate_numeric_distractors,
    numeric_distractor_draws,
    perturb,
    recognize_numeric,
    render,
)

# Surfaces the recognizer must accept; used for round-trip checks.
RECOGNIZED_SURFACES = [
    "0", "7", "42", "100", "2020", "1999", "3000", "1,234", "12,345,678",
    "3.5", "0.25", "1st", "2nd", "3rd", "4th", "11th", "21st", "112th",
    "two", "Two", "twelve", "twenty", "thirty", "ninety", "twenty-one",
    "forty-seven", "ninety-nine", "first", "third", "twentieth", "thirtieth",
    "twenty-first", "sixty-fourth", "Friday", "FRIDAY", "Monday", "Sunday",
    "January", "May", "December", "9:30", "09:30", "23:59", "0:05",
    "1990 to 1995", "5 to 10", "9:00 to 17:00", "10-20",
    "by 2020", "about 50", "75 percent", "by 5 to 10",
]


class TestRecognize:
    def test_friday_is_weekday_five(self):
        v = recognize_numeric("Friday")
        assert v is not None
        assert v.kind == "weekday"
        assert v.value == 5

    def test_year(self):
        v = recognize_numeric("2020")
        assert v.kind == "year"
        assert v.value == 2020

    def test_non_numeric_token(self):
        assert recognize_numeric("cat") is None

    def test_lowercase_day_name_rejected(self):
        # avoids misreading the modal "may" / verb "march"
        assert recognize_numeric("friday") is None
        assert recognize_numeric("may") is None

    def test_month(self):
        v = recognize_numeric("March")
        assert v.kind == "month"
        assert v.value == 3

    def test_clock(self):
        v = recognize_numeric("9:30")
        assert v.kind == "time-of-day"
        assert v.value == Fraction(19, 2)

    def test_grouped_cardinal(self):
        v = recognize_numeric("1,234")
        assert v.kind == "cardinal"
        assert v.value == 1234

    def test_irregular_grouping_rejected(self):
        assert recognize_numeric("12,34") is None

    def test_decimal(self):
        v = recognize_numeric("3.50")
        assert v.value == Fraction(7, 2)

    def test_digit_ordinal_needs_correct_suffix(self):
        assert recognize_numeric("3rd").kind == "ordinal"
        assert recognize_numeric("3st") is None

    def test_word_cardinal(self):
        assert recognize_numeric("two").kind == "word-cardinal"
        assert recognize_numeric("forty-seven").value == 47

    def test_word_ordinal(self):
        v = recognize_numeric("twenty-first")
        assert v.kind == "word-ordinal"
        assert v.value == 21

    def test_range(self):
        v = recognize_numeric("1990 to 1995")
        assert v.kind == "range"
        assert v.value == (1990, 1995)
        assert v.surface_format.endpoint_kind == "year"

    def test_inverted_range_rejected(self):
        assert recognize_numeric("1995 to 1990") is None

    def test_quantifier_prefix(self):
        v = recognize_numeric("by 2020")
        assert v.kind == "year"
        assert v.unit == "by"

    def test_quantifier_suffix(self):
        v = recognize_numeric("75 percent")
        assert v.kind == "cardinal"
        assert v.unit == "percent"

    @pytest.mark.parametrize("surface", RECOGNIZED_SURFACES)
    def test_round_trip(self, surface):
        v = recognize_numeric(surface)
        assert v is not None, surface
        assert render(v) == surface


class TestRender:
    def test_weekday_shift_renders_previous_day(self):
        v = recognize_numeric("Friday")
        shifted = perturb(v, PerturbStrategy("unit_shift", delta=-1), Random(0))
        assert render(shifted) == "Thursday"

    def test_year_increment(self):
        v = recognize_numeric("2020")
        shifted = perturb(v, PerturbStrategy("unit_shift", delta=1), Random(0))
        assert render(shifted) == "2021"

    def test_word_cardinal_format_family_preserved(self):
        v = recognize_numeric("two")
        shifted = perturb(v, PerturbStrategy("unit_shift", delta=1), Random(0))
        assert render(shifted) == "three"

    def test_capitalized_word(self):
        v = recognize_numeric("Two")
        shifted = perturb(v, PerturbStrategy("unit_shift", delta=1), Random(0))
        assert render(shifted) == "Three"

    def test_uppercase_weekday(self):
        v = recognize_numeric("FRIDAY")
        shifted = perturb(v, PerturbStrategy("unit_shift", delta=-1), Random(0))
        assert render(shifted) == "THURSDAY"

    def test_out_of_domain_weekday_rejected(self):
        from dataclasses import replace
        v = recognize_numeric("Friday")
        with pytest.raises(RenderError):
            render(replace(v, value=Fraction(9)))


def _weekday_oracle(value: int, delta: int) -> int:
    return (value - 1 + delta) % 7 + 1


class TestPerturb:
    def test_weekday_unit_shift_all_cases(self):
        # Exhaustive: 7 start values x 4 deltas against a modular oracle.
        for start in range(1, 8):
            surface = WEEKDAYS[start - 1].capitalize()
            v = recognize_numeric(surface)
            for delta in (-2, -1, 1, 2):
                out = perturb(v, PerturbStrategy("unit_shift", delta=delta), Random(0))
                assert out.value == _weekday_oracle(start, delta), (start, delta)
                assert 1 <= out.value <= 7

    def test_weekday_wraparound_low_edge(self):
        v = recognize_numeric("Monday")
        out = perturb(v, PerturbStrategy("unit_shift", delta=-1), Random(0))
        assert out.value == 7

    def test_local_random_window(self):
        v = recognize_numeric("2020")
        for seed in (42, *range(40)):
            out = perturb(v, PerturbStrategy("local_random", window=10), Random(seed))
            assert 2010 <= out.value <= 2030
            assert out.value != 2020

    def test_global_random_domain(self):
        v = recognize_numeric("2020")
        for seed in range(40):
            out = perturb(v, PerturbStrategy("global_random", bounds=(1900, 2100)), Random(seed))
            assert 1900 <= out.value <= 2100
            assert out.value != 2020

    def test_unit_shift_outside_domain_fails(self):
        v = recognize_numeric("1st")
        with pytest.raises(PerturbError):
            perturb(v, PerturbStrategy("unit_shift", delta=-2), Random(0))

    def test_local_window_clamped_at_domain_edge(self):
        v = recognize_numeric("0:30")
        # hours domain is [0, 23]; a 1-hour window around hour 0 only has +1
        out = perturb(v, PerturbStrategy("local_random", window=1), Random(0))
        assert out.value == Fraction(3, 2)  # 1:30

    def test_clock_keeps_minutes(self):
        v = recognize_numeric("9:30")
        out = perturb(v, PerturbStrategy("global_random", bounds=(0, 23)), Random(3))
        assert render(out).endswith(":30")

    def test_range_perturbs_one_endpoint(self):
        v = recognize_numeric("1990 to 1995")
        out = perturb(v, PerturbStrategy("unit_shift", delta=1), Random(1))
        lo, hi = out.value
        assert (lo, hi) != (1990, 1995)
        assert [lo, hi].count(Fraction(1990)) + [lo, hi].count(Fraction(1995)) == 1
        assert lo <= hi

    @settings(max_examples=60)
    @given(
        start=st.integers(min_value=1, max_value=7),
        delta=st.sampled_from([-2, -1, 1, 2]),
    )
    def test_weekday_shift_never_identity(self, start, delta):
        v = recognize_numeric(WEEKDAYS[start - 1].capitalize())
        out = perturb(v, PerturbStrategy("unit_shift", delta=delta), Random(0))
        assert out.value != v.value

    @settings(max_examples=60)
    @given(year=st.integers(min_value=1900, max_value=2100), seed=st.integers(0, 2**16))
    def test_unit_shift_magnitude_for_years(self, year, seed):
        v = recognize_numeric(str(year))
        assert v.kind == "year"
        rng = Random(seed)
        delta = rng.choice((-2, -1, 1, 2))
        try:
            out = perturb(v, PerturbStrategy("unit_shift", delta=delta), rng)
        except PerturbError:
            return  # stepped outside the renderable year domain
        assert abs(out.value - v.value) in (1, 2)


class TestGenerateDistractors:
    def test_three_distinct_years(self, cfg):
        texts = generate_numeric_distractors("2020", 3, cfg, Random(7))
        assert len(texts) == 3
        assert len(set(texts)) == 3
        assert "2020" not in texts

    def test_three_distinct_weekdays(self, cfg):
        texts = generate_numeric_distractors("Friday", 3, cfg, Random(5))
        assert len(set(texts)) == 3
        assert all(t != "Friday" for t in texts)
        assert all(t.casefold() in WEEKDAYS for t in texts)

    def test_seven_weekday_distractors_impossible(self, cfg):
        with pytest.raises(InsufficientCandidatesError) as excinfo:
            generate_numeric_distractors("Friday", 7, cfg, Random(5))
        assert len(excinfo.value.found) == 6  # every other weekday was found

    def test_deterministic_under_seed(self, cfg):
        a = generate_numeric_distractors("2020", 3, cfg, Random(123))
        b = generate_numeric_distractors("2020", 3, cfg, Random(123))
        assert a == b

    def test_quantifier_kept(self, cfg):
        draws = numeric_distractor_draws("75 percent", 3, cfg, Random(2))
        assert all(text.endswith(" percent") for text, _ in draws)

    def test_non_numeric_rejected(self, cfg):
        with pytest.raises(ValueError):
            generate_numeric_distractors("cat", 3, cfg, Random(0))

    def test_target_word_accepted(self, cfg):
        from distractorgen.annotation import TargetWord
        target = TargetWord(token_range=(0, 0), surface="Friday",
                            target_type="T1Temporal", lemma="friday")
        texts = generate_numeric_distractors(target, 3, cfg, Random(5))
        assert texts == generate_numeric_distractors("Friday", 3, cfg, Random(5))
