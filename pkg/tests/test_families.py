from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclesat.families import CycleFamily, FamilyError, parse_family


@pytest.mark.parametrize("text,canon", [
    ("{4,5}", "{4,5}"),
    ("{5, 4}", "{4,5}"),
    ("{3,4,5,6}", "[3,6]"),
    ("[4,9]", "[4,9]"),
    ("[5,inf)", "[5,inf)"),
    ("[5,+inf)", "[5,inf)"),
    ("[5,∞)", "[5,inf)"),
    ("2Z+2", "2Z+2"),
    ("3z+1", "3Z+1"),
    ("3Z", "3Z"),
    ("1Z+4", "[5,inf)"),
])
def test_parse_canonical(text, canon):
    fam = parse_family(text)
    assert str(fam) == canon
    assert parse_family(str(fam)) == fam


@pytest.mark.parametrize("text", ["", "{}", "{2,4}", "[4,3]", "[2,5]", "2Z+0", "0Z+3", "Z+2", "{4,x}"])
def test_parse_rejects(text):
    with pytest.raises(FamilyError):
        parse_family(text)


def test_membership():
    even = parse_family("2Z+2")
    assert [l for l in range(3, 12) if even.contains(l)] == [4, 6, 8, 10]
    assert parse_family("3Z+1").truncate(13) == (4, 7, 10, 13)
    assert parse_family("[5,inf)").truncate(7) == (5, 6, 7)
    assert parse_family("{4,5}").truncate(4) == (4,)
    assert parse_family("{6}").truncate(5) == ()
    with pytest.raises(FamilyError):
        even.contains(2)


def test_min_length_and_finiteness():
    assert parse_family("2Z+2").min_length() == 4
    assert parse_family("3Z").min_length() == 3
    assert parse_family("[4,9]").is_finite()
    assert not parse_family("[4,inf)").is_finite()


@given(st.sets(st.integers(3, 30), min_size=1, max_size=8), st.integers(3, 40))
def test_finite_truncation_matches_set(lengths, n):
    fam = CycleFamily.finite(lengths)
    assert fam.truncate(n) == tuple(sorted(l for l in lengths if l <= n))
    assert parse_family(str(fam)) == fam


@given(st.integers(1, 6), st.integers(-3, 8), st.integers(3, 40))
def test_progression_truncation(step, offset, n):
    if step + offset < 3:
        with pytest.raises(FamilyError):
            CycleFamily.progression(step, offset)
        return
    fam = CycleFamily.progression(step, offset)
    want = tuple(step * i + offset for i in range(1, n + 1) if 3 <= step * i + offset <= n)
    assert fam.truncate(n) == want
