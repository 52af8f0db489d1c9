import pytest

from sproutgames.bs2 import Bs2Position
from sproutgames.circular import CircularState
from sproutgames.notation import NotationError, format_position, parse_position


def test_parse_single_circular():
    comps = parse_position("CS[3,1,4,1]")
    assert comps == [CircularState((3, 1, 4, 1))]


def test_parse_sum():
    comps = parse_position("CS[1,1,1,1]+CS[0,1,0,1]")
    assert [tuple(c) for c in comps] == [(1, 1, 1, 1), (0, 1, 0, 1)]


def test_parse_bs2():
    comps = parse_position("BS2[3,4]")
    assert len(comps) == 1
    assert isinstance(comps[0], Bs2Position)
    assert comps[0].p == 3 and comps[0].q == 4 and comps[0].phase == "start"


def test_parse_mixed_sum():
    comps = parse_position("BS2[3,3]+CS[2,0,1]")
    assert isinstance(comps[0], Bs2Position)
    assert tuple(comps[1]) == (2, 0, 1)


def test_whitespace_insensitive():
    comps = parse_position("  CS [ 3 , 1 , 4 , 1 ]  +  BS2 [ 5 , 6 ] ")
    assert tuple(comps[0]) == (3, 1, 4, 1)
    assert comps[1].notation() == "BS2[5,6]"


def test_format_round_trip():
    text = "CS[3,1,4,1]+CS[0,2,5]"
    assert format_position(parse_position(text)) == text


@pytest.mark.parametrize(
    "text, offset_of_error",
    [
        ("", 0),
        ("XS[1,2,3]", 0),
        ("CS[1,2]", 2),              # too few entries, reported at the bracket
        ("CS[1,2,]", 7),             # missing integer
        ("CS[1,2,3", 8),             # missing closing bracket
        ("CS[1,-2,3]", 5),           # negative count
        ("CS[1,2,3]~", 9),           # junk instead of '+'
        ("CS[1,2,3]+", 10),          # dangling '+'
        ("BS2[3]", 3),               # arity
        ("BS2[3,4,5]", 3),           # arity
        ("BS2[2,4]", 3),             # below the p, q >= 3 floor
    ],
)
def test_parse_errors_carry_offsets(text, offset_of_error):
    with pytest.raises(NotationError) as err:
        parse_position(text)
    assert err.value.position == offset_of_error
    assert f"offset {offset_of_error}" in str(err.value)
