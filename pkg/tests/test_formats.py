"""Instance/solution text formats: round trips and error reporting."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecse.formats import (
    ParseError,
    parse_instance,
    parse_solution,
    serialize_instance,
    serialize_solution,
)
from ecse.model import EGALITARIAN, CommitteeSequence, Instance, PeInstance

from conftest import make_instance, TRIP_ROWS

TRIP_DOC = """\
ecse v1            # weekend-trip election
mode gcse
n 6
m 6
tau 2
k 2
x 4
y 1
levels
1 5 1 5 3 4
4 3 2 6 2 3        # day two
end
"""


def test_parse_trip_document(trip_egalitarian):
    inst = parse_instance(TRIP_DOC)
    assert inst == trip_egalitarian
    assert inst.mode == EGALITARIAN
    assert (inst.n, inst.m, inst.tau, inst.k, inst.x, inst.y) == (6, 6, 2, 2, 4, 1)


def test_keys_in_any_order():
    doc = "ecse v1\nkvec 1 1\ntau 2\nmode qcse\nn 1\nm 2\nk 1\nx 0\ny 1\nlevels\n1\n2\nend\n"
    inst = parse_instance(doc)
    assert isinstance(inst, PeInstance)
    assert inst.kvec == (1, 1)
    assert inst.xvec == (0, 0)  # scalar default
    assert inst.yvec == (1,)


def test_round_trip_is_fixed_point(trip_egalitarian):
    doc = serialize_instance(trip_egalitarian)
    assert parse_instance(doc) == trip_egalitarian
    assert serialize_instance(parse_instance(doc)) == doc
    # idempotence on the noisy source document too
    assert serialize_instance(parse_instance(TRIP_DOC)) == doc


def test_serialize_all_empty_profile():
    inst = make_instance([(0, 0), (0, 0)], mode=EGALITARIAN, k=1, x=0, y=0, m=3)
    doc = serialize_instance(inst)
    assert "0 0" in doc
    assert parse_instance(doc) == inst


def test_zero_agent_instance_round_trip():
    inst = Instance(EGALITARIAN, 0, 3, 2, 1, 0, 1, ((), ()))
    doc = serialize_instance(inst)
    assert parse_instance(doc) == inst


def test_pe_round_trip():
    pe = PeInstance("equitable", 2, 2, 2, (1, 0), (0, -1), (1, 0), ((1, 2), (2, 0)))
    assert parse_instance(serialize_instance(pe)) == pe


def test_dimension_mismatch_error():
    doc = TRIP_DOC.replace("1 5 1 5 3 4", "1 5 1 5 3")
    with pytest.raises(ParseError, match="expected n=6"):
        parse_instance(doc)


def test_out_of_range_error():
    doc = TRIP_DOC.replace("4 3 2 6 2 3", "4 3 2 7 2 3")
    with pytest.raises(ParseError, match="out of range"):
        parse_instance(doc)


@pytest.mark.parametrize(
    "mutate, message",
    [
        (lambda d: d.replace("ecse v1", "ecse v2"), "header"),
        (lambda d: d.replace("mode gcse\n", ""), "missing `mode`"),
        (lambda d: d.replace("k 2\n", ""), "missing `k`"),
        (lambda d: d + "extra\n", "trailing"),
        (lambda d: d.replace("end\n", ""), "missing `end`"),
        (lambda d: d.replace("n 6", "n six"), "integer"),
        (lambda d: d.replace("x 4", "x 4\nx 4"), "duplicate"),
    ],
)
def test_parse_errors_carry_line_numbers(mutate, message):
    with pytest.raises(ParseError, match=message) as err:
        parse_instance(mutate(TRIP_DOC))
    assert err.value.line >= 1


def test_solution_round_trip():
    seq = CommitteeSequence.of([(1, 5), (), (2,)])
    text = serialize_solution(seq)
    assert text == "ecse-sol v1\n3\n1 5\n-\n2\n"
    assert parse_solution(text) == seq


def test_solution_rejects_unsorted():
    with pytest.raises(ParseError, match="strictly increasing"):
        parse_solution("ecse-sol v1\n1\n5 1\n")
    with pytest.raises(ParseError, match="committee lines"):
        parse_solution("ecse-sol v1\n2\n1\n")


@st.composite
def any_instance(draw):
    n = draw(st.integers(0, 5))
    m = draw(st.integers(0, 6))
    tau = draw(st.integers(1, 4))
    mode = draw(st.sampled_from(["egalitarian", "equitable"]))
    rows = tuple(tuple(draw(st.integers(0, m)) for _ in range(n)) for _ in range(tau))
    k, x, y = (draw(st.integers(0, 4)) for _ in range(3))
    if draw(st.booleans()):
        kvec = tuple(draw(st.integers(-2, 4)) for _ in range(tau))
        xvec = tuple(draw(st.integers(-2, 4)) for _ in range(tau))
        yvec = tuple(draw(st.integers(-2, 4)) for _ in range(n))
        return PeInstance(mode, n, m, tau, kvec, xvec, yvec, rows)
    return Instance(mode, n, m, tau, k, x, y, rows)


@given(any_instance())
@settings(max_examples=200)
def test_round_trip_property(inst):
    doc = serialize_instance(inst)
    again = parse_instance(doc)
    assert again == inst
    assert serialize_instance(again) == doc
