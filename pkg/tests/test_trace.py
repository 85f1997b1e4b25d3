import io
import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from constlfu.errors import InvalidArgumentError
from constlfu.trace import (
    OpKind,
    SplitMix64,
    TraceEvent,
    TraceParseError,
    ZipfSampler,
    format_trace,
    gen_mixed,
    gen_round_robin,
    gen_zipf,
    parse_trace,
)


def test_parse_basic():
    events = parse_trace("GET x\nPUT y 01ab\n")
    assert events == [TraceEvent(OpKind.GET, b"x"), TraceEvent(OpKind.PUT, b"y", b"\x01\xab")]


def test_parse_skips_comments_and_blanks():
    assert parse_trace("# comment\n\n") == []
    assert parse_trace(io.StringIO("  # indented\nGET a\n")) == [TraceEvent.get(b"a")]


def test_put_without_value():
    with pytest.raises(TraceParseError, match="line 1"):
        parse_trace("PUT z")


@pytest.mark.parametrize("text, lineno", [
    ("GET a\nFETCH b\n", 2),
    ("GET\n", 1),
    ("GET a b\n", 1),
    ("# c\nGET a\nPUT a zz\n", 3),
    ("PUT a 01 02\n", 1),
    ("GET " + "k" * 4097 + "\n", 1),
])
def test_parse_errors_name_line(text, lineno):
    with pytest.raises(TraceParseError) as info:
        parse_trace(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_event_shape_enforced():
    with pytest.raises(InvalidArgumentError):
        TraceEvent(OpKind.PUT, b"k")
    with pytest.raises(InvalidArgumentError):
        TraceEvent(OpKind.GET, b"k", b"v")
    with pytest.raises(InvalidArgumentError):
        TraceEvent(OpKind.GET, b"")


tokens = st.text(alphabet=st.characters(min_codepoint=33, max_codepoint=0x2FFF), min_size=1, max_size=8).filter(
    lambda t: t.split() == [t]
)
events = st.lists(
    st.one_of(
        tokens.map(lambda t: TraceEvent.get(t.encode())),
        st.tuples(tokens, st.binary(min_size=1, max_size=6)).map(
            lambda kv: TraceEvent.put(kv[0].encode(), kv[1])
        ),
    )
)


@given(events)
def test_format_parse_roundtrip(evs):
    assert parse_trace(format_trace(evs)) == evs


def test_round_robin():
    keys = [e.key for e in gen_round_robin(3, 2)]
    assert keys == [b"k1", b"k2", b"k3"] * 2
    assert len(gen_round_robin(7, 5)) == 35
    with pytest.raises(InvalidArgumentError):
        gen_round_robin(0, 1)


def test_splitmix_reference_vectors():
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]


def test_zipf_deterministic():
    assert gen_zipf(100, 500, 1.0, seed=3) == gen_zipf(100, 500, 1.0, seed=3)
    assert gen_zipf(100, 500, 1.0, seed=3) != gen_zipf(100, 500, 1.0, seed=4)


def test_zipf_skew_and_frequencies():
    n_keys, n_ops = 1_000, 100_000
    counts = Counter(e.key for e in gen_zipf(n_keys, n_ops, 1.0, seed=11))
    assert counts[b"k1"] > counts[b"k100"]
    harmonic = math.fsum(1 / r for r in range(1, n_keys + 1))
    for rank in (1, 2, 10, 100):
        p = 1 / rank / harmonic
        sigma = math.sqrt(n_ops * p * (1 - p))
        assert abs(counts[b"k%d" % rank] - n_ops * p) < 5 * sigma


def test_zipf_large_exponent_concentrates():
    counts = Counter(e.key for e in gen_zipf(50, 2_000, 20.0, seed=1))
    assert counts[b"k1"] >= 1_990


def test_zipf_sampler_edges():
    sampler = ZipfSampler(4, 1.0)
    assert sampler.sample(0.0) == 1
    assert sampler.sample(0.9999999999) == 4
    with pytest.raises(InvalidArgumentError):
        ZipfSampler(4, 0.0)


def test_mixed_trace_ratio():
    evs = gen_mixed(200, 10_000, 1.0, seed=8, put_fraction=0.3)
    puts = sum(e.op is OpKind.PUT for e in evs)
    assert 2_800 < puts < 3_200
    assert all(len(e.value) == 8 for e in evs if e.op is OpKind.PUT)
