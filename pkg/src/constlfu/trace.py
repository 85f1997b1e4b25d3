"""Trace events: text format, parsing, and synthetic generators.

Trace grammar, one event per line::

    GET <key>
    PUT <key> <hex-value>

Blank lines and lines starting with ``#`` are ignored. Keys are
whitespace-free tokens, stored as their UTF-8 bytes.
"""
from __future__ import annotations

import bisect
import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO, Union

from .errors import InvalidArgumentError
from .lfu import MAX_KEY_BYTES

MASK64 = (1 << 64) - 1


class OpKind(enum.Enum):
    GET = "GET"
    PUT = "PUT"


@dataclass(frozen=True)
class TraceEvent:
    op: OpKind
    key: bytes
    value: Optional[bytes] = None

    def __post_init__(self):
        if self.op is OpKind.PUT and self.value is None:
            raise InvalidArgumentError("PUT event requires a value")
        if self.op is OpKind.GET and self.value is not None:
            raise InvalidArgumentError("GET event carries no value")
        if not 0 < len(self.key) <= MAX_KEY_BYTES:
            raise InvalidArgumentError(f"key length {len(self.key)} out of range")

    @classmethod
    def get(cls, key: bytes) -> "TraceEvent":
        return cls(OpKind.GET, key)

    @classmethod
    def put(cls, key: bytes, value: bytes) -> "TraceEvent":
        return cls(OpKind.PUT, key, value)

    def to_line(self) -> str:
        if self.op is OpKind.GET:
            return f"GET {self.key.decode()}"
        return f"PUT {self.key.decode()} {self.value.hex()}"


class TraceParseError(ValueError):
    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


def parse_trace(source: Union[str, TextIO, Iterable[str]]) -> list[TraceEvent]:
    """Parse trace text (a string, open file, or iterable of lines)."""
    lines = source.splitlines() if isinstance(source, str) else source
    events = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        op = fields[0]
        if op == "GET":
            if len(fields) != 2:
                raise TraceParseError(lineno, f"GET takes exactly one key, got {len(fields) - 1} fields")
            key = _parse_key(fields[1], lineno)
            events.append(TraceEvent(OpKind.GET, key))
        elif op == "PUT":
            if len(fields) == 2:
                raise TraceParseError(lineno, "PUT without value")
            if len(fields) != 3:
                raise TraceParseError(lineno, f"PUT takes a key and a hex value, got {len(fields) - 1} fields")
            key = _parse_key(fields[1], lineno)
            try:
                value = bytes.fromhex(fields[2])
            except ValueError:
                raise TraceParseError(lineno, f"value {fields[2]!r} is not hex") from None
            events.append(TraceEvent(OpKind.PUT, key, value))
        else:
            raise TraceParseError(lineno, f"unknown operation {op!r}")
    return events


def _parse_key(token: str, lineno: int) -> bytes:
    key = token.encode("utf-8")
    if len(key) > MAX_KEY_BYTES:
        raise TraceParseError(lineno, f"key longer than {MAX_KEY_BYTES} bytes")
    return key


def format_trace(events: Iterable[TraceEvent]) -> str:
    return "".join(event.to_line() + "\n" for event in events)


def rank_key(rank: int) -> bytes:
    return b"k%d" % rank


def gen_round_robin(n_keys: int, rounds: int) -> list[TraceEvent]:
    """``rounds`` passes of GET k1 .. GET k<n_keys>."""
    if n_keys < 1 or rounds < 1:
        raise InvalidArgumentError("n_keys and rounds must be >= 1")
    one_round = [TraceEvent(OpKind.GET, rank_key(r)) for r in range(1, n_keys + 1)]
    return one_round * rounds


class SplitMix64:
    """Seeded 64-bit generator (Steele, Lea and Flood's SplitMix64)."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


class ZipfSampler:
    """Inverse-CDF sampler for ranks 1..n with P(rank r) proportional to r**-exponent."""

    def __init__(self, n_keys: int, exponent: float):
        if n_keys < 1:
            raise InvalidArgumentError("n_keys must be >= 1")
        if not exponent > 0:
            raise InvalidArgumentError("exponent must be > 0")
        self.n_keys = n_keys
        self.cumulative = list(
            itertools.accumulate(r ** -exponent for r in range(1, n_keys + 1))
        )

    def sample(self, u: float) -> int:
        target = u * self.cumulative[-1]
        return min(bisect.bisect_right(self.cumulative, target), self.n_keys - 1) + 1


def gen_zipf(n_keys: int, n_ops: int, exponent: float, seed: int) -> list[TraceEvent]:
    """``n_ops`` GETs whose key ranks follow a Zipf law; rank 1 is hottest."""
    if n_ops < 0:
        raise InvalidArgumentError("n_ops must be >= 0")
    sampler = ZipfSampler(n_keys, exponent)
    rng = SplitMix64(seed)
    keys = [rank_key(r) for r in range(1, n_keys + 1)]
    return [TraceEvent(OpKind.GET, keys[sampler.sample(rng.random()) - 1]) for _ in range(n_ops)]


def gen_mixed(
    n_keys: int,
    n_ops: int,
    exponent: float,
    seed: int,
    put_fraction: float = 0.3,
) -> list[TraceEvent]:
    """Zipf-keyed GET/PUT mix; PUT values are 8 pseudo-random bytes."""
    if not 0.0 <= put_fraction <= 1.0:
        raise InvalidArgumentError("put_fraction must be within [0, 1]")
    sampler = ZipfSampler(n_keys, exponent)
    rng = SplitMix64(seed)
    keys = [rank_key(r) for r in range(1, n_keys + 1)]
    events = []
    for _ in range(n_ops):
        is_put = rng.random() < put_fraction
        key = keys[sampler.sample(rng.random()) - 1]
        if is_put:
            events.append(TraceEvent(OpKind.PUT, key, rng.next_u64().to_bytes(8, "big")))
        else:
            events.append(TraceEvent(OpKind.GET, key))
    return events
