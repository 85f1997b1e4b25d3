"""Replay traces against cache policies and aggregate hit/step metrics.

Replay semantics (all policies):

* GET of a cached key is a hit and goes through the policy's access path.
* GET of an absent key is a miss; the key is then inserted with an empty
  value, evicting if the cache is full (cache-on-miss).
* PUT of an absent key inserts it.
* PUT of a cached key counts as an access and replaces the stored value.

Per-event step counts sum the step counters of every core call the event
made. ``post_warmup_*`` counters skip GETs of keys never referenced earlier
in the trace, i.e. compulsory misses. For a round-robin trace that is
exactly the first round.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .baselines import HeapLfuCache, LruCache, OracleLfu
from .errors import InvalidArgumentError
from .lfu import LfuCache, Tiebreak
from .trace import OpKind, TraceEvent

POLICIES = ("lfu", "lfu-heap", "lru", "oracle")


class _LfuLike:
    """Adapter for the LFU-shaped policies (core, heap, oracle)."""

    def __init__(self, cache):
        self.cache = cache

    def get(self, key: bytes) -> tuple[bool, Optional[bytes], int]:
        cache = self.cache
        present = key in cache
        steps = cache.steps.count
        if present:
            cache.access(key)
            return True, None, steps + cache.steps.count
        evicted = cache.insert(key, b"")
        return False, evicted, steps + cache.steps.count

    def put(self, key: bytes, value: bytes) -> tuple[bool, Optional[bytes], int]:
        cache = self.cache
        present = key in cache
        steps = cache.steps.count
        if present:
            cache.access(key)
            steps += cache.steps.count
            self._replace(key, value)
            return True, None, steps + 1
        evicted = cache.insert(key, value)
        return False, evicted, steps + cache.steps.count

    def _replace(self, key: bytes, value: bytes) -> None:
        cache = self.cache
        if isinstance(cache, LfuCache):
            cache.bykey[key].data = value
        elif isinstance(cache, HeapLfuCache):
            cache.replace_value(key, value)
        else:
            cache.entries[key][0] = value


class _Lru:
    def __init__(self, cache: LruCache):
        self.cache = cache

    def get(self, key: bytes) -> tuple[bool, Optional[bytes], int]:
        cache = self.cache
        present = key in cache
        steps = cache.steps.count
        if present:
            cache.get(key)
            return True, None, steps + cache.steps.count
        evicted = cache.put(key, b"")
        return False, evicted, steps + cache.steps.count

    def put(self, key: bytes, value: bytes) -> tuple[bool, Optional[bytes], int]:
        cache = self.cache
        present = key in cache
        steps = cache.steps.count
        evicted = cache.put(key, value)
        return present, evicted, steps + cache.steps.count


def make_policy(policy: str, capacity: int, tiebreak: Tiebreak = "fifo"):
    if policy == "lfu":
        return _LfuLike(LfuCache(capacity, tiebreak))
    if policy == "lfu-heap":
        return _LfuLike(HeapLfuCache(capacity, tiebreak))
    if policy == "oracle":
        return _LfuLike(OracleLfu(capacity, tiebreak))
    if policy == "lru":
        return _Lru(LruCache(capacity))
    raise InvalidArgumentError(f"unknown policy {policy!r}; choose from {', '.join(POLICIES)}")


@dataclass
class StepStats:
    count: int = 0
    total: int = 0
    max: int = 0

    def record(self, steps: int) -> None:
        self.count += 1
        self.total += steps
        if steps > self.max:
            self.max = steps

    @property
    def mean(self) -> float:
        return self.total / self.count if self.count else 0.0

    def merge(self, other: "StepStats") -> "StepStats":
        return StepStats(self.count + other.count, self.total + other.total, max(self.max, other.max))


@dataclass
class ReplayReport:
    policy: str
    capacity: int
    gets: int = 0
    puts: int = 0
    hits: int = 0
    misses: int = 0
    evictions: int = 0
    post_warmup_gets: int = 0
    post_warmup_hits: int = 0
    steps: dict[str, StepStats] = field(
        default_factory=lambda: {"get": StepStats(), "put": StepStats()}
    )
    elapsed_ms: float = 0.0

    @property
    def hit_rate(self) -> float:
        return self.hits / self.gets if self.gets else 0.0

    @property
    def post_warmup_hit_rate(self) -> float:
        return self.post_warmup_hits / self.post_warmup_gets if self.post_warmup_gets else 0.0

    @property
    def all_steps(self) -> StepStats:
        return self.steps["get"].merge(self.steps["put"])

    @property
    def steps_max(self) -> int:
        return self.all_steps.max

    @property
    def steps_mean(self) -> float:
        return self.all_steps.mean

    def counts(self) -> tuple[int, ...]:
        """Everything except wall time, for determinism comparisons."""
        per_op = tuple((s.count, s.total, s.max) for s in self.steps.values())
        return (
            self.gets, self.puts, self.hits, self.misses, self.evictions,
            self.post_warmup_gets, self.post_warmup_hits,
        ) + per_op

    def to_dict(self) -> dict:
        return {
            "policy": self.policy,
            "capacity": self.capacity,
            "gets": self.gets,
            "puts": self.puts,
            "hits": self.hits,
            "misses": self.misses,
            "evictions": self.evictions,
            "hit_rate": self.hit_rate,
            "post_warmup_hit_rate": self.post_warmup_hit_rate,
            "steps_max": self.steps_max,
            "steps_mean": round(self.steps_mean, 6),
            "steps_by_op": {
                op: {"max": s.max, "mean": round(s.mean, 6)} for op, s in self.steps.items()
            },
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def replay(
    policy: str,
    capacity: int,
    events: Iterable[TraceEvent],
    tiebreak: Tiebreak = "fifo",
    preload: Sequence[TraceEvent] = (),
) -> ReplayReport:
    """Run ``events`` through a fresh ``policy`` cache of the given capacity.

    ``preload`` events are applied first without being counted.
    """
    if isinstance(capacity, bool) or not isinstance(capacity, int) or capacity < 1:
        raise InvalidArgumentError(f"capacity must be an integer >= 1, got {capacity!r}")
    adapter = make_policy(policy, capacity, tiebreak)
    report = ReplayReport(policy, capacity)
    seen: set[bytes] = set()
    for event in preload:
        _apply(adapter, event)
        seen.add(event.key)

    get_stats, put_stats = report.steps["get"], report.steps["put"]
    start = time.perf_counter()
    for event in events:
        hit, evicted, steps = _apply(adapter, event)
        if event.op is OpKind.GET:
            report.gets += 1
            if hit:
                report.hits += 1
            else:
                report.misses += 1
            if event.key in seen:
                report.post_warmup_gets += 1
                report.post_warmup_hits += hit
            get_stats.record(steps)
        else:
            report.puts += 1
            put_stats.record(steps)
        if evicted is not None:
            report.evictions += 1
        seen.add(event.key)
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def _apply(adapter, event: TraceEvent):
    if event.op is OpKind.GET:
        return adapter.get(event.key)
    return adapter.put(event.key, event.value)


def compare(
    policies: Sequence[str],
    capacity: int,
    events: Sequence[TraceEvent],
    tiebreak: Tiebreak = "fifo",
) -> list[ReplayReport]:
    events = list(events)
    return [replay(policy, capacity, events, tiebreak) for policy in policies]
