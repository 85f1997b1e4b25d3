"""Step-count benchmark: constant-time LFU against the heap LFU.

For each size ``n`` both policies get a capacity-``n`` cache preloaded with
keys k1..kn, each referenced twice so the whole cache starts at usage count
2. Both then replay the same mixed trace: 70% GET / 30% PUT with keys drawn
Zipf(1.0) over 2n ranks, so misses keep forcing evictions.

Warm preloading puts each policy on its most expensive path early at every
size: the first misses evict from the count-2 population and then churn a
count-1 node that repeatedly empties and is rebuilt (for the heap, each such
eviction sinks a leaf through all log2(n) levels). The per-size maximum
therefore reflects the cost bound rather than which paths a random workload
happened to reach.
"""
from __future__ import annotations

from dataclasses import dataclass

from .replay import replay
from .trace import TraceEvent, gen_mixed, rank_key

DEFAULT_SIZES = (64, 1024, 16384, 262144)
BENCH_POLICIES = ("lfu", "lfu-heap")


@dataclass
class BenchConfig:
    sizes: tuple[int, ...] = DEFAULT_SIZES
    ops_per_size: int = 20000
    seed: int = 1
    exponent: float = 1.0
    put_fraction: float = 0.3
    key_space_factor: int = 2


def run_bench(config: BenchConfig) -> list[dict]:
    rows = []
    for n in config.sizes:
        keys = [rank_key(r) for r in range(1, n + 1)]
        preload = [TraceEvent.put(k, b"") for k in keys] + [TraceEvent.get(k) for k in keys]
        events = gen_mixed(
            n * config.key_space_factor,
            config.ops_per_size,
            config.exponent,
            config.seed,
            config.put_fraction,
        )
        for policy in BENCH_POLICIES:
            report = replay(policy, n, events, preload=preload)
            rows.append(
                {
                    "size": n,
                    "policy": policy,
                    "ops": config.ops_per_size,
                    "steps_max": report.steps_max,
                    "steps_mean": round(report.steps_mean, 6),
                    "hit_rate": report.hit_rate,
                    "elapsed_ms": round(report.elapsed_ms, 3),
                }
            )
    return rows
