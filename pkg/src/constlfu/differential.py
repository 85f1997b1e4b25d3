"""Random operation sequences and transcript capture for cross-policy checks."""
from __future__ import annotations

import random
from typing import Any, Iterable, NamedTuple, Optional

from .errors import CacheError

OP_KINDS = ("insert", "access", "peek", "evict", "remove")
DEFAULT_WEIGHTS = (40, 40, 5, 5, 10)


class Op(NamedTuple):
    kind: str
    key: Optional[bytes] = None
    value: Optional[bytes] = None


def key_pool(size: int) -> list[bytes]:
    return [b"k%d" % i for i in range(size)]


def random_ops(
    seed: int,
    n_ops: int,
    pool_size: int = 512,
    weights: Iterable[int] = DEFAULT_WEIGHTS,
) -> list[Op]:
    """Seeded op sequence over a fixed key pool.

    Key draws are skewed toward the low end of the pool (index = pool * u**2)
    so a handful of keys climb to high counts while the tail churns.
    """
    rng = random.Random(seed)
    pool = key_pool(pool_size)
    kinds = rng.choices(OP_KINDS, weights=list(weights), k=n_ops)
    ops = []
    for i, kind in enumerate(kinds):
        key = pool[int(pool_size * rng.random() ** 2)]
        if kind == "insert":
            ops.append(Op(kind, key, b"v%d" % i))
        elif kind in ("access", "remove"):
            ops.append(Op(kind, key))
        else:
            ops.append(Op(kind))
    return ops


def apply_op(cache: Any, op: Op) -> tuple:
    """Run ``op`` against any LFU-shaped cache; errors become part of the output."""
    try:
        if op.kind == "insert":
            result = cache.insert(op.key, op.value)
        elif op.kind == "access":
            result = cache.access(op.key)
        elif op.kind == "peek":
            result = cache.peek_lfu()
        elif op.kind == "evict":
            result = cache.evict_lfu()
        elif op.kind == "remove":
            result = cache.remove(op.key)
        else:
            raise ValueError(f"unknown op kind {op.kind!r}")
    except CacheError as exc:
        return ("error", type(exc).__name__, str(exc))
    return ("ok", result)


def transcript(cache: Any, ops: Iterable[Op]) -> list[tuple]:
    return [apply_op(cache, op) for op in ops]
