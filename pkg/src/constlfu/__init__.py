"""Constant-time LFU cache, baseline policies, and a trace-replay harness."""
from .baselines import HeapLfuCache, LruCache, OracleLfu, oracle_step
from .errors import (
    CacheError,
    DuplicateKeyError,
    EmptyCacheError,
    InvalidArgumentError,
    NotFoundError,
)
from .lfu import STEP_BOUND, FrequencyNode, LfuCache, LfuItem, new_cache
from .replay import ReplayReport, compare, replay
from .steps import StepCounter
from .trace import TraceEvent, TraceParseError, gen_round_robin, gen_zipf, parse_trace

__all__ = [
    "CacheError",
    "DuplicateKeyError",
    "EmptyCacheError",
    "FrequencyNode",
    "HeapLfuCache",
    "InvalidArgumentError",
    "LfuCache",
    "LfuItem",
    "LruCache",
    "NotFoundError",
    "OracleLfu",
    "ReplayReport",
    "STEP_BOUND",
    "StepCounter",
    "TraceEvent",
    "TraceParseError",
    "compare",
    "gen_round_robin",
    "gen_zipf",
    "new_cache",
    "oracle_step",
    "parse_trace",
    "replay",
]
