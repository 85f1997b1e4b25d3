"""Reference policies: binary-heap LFU, LRU, and a brute-force LFU oracle.

All three expose the same method names as ``LfuCache`` where the semantics
overlap, so the differential driver can run them interchangeably.
"""
from __future__ import annotations

from typing import Optional

from .errors import DuplicateKeyError, EmptyCacheError, InvalidArgumentError, NotFoundError
from .lfu import CacheKey, CacheValue, Tiebreak, check_key, check_tiebreak, check_value
from .linked import LinkedKeySet
from .steps import StepCounter


def _check_capacity(capacity: int) -> None:
    if isinstance(capacity, bool) or not isinstance(capacity, int) or capacity < 1:
        raise InvalidArgumentError(f"capacity must be an integer >= 1, got {capacity!r}")


class _Entry:
    __slots__ = ("count", "order", "key", "value", "pos")

    def __init__(self, count: int, order: int, key: CacheKey, value: CacheValue, pos: int):
        self.count = count
        self.order = order
        self.key = key
        self.value = value
        self.pos = pos

    def __lt__(self, other: "_Entry") -> bool:
        if self.count != other.count:
            return self.count < other.count
        return self.order < other.order

    def __repr__(self) -> str:
        return f"_Entry({self.key!r}, count={self.count}, order={self.order})"


class HeapLfuCache:
    """LFU over a binary min-heap keyed by (usage count, arrival order).

    Every time a key reaches a new count it draws a fresh arrival number from
    a global sequence, which reproduces ``LfuCache``'s FIFO-within-count rule
    exactly. For ``tiebreak="lifo"`` the arrival number is negated.
    Insert, access and evict cost O(log n) heap moves.
    """

    def __init__(self, capacity: int, tiebreak: Tiebreak = "fifo") -> None:
        _check_capacity(capacity)
        check_tiebreak(tiebreak)
        self.capacity = capacity
        self.tiebreak = tiebreak
        self.steps = StepCounter()
        self.heap: list[_Entry] = []
        self.table: dict[CacheKey, _Entry] = {}
        self._seq = 0

    def __len__(self) -> int:
        return len(self.heap)

    def __contains__(self, key: CacheKey) -> bool:
        self.steps.count = 1
        return key in self.table

    def _next_order(self) -> int:
        self._seq += 1
        return self._seq if self.tiebreak == "fifo" else -self._seq

    def insert(self, key: CacheKey, value: CacheValue) -> Optional[CacheKey]:
        steps = self.steps
        steps.count = 1
        check_key(key)
        check_value(value)
        if key in self.table:
            raise DuplicateKeyError(key)
        evicted = None
        if len(self.heap) >= self.capacity:
            evicted = self._pop_root()[0]
        entry = _Entry(1, self._next_order(), key, value, len(self.heap))
        self.heap.append(entry)
        self.table[key] = entry
        steps.count += 2
        self._sift_up(entry.pos)
        return evicted

    def access(self, key: CacheKey) -> CacheValue:
        self.steps.count = 1
        entry = self.table.get(key)
        if entry is None:
            raise NotFoundError(key)
        entry.count += 1
        entry.order = self._next_order()
        self.steps.count += 2
        self._sift_down(entry.pos)
        return entry.value

    def peek_lfu(self) -> tuple[CacheKey, CacheValue, int]:
        self.steps.count = 1
        if not self.heap:
            raise EmptyCacheError()
        root = self.heap[0]
        return root.key, root.value, root.count

    def evict_lfu(self) -> tuple[CacheKey, CacheValue]:
        self.steps.count = 1
        if not self.heap:
            raise EmptyCacheError()
        return self._pop_root()

    def remove(self, key: CacheKey) -> Optional[CacheValue]:
        self.steps.count = 1
        entry = self.table.get(key)
        if entry is None:
            return None
        self._remove_at(entry.pos)
        return entry.value

    def frequency(self, key: CacheKey) -> int:
        self.steps.count = 1
        entry = self.table.get(key)
        if entry is None:
            raise NotFoundError(key)
        return entry.count

    def replace_value(self, key: CacheKey, value: CacheValue) -> None:
        self.table[key].value = value

    def _pop_root(self) -> tuple[CacheKey, CacheValue]:
        root = self.heap[0]
        self._remove_at(0)
        return root.key, root.value

    def _remove_at(self, pos: int) -> None:
        heap = self.heap
        entry = heap[pos]
        last = heap.pop()
        del self.table[entry.key]
        self.steps.count += 3
        if last is entry:
            return
        heap[pos] = last
        last.pos = pos
        self.steps.count += 2
        if pos > 0 and last < heap[(pos - 1) >> 1]:
            self.steps.count += 1
            self._sift_up(pos)
        else:
            self._sift_down(pos)

    def _sift_up(self, pos: int) -> None:
        heap = self.heap
        entry = heap[pos]
        steps = self.steps
        while pos > 0:
            parent_pos = (pos - 1) >> 1
            parent = heap[parent_pos]
            steps.count += 2
            if not entry < parent:
                break
            heap[pos] = parent
            parent.pos = pos
            steps.count += 2
            pos = parent_pos
        heap[pos] = entry
        entry.pos = pos
        steps.count += 2

    def _sift_down(self, pos: int) -> None:
        heap = self.heap
        n = len(heap)
        entry = heap[pos]
        steps = self.steps
        while True:
            child = 2 * pos + 1
            if child >= n:
                break
            right = child + 1
            steps.count += 2
            if right < n:
                steps.count += 2
                if heap[right] < heap[child]:
                    child = right
            steps.count += 1
            if not heap[child] < entry:
                break
            heap[pos] = heap[child]
            heap[pos].pos = pos
            steps.count += 2
            pos = child
        heap[pos] = entry
        entry.pos = pos
        steps.count += 2

    def validate(self) -> list[str]:
        problems = []
        heap = self.heap
        for i, entry in enumerate(heap):
            if entry.pos != i:
                problems.append(f"entry {entry.key!r} records pos {entry.pos}, sits at {i}")
            if self.table.get(entry.key) is not entry:
                problems.append(f"entry {entry.key!r} at {i} is not the indexed entry")
            if i > 0 and entry < heap[(i - 1) >> 1]:
                problems.append(f"heap property violated at slot {i}")
        if len(self.table) != len(heap):
            problems.append(f"table holds {len(self.table)} keys, heap {len(heap)}")
        if len(heap) > self.capacity:
            problems.append(f"size {len(heap)} exceeds capacity {self.capacity}")
        return problems


class LruCache:
    """Least-recently-used cache: a hash table plus a recency-ordered linked set."""

    def __init__(self, capacity: int) -> None:
        _check_capacity(capacity)
        self.capacity = capacity
        self.steps = StepCounter()
        self.values: dict[CacheKey, CacheValue] = {}
        self.order = LinkedKeySet(self.steps)

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, key: CacheKey) -> bool:
        self.steps.count = 1
        return key in self.values

    def get(self, key: CacheKey) -> CacheValue:
        self.steps.count = 1
        if key not in self.values:
            raise NotFoundError(key)
        self.order.move_to_end(key)
        return self.values[key]

    def put(self, key: CacheKey, value: CacheValue) -> Optional[CacheKey]:
        """Insert or overwrite ``key``; returns the key evicted to make room, if any."""
        self.steps.count = 1
        check_key(key)
        check_value(value)
        evicted = None
        if key in self.values:
            self.order.move_to_end(key)
        else:
            if len(self.values) >= self.capacity:
                evicted = self._evict()[0]
            self.order.add(key)
        self.values[key] = value
        self.steps.count += 1
        return evicted

    def evict(self) -> tuple[CacheKey, CacheValue]:
        self.steps.count = 1
        if not self.values:
            raise EmptyCacheError()
        return self._evict()

    def _evict(self) -> tuple[CacheKey, CacheValue]:
        key = self.order.oldest()
        self.order.remove(key)
        self.steps.count += 1
        return key, self.values.pop(key)

    def keys(self) -> list[CacheKey]:
        """Keys from least to most recently used."""
        return list(self.order)

    def validate(self) -> list[str]:
        problems = self.order.validate()
        if set(self.order) != set(self.values):
            problems.append("recency list and value table disagree on membership")
        if len(self.values) > self.capacity:
            problems.append(f"size {len(self.values)} exceeds capacity {self.capacity}")
        return problems


class OracleLfu:
    """Brute-force LFU: a flat dict and linear scans. Slow, obviously correct.

    Each key carries ``[value, count, arrival]`` where ``arrival`` is renewed
    from a global counter whenever the count changes.
    """

    def __init__(self, capacity: int, tiebreak: Tiebreak = "fifo") -> None:
        _check_capacity(capacity)
        check_tiebreak(tiebreak)
        self.capacity = capacity
        self.tiebreak = tiebreak
        self.entries: dict[CacheKey, list] = {}
        self.steps = StepCounter()
        self._clock = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: CacheKey) -> bool:
        self.steps.count = 1
        return key in self.entries

    def _tick(self) -> int:
        self._clock += 1
        return self._clock

    def _victim(self) -> CacheKey:
        if not self.entries:
            raise EmptyCacheError()
        best = None
        best_rank = None
        for key, (_, count, arrival) in self.entries.items():
            self.steps.count += 1
            rank = (count, arrival if self.tiebreak == "fifo" else -arrival)
            if best_rank is None or rank < best_rank:
                best, best_rank = key, rank
        return best

    def insert(self, key: CacheKey, value: CacheValue) -> Optional[CacheKey]:
        self.steps.count = 0
        check_key(key)
        check_value(value)
        if key in self.entries:
            raise DuplicateKeyError(key)
        evicted = None
        if len(self.entries) >= self.capacity:
            evicted = self._victim()
            del self.entries[evicted]
        self.entries[key] = [value, 1, self._tick()]
        return evicted

    def access(self, key: CacheKey) -> CacheValue:
        self.steps.count = 1
        if key not in self.entries:
            raise NotFoundError(key)
        entry = self.entries[key]
        entry[1] += 1
        entry[2] = self._tick()
        return entry[0]

    def peek_lfu(self) -> tuple[CacheKey, CacheValue, int]:
        self.steps.count = 0
        key = self._victim()
        value, count, _ = self.entries[key]
        return key, value, count

    def evict_lfu(self) -> tuple[CacheKey, CacheValue]:
        self.steps.count = 0
        key = self._victim()
        return key, self.entries.pop(key)[0]

    def remove(self, key: CacheKey) -> Optional[CacheValue]:
        self.steps.count = 1
        entry = self.entries.pop(key, None)
        return None if entry is None else entry[0]

    def frequency(self, key: CacheKey) -> int:
        self.steps.count = 1
        if key not in self.entries:
            raise NotFoundError(key)
        return self.entries[key][1]

    def step(self, op):
        """Apply one differential-test operation and return its visible output."""
        from .differential import apply_op

        return apply_op(self, op)


def oracle_step(oracle: OracleLfu, op):
    return oracle.step(op)
