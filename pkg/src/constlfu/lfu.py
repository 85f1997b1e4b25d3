"""Constant-time LFU cache.

Two linked structures cooperate:

* the *frequency list*, a circular doubly linked list of ``FrequencyNode``
  objects ordered by strictly increasing usage count and anchored by a
  value-0 sentinel head;
* per node, an insertion-ordered set of the keys currently at that count.

A hash table maps each key to an ``LfuItem`` holding the value and a link
back to its frequency node. Every public operation touches a bounded number
of links, so insert, access, peek and evict run in O(1) regardless of size::

    head(0) <-> 1:[x, y] <-> 2:[z, a] <-> 5:[b, c] <-> head(0)

Ties inside the lowest-count node are broken FIFO by default (the key that
arrived at that count first is evicted first); ``tiebreak="lifo"`` evicts
the most recent arrival instead.
"""
from __future__ import annotations

from typing import Iterator, Literal, Optional

from .errors import (
    DuplicateKeyError,
    EmptyCacheError,
    InvalidArgumentError,
    NotFoundError,
)
from .linked import LinkedKeySet
from .steps import StepCounter

CacheKey = bytes
CacheValue = bytes
Tiebreak = Literal["fifo", "lifo"]

MAX_KEY_BYTES = 4096

# Largest step count any single public operation may record. Measured worst
# case is an insert that evicts and then creates the frequency-1 node.
STEP_BOUND = 64


def check_key(key: object) -> None:
    if not isinstance(key, bytes):
        raise InvalidArgumentError(f"key must be bytes, got {type(key).__name__}")
    if not 0 < len(key) <= MAX_KEY_BYTES:
        raise InvalidArgumentError(
            f"key length must be in 1..{MAX_KEY_BYTES}, got {len(key)}"
        )


def check_value(value: object) -> None:
    if not isinstance(value, bytes):
        raise InvalidArgumentError(f"value must be bytes, got {type(value).__name__}")


def check_tiebreak(tiebreak: str) -> None:
    if tiebreak not in ("fifo", "lifo"):
        raise InvalidArgumentError(f"tiebreak must be 'fifo' or 'lifo', got {tiebreak!r}")


class FrequencyNode:
    __slots__ = ("value", "items", "prev", "next")

    def __init__(self, steps: Optional[StepCounter] = None) -> None:
        self.value = 0
        self.items = LinkedKeySet(steps)
        self.prev = self
        self.next = self

    def __repr__(self) -> str:
        return f"FrequencyNode({self.value}, {list(self.items)!r})"


class LfuItem:
    __slots__ = ("data", "parent")

    def __init__(self, data: CacheValue, parent: FrequencyNode) -> None:
        self.data = data
        self.parent = parent

    def __repr__(self) -> str:
        return f"LfuItem({self.data!r}, freq={self.parent.value})"


def new_freq_node(steps: Optional[StepCounter] = None) -> FrequencyNode:
    """Self-linked node with usage count 0."""
    return FrequencyNode(steps)


def get_new_node(
    value: int,
    prev: FrequencyNode,
    next: FrequencyNode,
    steps: Optional[StepCounter] = None,
) -> FrequencyNode:
    """Splice a fresh node carrying ``value`` between adjacent ``prev`` and ``next``."""
    assert prev.next is next and next.prev is prev, "prev and next must be adjacent"
    node = FrequencyNode(steps)
    node.value = value
    node.prev = prev
    node.next = next
    prev.next = node
    next.prev = node
    if steps is not None:
        steps.count += 5
    return node


def delete_node(node: FrequencyNode, steps: Optional[StepCounter] = None) -> None:
    """Unlink ``node`` from the frequency list."""
    assert node.value != 0, "the sentinel head is never deleted"
    assert not node.items, "only empty frequency nodes are unlinked"
    node.prev.next = node.next
    node.next.prev = node.prev
    if steps is not None:
        steps.count += 6


class LfuCache:
    """Bounded LFU cache with O(1) insert, access, peek and eviction.

    Keys and values are ``bytes``. ``steps.count`` reports the elementary
    work done by the last public call.
    """

    def __init__(self, capacity: int, tiebreak: Tiebreak = "fifo") -> None:
        if isinstance(capacity, bool) or not isinstance(capacity, int) or capacity < 1:
            raise InvalidArgumentError(f"capacity must be an integer >= 1, got {capacity!r}")
        check_tiebreak(tiebreak)
        self.capacity = capacity
        self.tiebreak = tiebreak
        self.steps = StepCounter()
        self.bykey: dict[CacheKey, LfuItem] = {}
        self.freq_head = new_freq_node(self.steps)

    def __len__(self) -> int:
        return len(self.bykey)

    def __contains__(self, key: CacheKey) -> bool:
        self.steps.count = 1
        return key in self.bykey

    def __repr__(self) -> str:
        body = ", ".join(f"{f}:{[k for k in keys]}" for f, keys in self.snapshot())
        return f"LfuCache(capacity={self.capacity}, {{{body}}})"

    def insert(self, key: CacheKey, value: CacheValue) -> Optional[CacheKey]:
        """Add a new key at usage count 1.

        A full cache evicts its least frequently used entry first; the
        evicted key is returned. Raises ``DuplicateKeyError`` (and changes
        nothing) when ``key`` is already cached.
        """
        steps = self.steps
        steps.count = 0
        check_key(key)
        check_value(value)
        bykey = self.bykey
        steps.count += 1
        if key in bykey:
            raise DuplicateKeyError(key)

        evicted = None
        if len(bykey) >= self.capacity:
            evicted = self._evict()[0]

        head = self.freq_head
        freq = head.next
        steps.count += 2
        if freq.value != 1:
            freq = get_new_node(1, head, freq, steps)
        freq.items.add(key)
        bykey[key] = LfuItem(value, freq)
        steps.count += 1
        return evicted

    def access(self, key: CacheKey) -> CacheValue:
        """Return the value for ``key`` and bump its usage count by one."""
        steps = self.steps
        steps.count = 1
        tmp = self.bykey.get(key)
        if tmp is None:
            raise NotFoundError(key)
        freq = tmp.parent
        next_freq = freq.next
        steps.count += 3
        if next_freq is self.freq_head or next_freq.value != freq.value + 1:
            next_freq = get_new_node(freq.value + 1, freq, next_freq, steps)
        next_freq.items.add(key)
        tmp.parent = next_freq
        steps.count += 1

        freq.items.remove(key)
        if not freq.items:
            delete_node(freq, steps)
        return tmp.data

    def peek_lfu(self) -> tuple[CacheKey, CacheValue, int]:
        """(key, value, usage count) of the next eviction victim, without side effects."""
        self.steps.count = 0
        return self._peek()

    def evict_lfu(self) -> tuple[CacheKey, CacheValue]:
        self.steps.count = 0
        return self._evict()

    def remove(self, key: CacheKey) -> Optional[CacheValue]:
        """Drop ``key`` if cached and return its value; ``None`` when absent."""
        steps = self.steps
        steps.count = 1
        item = self.bykey.pop(key, None)
        if item is None:
            return None
        node = item.parent
        steps.count += 1
        node.items.remove(key)
        if not node.items:
            delete_node(node, steps)
        return item.data

    def frequency(self, key: CacheKey) -> int:
        self.steps.count = 2
        item = self.bykey.get(key)
        if item is None:
            raise NotFoundError(key)
        return item.parent.value

    def _peek(self) -> tuple[CacheKey, CacheValue, int]:
        steps = self.steps
        steps.count += 1
        if not self.bykey:
            raise EmptyCacheError()
        node = self.freq_head.next
        steps.count += 1
        items = node.items
        key = items.oldest() if self.tiebreak == "fifo" else items.newest()
        steps.count += 1
        return key, self.bykey[key].data, node.value

    def _evict(self) -> tuple[CacheKey, CacheValue]:
        key, data, _ = self._peek()
        node = self.freq_head.next
        self.steps.count += 2
        node.items.remove(key)
        del self.bykey[key]
        if not node.items:
            delete_node(node, self.steps)
        return key, data

    # inspection helpers; O(n), not instrumented

    def nodes(self) -> Iterator[FrequencyNode]:
        head = self.freq_head
        node = head.next
        while node is not head:
            yield node
            node = node.next

    def snapshot(self) -> list[tuple[int, list[CacheKey]]]:
        """Frequency list as ``[(count, [keys in tie-break order]), ...]``."""
        return [(node.value, list(node.items)) for node in self.nodes()]

    def validate(self) -> list[str]:
        """Walk the whole structure and describe every broken invariant."""
        problems: list[str] = []
        head = self.freq_head
        if head.value != 0:
            problems.append(f"sentinel head has value {head.value}, expected 0")
        if head.items:
            problems.append(f"sentinel head holds keys {list(head.items)!r}")

        reachable: set[int] = set()
        reported: set[CacheKey] = set()
        total = 0
        prev_value = head.value
        node = head
        limit = len(self.bykey) + 1
        while True:
            if node.next.prev is not node:
                problems.append(f"node {node.value}: next.prev does not point back")
            if node.prev.next is not node:
                problems.append(f"node {node.value}: prev.next does not point back")
            node = node.next
            if node is head:
                break
            if len(reachable) >= limit:
                problems.append("frequency list does not return to the sentinel")
                break
            reachable.add(id(node))
            if node.value < 1:
                problems.append(f"non-sentinel node has value {node.value}")
            if node.value <= prev_value:
                problems.append(
                    f"frequency list not strictly increasing: {prev_value} then {node.value}"
                )
            prev_value = node.value
            if not node.items:
                problems.append(f"node {node.value} is empty")
            problems.extend(f"node {node.value}: {p}" for p in node.items.validate())
            for key in node.items:
                total += 1
                item = self.bykey.get(key)
                if item is None:
                    problems.append(f"key {key!r} in node {node.value} but not in table")
                elif item.parent is not node:
                    reported.add(key)
                    problems.append(
                        f"key {key!r} listed in node {node.value} "
                        f"but its parent link has value {item.parent.value}"
                    )

        if total != len(self.bykey):
            problems.append(f"nodes hold {total} keys but table holds {len(self.bykey)}")
        if len(self.bykey) > self.capacity:
            problems.append(f"size {len(self.bykey)} exceeds capacity {self.capacity}")
        for key, item in self.bykey.items():
            parent = item.parent
            if key in reported:
                continue
            if parent is head:
                problems.append(f"key {key!r}: parent is the sentinel head")
            elif id(parent) not in reachable:
                problems.append(f"key {key!r}: parent node {parent.value} is unlinked")
            elif key not in parent.items._index:
                problems.append(
                    f"key {key!r}: parent node {parent.value} does not contain it"
                )
        return problems


def new_cache(capacity: int, tiebreak: Tiebreak = "fifo") -> LfuCache:
    return LfuCache(capacity, tiebreak)
