"""Insertion-ordered hash set backed by a circular doubly linked list.

The set keeps a hash index from key to list link, so ``add``, ``remove``,
``oldest`` and ``newest`` never walk the list.
"""
from __future__ import annotations

from typing import Hashable, Iterator, Optional

from .steps import StepCounter


class _Link:
    __slots__ = ("prev", "next", "key")

    def __init__(self, key: Hashable = None) -> None:
        self.prev = self.next = self
        self.key = key


class LinkedKeySet:
    """Ordered set of keys with O(1) add / remove / oldest / newest.

    >>> s = LinkedKeySet()
    >>> for k in "abc":
    ...     s.add(k)
    >>> s.remove("a")
    >>> list(s), s.oldest(), s.newest()
    (['b', 'c'], 'b', 'c')
    """

    __slots__ = ("_root", "_index", "_steps")

    def __init__(self, steps: Optional[StepCounter] = None) -> None:
        self._root = _Link()
        self._index: dict[Hashable, _Link] = {}
        self._steps = steps if steps is not None else StepCounter()

    def __len__(self) -> int:
        return len(self._index)

    def __bool__(self) -> bool:
        return bool(self._index)

    def __contains__(self, key: Hashable) -> bool:
        self._steps.count += 1
        return key in self._index

    def __iter__(self) -> Iterator[Hashable]:
        root = self._root
        link = root.next
        while link is not root:
            yield link.key
            link = link.next

    def __repr__(self) -> str:
        return f"LinkedKeySet({list(self)!r})"

    def add(self, key: Hashable) -> None:
        """Append ``key`` at the newest end. Re-adding a present key is a no-op."""
        index = self._index
        if key in index:
            self._steps.count += 1
            return
        root = self._root
        last = root.prev
        link = _Link(key)
        link.prev = last
        link.next = root
        last.next = link
        root.prev = link
        index[key] = link
        # probe, read root.prev, 4 link writes, index store
        self._steps.count += 7

    def remove(self, key: Hashable) -> None:
        link = self._index.pop(key)
        prev, nxt = link.prev, link.next
        prev.next = nxt
        nxt.prev = prev
        link.prev = link.next = link
        # index pop, 2 link reads, 2 link writes
        self._steps.count += 5

    def discard(self, key: Hashable) -> None:
        if key in self._index:
            self.remove(key)
        else:
            self._steps.count += 1

    def oldest(self) -> Hashable:
        link = self._root.next
        if link is self._root:
            raise KeyError("oldest() on empty set")
        self._steps.count += 1
        return link.key

    def newest(self) -> Hashable:
        link = self._root.prev
        if link is self._root:
            raise KeyError("newest() on empty set")
        self._steps.count += 1
        return link.key

    def move_to_end(self, key: Hashable) -> None:
        """Make ``key`` the newest element."""
        self.remove(key)
        self.add(key)

    def validate(self) -> list[str]:
        """Check link symmetry and agreement between list and index."""
        problems = []
        root = self._root
        seen = 0
        link = root
        limit = len(self._index) + 1
        while True:
            if link.next.prev is not link:
                problems.append(f"broken back-link after {link.key!r}")
            link = link.next
            if link is root:
                break
            seen += 1
            if seen > limit:
                problems.append("order list does not return to its root")
                return problems
            if self._index.get(link.key) is not link:
                problems.append(f"key {link.key!r} in order list but not indexed")
        if seen != len(self._index):
            problems.append(
                f"order list holds {seen} keys but index holds {len(self._index)}"
            )
        return problems
