"""Exhaustive generation of small trees and a direct hipster test.

This is the ground truth every recurrence is checked against, so it does the
dumb thing on purpose: build every tree with ``n`` vertices and look at each
vertex's pair of children.

Trees of size ``n`` are assembled from pools of all trees of smaller sizes.
Pool members are shared between the trees that contain them, which keeps the
census for ``n = 14`` binary trees (about 2.7M trees) affordable; the top
size is streamed and never stored.
"""

from __future__ import annotations

import enum
import threading
from functools import lru_cache
from typing import Iterator, Optional

from .families import Family

__all__ = [
    "DEFAULT_LIMIT",
    "Edge",
    "PlaneTree",
    "EMPTY",
    "InvalidTreeError",
    "EnumerationLimitError",
    "leaf",
    "node",
    "validate",
    "enumerate_trees",
    "is_hipster",
    "canonical_encode",
    "census",
    "count_hipster",
    "count_total",
    "clear_cache",
]

DEFAULT_LIMIT = 16


class InvalidTreeError(ValueError):
    pass


class EnumerationLimitError(ValueError):
    pass


class Edge(enum.Enum):
    """Annotation on the edge from a parent to one child."""

    LEFT = b"L"
    RIGHT = b"R"
    BLUE = b"B"  # colored right edge
    RED = b"D"  # colored right edge
    PLAIN = b"P"  # unmarked; position is the order in the child tuple


_ALLOWED = {
    Family.BINARY: {Edge.LEFT, Edge.RIGHT},
    Family.COLORED: {Edge.LEFT, Edge.BLUE, Edge.RED},
    Family.ONE_TWO: {Edge.PLAIN},
}


class PlaneTree:
    """A rooted plane tree.

    ``children`` is a tuple of ``(Edge, PlaneTree)`` pairs in plane order, or
    ``None`` for the empty tree. Equality is structural.
    """

    __slots__ = ("children", "size", "_code", "_hipster")

    def __init__(self, children: Optional[tuple] = ()):
        self.children = children
        if children is None:
            self.size = 0
        else:
            self.size = 1 + sum(child.size for _, child in children)
        self._code = None
        self._hipster = None

    @property
    def is_empty(self) -> bool:
        return self.children is None

    def subtrees(self) -> Iterator[PlaneTree]:
        """Every subtree rooted at a vertex, preorder, starting with ``self``."""
        if self.children is None:
            return
        stack = [self]
        while stack:
            t = stack.pop()
            yield t
            stack.extend(child for _, child in reversed(t.children))

    def __eq__(self, other):
        if not isinstance(other, PlaneTree):
            return NotImplemented
        return _code(self) == _code(other)

    def __hash__(self):
        return hash(_code(self))

    def __repr__(self):
        return f"PlaneTree({_code(self).decode()!r})"


EMPTY = PlaneTree(None)


def leaf() -> PlaneTree:
    return PlaneTree(())


def node(*entries: tuple[Edge, PlaneTree]) -> PlaneTree:
    """Build a vertex from ``(edge, subtree)`` pairs; empty subtrees are rejected."""
    for edge, child in entries:
        if not isinstance(edge, Edge) or not isinstance(child, PlaneTree):
            raise InvalidTreeError(f"bad child entry {(edge, child)!r}")
        if child.is_empty:
            raise InvalidTreeError("a child cannot be the empty tree")
    return PlaneTree(tuple(entries))


def _code(t: PlaneTree) -> bytes:
    code = t._code
    if code is None:
        if t.children is None:
            code = b"E"
        else:
            code = b"(" + b"".join(e.value + _code(c) for e, c in t.children) + b")"
        t._code = code
    return code


def canonical_encode(family: Family, t: PlaneTree) -> bytes:
    """Byte encoding of the tree below (and including) its root vertex.

    The edge into the root is not part of the encoding, so two sibling
    subtrees have equal encodings exactly when they are isomorphic in the
    hipster sense. Every edge strictly below the root, with its mark or
    color, is encoded.
    """
    Family.parse(family)
    return _code(t)


def validate(family: Family, t: PlaneTree) -> None:
    family = Family.parse(family)
    if not isinstance(t, PlaneTree):
        raise InvalidTreeError(f"expected a PlaneTree, got {type(t).__name__}")
    allowed = _ALLOWED[family]
    for v in t.subtrees():
        kids = v.children
        if len(kids) > 2:
            raise InvalidTreeError(f"vertex with {len(kids)} children in a {family.value} tree")
        edges = [e for e, _ in kids]
        bad = [e for e in edges if e not in allowed]
        if bad:
            raise InvalidTreeError(f"edge {bad[0].name} not allowed in a {family.value} tree")
        if len(kids) == 2 and family is not Family.ONE_TWO:
            if edges[0] is not Edge.LEFT or edges[1] is Edge.LEFT:
                raise InvalidTreeError("two children must be a left child followed by a right child")


def _hipster(t: PlaneTree) -> bool:
    result = t._hipster
    if result is None:
        kids = t.children
        if not kids:
            result = True
        elif len(kids) == 1:
            result = _hipster(kids[0][1])
        else:
            a, b = kids[0][1], kids[1][1]
            result = _code(a) != _code(b) and _hipster(a) and _hipster(b)
        t._hipster = result
    return result


def is_hipster(family: Family, t: PlaneTree) -> bool:
    """True iff no vertex has two children carrying isomorphic subtrees."""
    validate(family, t)
    return _hipster(t)


class _Pools:
    """All trees of each size, built on demand and shared across calls."""

    def __init__(self, family: Family):
        self.family = family
        self.pools: list[list[PlaneTree]] = [[EMPTY], [leaf()]]
        # ``entries[edge][k]`` holds the (edge, t) pairs for every t of size k.
        self.entries: dict[Edge, list[list[tuple]]] = {e: [[], []] for e in _ALLOWED[family]}
        for e in self.entries:
            self.entries[e][1] = [(e, t) for t in self.pools[1]]
        self.lock = threading.Lock()

    def _generate(self, n: int) -> Iterator[PlaneTree]:
        if n == 0:
            yield EMPTY
            return
        if n == 1:
            yield leaf()
            return
        m = n - 1
        ent = self.entries
        if self.family is Family.ONE_TWO:
            singles = [ent[Edge.PLAIN]]
            pairs = [(ent[Edge.PLAIN], ent[Edge.PLAIN])]
        elif self.family is Family.BINARY:
            singles = [ent[Edge.LEFT], ent[Edge.RIGHT]]
            pairs = [(ent[Edge.LEFT], ent[Edge.RIGHT])]
        else:
            singles = [ent[Edge.LEFT], ent[Edge.BLUE], ent[Edge.RED]]
            pairs = [(ent[Edge.LEFT], ent[Edge.BLUE]), (ent[Edge.LEFT], ent[Edge.RED])]
        for table in singles:
            for e in table[m]:
                yield PlaneTree((e,))
        for first, second in pairs:
            for i in range(1, m):
                right = second[m - i]
                for a in first[i]:
                    for b in right:
                        yield PlaneTree((a, b))

    def ensure(self, n: int) -> None:
        """Make sure pools for every size below ``n`` exist."""
        with self.lock:
            while len(self.pools) < n:
                k = len(self.pools)
                pool = list(self._generate(k))
                self.pools.append(pool)
                for e, table in self.entries.items():
                    table.append([(e, t) for t in pool])

    def trees(self, n: int) -> Iterator[PlaneTree]:
        self.ensure(n)
        if n < len(self.pools):
            return iter(self.pools[n])
        return self._generate(n)


_pools: dict[Family, _Pools] = {}
_pools_lock = threading.Lock()


def _pools_for(family: Family) -> _Pools:
    with _pools_lock:
        if family not in _pools:
            _pools[family] = _Pools(family)
        return _pools[family]


def _check_n(n: int, limit: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > limit:
        raise EnumerationLimitError(f"n={n} exceeds the enumeration limit {limit}")


def enumerate_trees(family: Family, n: int, *, limit: int = DEFAULT_LIMIT) -> Iterator[PlaneTree]:
    """Yield every ``family`` tree with exactly ``n`` vertices, once each.

    The order is deterministic. ``n = 0`` yields the empty tree.
    """
    family = Family.parse(family)
    _check_n(n, limit)
    return _pools_for(family).trees(n)


@lru_cache(maxsize=None)
def _census(family: Family, n: int) -> tuple[int, int]:
    total = hipster = 0
    for t in _pools_for(family).trees(n):
        total += 1
        if _hipster(t):
            hipster += 1
    return total, hipster


def census(family: Family, n: int, *, limit: int = DEFAULT_LIMIT) -> tuple[int, int]:
    """``(total, hipster)`` counts of ``n``-vertex trees from one enumeration pass."""
    family = Family.parse(family)
    _check_n(n, limit)
    return _census(family, n)


def count_hipster(family: Family, n: int, *, limit: int = DEFAULT_LIMIT) -> int:
    return census(family, n, limit=limit)[1]


def count_total(family: Family, n: int, *, limit: int = DEFAULT_LIMIT) -> int:
    return census(family, n, limit=limit)[0]


def clear_cache() -> None:
    """Drop the shared tree pools and cached counts."""
    with _pools_lock:
        _pools.clear()
    _census.cache_clear()
