"""Simple digraphs stored as per-vertex in/out bitsets.

Vertices are ``0..n-1``; an arc is a ``(tail, head)`` pair.  A :class:`Digraph`
is immutable: :func:`remove_arcs` and :func:`add_arcs` return new values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Tuple

from .errors import GuardError, ParseError

Arc = Tuple[int, int]

#: Width of the per-vertex bitsets; the compiled kernels use 64-bit words.
MAX_ORDER = 64


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Digraph:
    """A finite simple digraph.

    ``out_masks[v]`` has bit ``u`` set iff ``v -> u`` is an arc; ``in_masks``
    is the mirror and is derived on construction.
    """

    order: int
    out_masks: Tuple[int, ...]
    in_masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"order must be positive, got {self.order}")
        if self.order > MAX_ORDER:
            raise GuardError(f"order {self.order} exceeds the bitset width {MAX_ORDER}")
        if len(self.out_masks) != self.order:
            raise ValueError("out_masks length differs from order")
        full = (1 << self.order) - 1
        ins = [0] * self.order
        for v, mask in enumerate(self.out_masks):
            if mask & ~full:
                raise ValueError(f"vertex {v} has an out-neighbor out of range")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(mask):
                ins[u] |= 1 << v
        object.__setattr__(self, "in_masks", tuple(ins))

    @property
    def n(self) -> int:
        return self.order

    @property
    def size(self) -> int:
        """Number of arcs."""
        return sum(m.bit_count() for m in self.out_masks)

    def arcs(self) -> list[Arc]:
        """All arcs in ascending ``(tail, head)`` order."""
        return [(t, h) for t, mask in enumerate(self.out_masks) for h in _bits(mask)]

    def has_arc(self, tail: int, head: int) -> bool:
        return 0 <= tail < self.order and bool(self.out_masks[tail] >> head & 1)

    def out_neighbors(self, v: int) -> list[int]:
        return list(_bits(self.out_masks[v]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(_bits(self.in_masks[v]))

    def out_degree(self, v: int) -> int:
        return self.out_masks[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_masks[v].bit_count()

    @property
    def max_out_degree(self) -> int:
        return max(m.bit_count() for m in self.out_masks)

    @property
    def max_in_degree(self) -> int:
        return max(m.bit_count() for m in self.in_masks)

    def __repr__(self) -> str:
        return f"Digraph(order={self.order}, arcs={self.arcs()})"


@dataclass(frozen=True)
class Degrees:
    max_out: int
    max_in: int
    out: Tuple[int, ...]
    in_: Tuple[int, ...]


def _check_arc(n: int, arc: Arc) -> Arc:
    tail, head = arc
    if not (0 <= tail < n and 0 <= head < n):
        raise ValueError(f"arc {tail}->{head} has an endpoint outside 0..{n - 1}")
    if tail == head:
        raise ValueError(f"self-loop {tail}->{head} is not allowed")
    return tail, head


def new_digraph(n: int, arcs: Iterable[Arc] = ()) -> Digraph:
    """Build a digraph on ``n`` vertices; duplicate arcs collapse."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n > MAX_ORDER:
        raise GuardError(f"order {n} exceeds the bitset width {MAX_ORDER}")
    out = [0] * n
    for arc in arcs:
        tail, head = _check_arc(n, arc)
        out[tail] |= 1 << head
    return Digraph(n, tuple(out))


def remove_arcs(d: Digraph, arcs: Iterable[Arc]) -> Digraph:
    """Return ``d`` minus ``arcs``; every arc must be present."""
    out = list(d.out_masks)
    for tail, head in arcs:
        if not d.has_arc(tail, head):
            raise ValueError(f"arc {tail}->{head} is not in the digraph")
        out[tail] &= ~(1 << head)
    return Digraph(d.order, tuple(out))


def add_arcs(d: Digraph, arcs: Iterable[Arc]) -> Digraph:
    """Return ``d`` plus ``arcs``; none may be present already."""
    out = list(d.out_masks)
    for arc in arcs:
        tail, head = _check_arc(d.order, arc)
        if d.has_arc(tail, head):
            raise ValueError(f"arc {tail}->{head} is already in the digraph")
        out[tail] |= 1 << head
    return Digraph(d.order, tuple(out))


def degrees(d: Digraph) -> Degrees:
    out = tuple(m.bit_count() for m in d.out_masks)
    in_ = tuple(m.bit_count() for m in d.in_masks)
    return Degrees(max(out), max(in_), out, in_)


def underlying_degree(d: Digraph, v: int) -> int:
    """Degree of ``v`` in the underlying multigraph (2-cycles count twice)."""
    if not 0 <= v < d.order:
        raise ValueError(f"vertex {v} out of range")
    return d.out_masks[v].bit_count() + d.in_masks[v].bit_count()


def max_underlying_degree(d: Digraph) -> int:
    return max(underlying_degree(d, v) for v in range(d.order))


def underlying_connected(d: Digraph) -> bool:
    full = (1 << d.order) - 1
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= d.out_masks[v] | d.in_masks[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


def complement_arcs(d: Digraph) -> Iterator[Arc]:
    """Ordered pairs ``(u, v)``, ``u != v``, that are not arcs, ascending."""
    for tail in range(d.order):
        missing = ~(d.out_masks[tail] | 1 << tail) & ((1 << d.order) - 1)
        for head in _bits(missing):
            yield tail, head


# -- edge-list text format -------------------------------------------------


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_edge_list(text: str) -> Digraph:
    """Parse ``n m`` followed by ``m`` lines ``u v``.  ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty digraph description")
    lineno, header = rows[0]
    try:
        n, m = (int(tok) for tok in header)
    except ValueError:
        raise ParseError(f"line {lineno}: expected 'n m', got {' '.join(header)!r}") from None
    if n < 1 or m < 0:
        raise ParseError(f"line {lineno}: invalid header {n} {m}")
    if n > MAX_ORDER:
        raise GuardError(f"order {n} exceeds the bitset width {MAX_ORDER}")
    if len(rows) - 1 != m:
        raise ParseError(f"header announces {m} arcs, found {len(rows) - 1}")
    arcs: list[Arc] = []
    seen: set[Arc] = set()
    for lineno, toks in rows[1:]:
        try:
            tail, head = (int(tok) for tok in toks)
        except ValueError:
            raise ParseError(f"line {lineno}: expected 'u v', got {' '.join(toks)!r}") from None
        if (tail, head) in seen:
            raise ParseError(f"line {lineno}: duplicate arc {tail} {head}")
        try:
            _check_arc(n, (tail, head))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        seen.add((tail, head))
        arcs.append((tail, head))
    return new_digraph(n, arcs)


def format_edge_list(d: Digraph) -> str:
    arcs = d.arcs()
    lines = [f"{d.order} {len(arcs)}"]
    lines.extend(f"{t} {h}" for t, h in arcs)
    return "\n".join(lines) + "\n"
