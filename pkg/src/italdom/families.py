"""Digraph families, compositions, and small-digraph corpora.

Every family has a textual form used by the CLI and by harness instance
descriptors::

    path:5  cycle:6  complete:4  kbip:3,5  empty:3  assoc:4,0-1,1-2
    join1:(path:2),(path:2)  join2:(G),(H)  corona:(empty:2),(empty:2)
    random:6,0.4,42
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple, Union

from .digraph import MAX_ORDER, Digraph, new_digraph
from .errors import GuardError, ParseError

#: Largest order accepted by :func:`enumerate_all` (2^(n(n-1)) digraphs).
ENUMERATION_GUARD = 5


def directed_path(n: int) -> Digraph:
    if n < 1:
        raise ValueError("a directed path needs n >= 1")
    return new_digraph(n, [(i, i + 1) for i in range(n - 1)])


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise ValueError("a directed cycle needs n >= 2")
    return new_digraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_digraph(n: int) -> Digraph:
    if n < 1:
        raise ValueError("a complete digraph needs n >= 1")
    return new_digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def empty_digraph(n: int) -> Digraph:
    if n < 1:
        raise ValueError("an empty digraph needs n >= 1")
    return new_digraph(n)


def complete_bipartite_digraph(m: int, n: int) -> Digraph:
    """Associated digraph of K_{m,n}: part X is ``0..m-1``, part Y is ``m..m+n-1``."""
    if m < 1 or n < 1:
        raise ValueError("both parts of a complete bipartite digraph need size >= 1")
    arcs = []
    for x in range(m):
        for y in range(m, m + n):
            arcs.append((x, y))
            arcs.append((y, x))
    return new_digraph(m + n, arcs)


def associated_digraph(edges: Sequence[Tuple[int, int]], n: int) -> Digraph:
    """Replace every undirected edge ``{u, v}`` with arcs ``u->v`` and ``v->u``."""
    arcs = []
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at {u} in an undirected edge list")
        arcs.append((u, v))
        arcs.append((v, u))
    return new_digraph(n, arcs)


def _disjoint_union_arcs(g: Digraph, h: Digraph) -> list[Tuple[int, int]]:
    shift = g.order
    return g.arcs() + [(t + shift, s + shift) for t, s in h.arcs()]


def _check_size(n: int) -> None:
    if n > MAX_ORDER:
        raise GuardError(f"composition has order {n} > {MAX_ORDER}")


def join_oneway(g: Digraph, h: Digraph) -> Digraph:
    """G -> H: disjoint union plus every arc from a G-vertex to an H-vertex."""
    n = g.order + h.order
    _check_size(n)
    arcs = _disjoint_union_arcs(g, h)
    arcs += [(u, g.order + w) for u in range(g.order) for w in range(h.order)]
    return new_digraph(n, arcs)


def join_twoway(g: Digraph, h: Digraph) -> Digraph:
    """G <-> H: the one-way join plus every arc from H back to G."""
    n = g.order + h.order
    _check_size(n)
    arcs = _disjoint_union_arcs(g, h)
    for u in range(g.order):
        for w in range(g.order, n):
            arcs.append((u, w))
            arcs.append((w, u))
    return new_digraph(n, arcs)


def corona(g: Digraph, h: Digraph) -> Digraph:
    """One copy of G plus a private copy H_i of H for each G-vertex v_i.

    v_i gets an arc to every vertex of H_i (one direction only); the copies keep
    H's internal arcs.  Copy H_i occupies ``n(G) + i*n(H) .. n(G) + (i+1)*n(H) - 1``.
    """
    ng, nh = g.order, h.order
    n = ng * (1 + nh)
    _check_size(n)
    arcs = list(g.arcs())
    h_arcs = h.arcs()
    for i in range(ng):
        base = ng + i * nh
        arcs += [(i, base + w) for w in range(nh)]
        arcs += [(base + t, base + s) for t, s in h_arcs]
    return new_digraph(n, arcs)


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Each ordered pair is an arc independently with probability ``p``.

    Draws come from :class:`random.Random` (Mersenne Twister) seeded with
    ``seed``, one ``random()`` call per ordered pair in ascending
    ``(tail, head)`` order; the pair is kept when the draw is ``< p``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return new_digraph(n, arcs)


def all_pairs(n: int) -> list[Tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def digraph_from_mask(n: int, mask: int) -> Digraph:
    """Digraph whose arcs are the set bits of ``mask`` over :func:`all_pairs` order."""
    pairs = all_pairs(n)
    return new_digraph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def enumerate_all(n: int) -> Iterator[Digraph]:
    """All 2^(n(n-1)) labeled simple digraphs on ``n`` vertices, by ascending bitmask."""
    if not 1 <= n <= ENUMERATION_GUARD:
        raise GuardError(f"exhaustive enumeration supports 1 <= n <= {ENUMERATION_GUARD}, got {n}")
    pairs = all_pairs(n)
    for mask in range(1 << len(pairs)):
        out = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                out[u] |= 1 << v
        yield Digraph(n, tuple(out))


# -- FamilySpec -------------------------------------------------------------

Param = Union[int, float]

_ALIASES = {
    "path": "path",
    "cycle": "cycle",
    "complete": "complete",
    "kbip": "complete_bipartite",
    "empty": "empty",
    "assoc": "associated",
    "join1": "join_oneway",
    "join2": "join_twoway",
    "corona": "corona",
    "random": "random",
}
_TEXT = {v: k for k, v in _ALIASES.items()}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: Tuple[Param, ...] = ()
    operands: Tuple["FamilySpec", ...] = ()
    edges: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in _TEXT:
            raise ParseError(f"unknown family kind {self.kind!r}")
        want_ops = 2 if self.kind in ("join_oneway", "join_twoway", "corona") else 0
        if len(self.operands) != want_ops:
            raise ParseError(f"{_TEXT[self.kind]} takes {want_ops} operand digraphs")
        want = {
            "path": 1, "cycle": 1, "complete": 1, "empty": 1,
            "complete_bipartite": 2, "associated": 1, "random": 3,
        }.get(self.kind, 0)
        if len(self.params) != want:
            raise ParseError(f"{_TEXT[self.kind]} takes {want} parameters, got {len(self.params)}")

    def build(self) -> Digraph:
        k, p = self.kind, self.params
        try:
            if k == "path":
                return directed_path(p[0])
            if k == "cycle":
                return directed_cycle(p[0])
            if k == "complete":
                return complete_digraph(p[0])
            if k == "empty":
                return empty_digraph(p[0])
            if k == "complete_bipartite":
                return complete_bipartite_digraph(p[0], p[1])
            if k == "associated":
                return associated_digraph(self.edges, p[0])
            if k == "random":
                return random_digraph(int(p[0]), float(p[1]), int(p[2]))
            g, h = (op.build() for op in self.operands)
            if k == "join_oneway":
                return join_oneway(g, h)
            if k == "join_twoway":
                return join_twoway(g, h)
            return corona(g, h)
        except GuardError:
            raise
        except ValueError as exc:
            raise ParseError(f"{self}: {exc}") from None

    def __str__(self) -> str:
        name = _TEXT[self.kind]
        if self.operands:
            return f"{name}:" + ",".join(f"({op})" for op in self.operands)
        if self.kind == "associated":
            return f"{name}:" + ",".join([str(self.params[0])] + [f"{u}-{v}" for u, v in self.edges])
        return f"{name}:" + ",".join(str(x) for x in self.params)


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text.replace(" ", "")
        self.pos = 0

    def fail(self, msg: str) -> ParseError:
        return ParseError(f"bad family spec {self.text!r} at {self.pos}: {msg}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.fail(f"expected {ch!r}")
        self.pos += 1

    def token(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ",():":
            self.pos += 1
        return self.text[start:self.pos]

    def spec(self) -> FamilySpec:
        name = self.token()
        if name not in _ALIASES:
            raise self.fail(f"unknown family {name!r}")
        kind = _ALIASES[name]
        self.expect(":")
        if kind in ("join_oneway", "join_twoway", "corona"):
            ops = [self.operand()]
            self.expect(",")
            ops.append(self.operand())
            return FamilySpec(kind, (), tuple(ops))
        toks = [self.token()]
        while self.peek() == ",":
            self.pos += 1
            toks.append(self.token())
        if kind == "associated":
            edges = []
            for tok in toks[1:]:
                u, sep, v = tok.partition("-")
                if not sep:
                    raise self.fail(f"edge {tok!r} is not of the form u-v")
                edges.append((self._int(u), self._int(v)))
            return FamilySpec(kind, (self._int(toks[0]),), edges=tuple(edges))
        if kind == "random":
            if len(toks) != 3:
                raise self.fail("random takes n,p,seed")
            try:
                p = float(toks[1])
            except ValueError:
                raise self.fail(f"bad probability {toks[1]!r}") from None
            return FamilySpec(kind, (self._int(toks[0]), p, self._int(toks[2])))
        return FamilySpec(kind, tuple(self._int(t) for t in toks))

    def operand(self) -> FamilySpec:
        self.expect("(")
        inner = self.spec()
        self.expect(")")
        return inner

    def _int(self, tok: str) -> int:
        try:
            return int(tok)
        except ValueError:
            raise self.fail(f"expected an integer, got {tok!r}") from None


def parse_family(text: str) -> FamilySpec:
    parser = _Parser(text.strip())
    spec = parser.spec()
    if parser.pos != len(parser.text):
        raise parser.fail("trailing characters")
    return spec


def build_family(text: str) -> Digraph:
    return parse_family(text).build()
