"""Italian dominating functions and the Italian domination number.

A labeling ``f: V -> {0, 1, 2}`` is an Italian dominating function (IDF) when
every vertex labeled 0 has in-neighbors of total label at least 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Optional, Sequence, Tuple

from ._backend import kernels
from .digraph import Digraph, underlying_degree
from .errors import GuardError

BRUTE_FORCE_GUARD = 12
MIN_IDF_GUARD = 8
DOMINATION_GUARD = 20


@dataclass(frozen=True)
class Labeling:
    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        if any(x not in (0, 1, 2) for x in self.values):
            raise ValueError(f"labels must be 0, 1 or 2: {self.values}")

    @property
    def weight(self) -> int:
        return sum(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def part(self, label: int) -> frozenset:
        """Vertices carrying ``label`` (V_0, V_1 or V_2)."""
        return frozenset(v for v, x in enumerate(self.values) if x == label)

    def __str__(self) -> str:
        return "".join(map(str, self.values))

    @classmethod
    def from_masks(cls, n: int, ones: int, twos: int) -> "Labeling":
        return cls(tuple(2 if twos >> v & 1 else 1 if ones >> v & 1 else 0 for v in range(n)))


@dataclass(frozen=True)
class GammaResult:
    value: int
    witness: Labeling
    lower_bound_used: int
    upper_bound_used: int
    nodes_explored: int = 0


def _as_values(f) -> Tuple[int, ...]:
    return f.values if isinstance(f, Labeling) else tuple(f)


def in_weight(d: Digraph, f, v: int) -> int:
    """Total label of the in-neighbors of ``v``."""
    values = _as_values(f)
    return sum(values[u] for u in d.in_neighbors(v))


def verify_idf(d: Digraph, f) -> bool:
    values = _as_values(f)
    if len(values) != d.order:
        raise ValueError(f"labeling has length {len(values)}, digraph has order {d.order}")
    return all(x != 0 or in_weight(d, values, v) >= 2 for v, x in enumerate(values))


def lower_bound(d: Digraph) -> int:
    """Out-degree counting bound: ceil(2n / (2 + max out-degree))."""
    n = d.order
    return -(-2 * n // (2 + d.max_out_degree))


def upper_bound_witness(d: Digraph) -> Labeling:
    """2 on a vertex of maximum out-degree, 0 on its out-neighbors, 1 elsewhere.

    With no arcs at all this would weigh n + 1, so the all-ones labeling is
    returned instead.
    """
    n = d.order
    if d.max_out_degree == 0:
        return Labeling((1,) * n)
    hub = max(range(n), key=lambda v: (d.out_degree(v), -v))
    values = [1] * n
    values[hub] = 2
    for u in d.out_neighbors(hub):
        values[u] = 0
    return Labeling(tuple(values))


def weight_two_witness(d: Digraph) -> Optional[Labeling]:
    """A weight-2 IDF when one exists (order >= 3), else None.

    Weight 2 is possible exactly when some vertex reaches all others, or two
    vertices each reach every vertex but the pair.
    """
    n = d.order
    full = (1 << n) - 1
    for v in range(n):
        if d.out_masks[v] == full & ~(1 << v):
            values = [0] * n
            values[v] = 2
            return Labeling(tuple(values))
    for u, v in combinations(range(n), 2):
        rest = full & ~(1 << u | 1 << v)
        if d.out_masks[u] & rest == rest and d.out_masks[v] & rest == rest:
            values = [0] * n
            values[u] = values[v] = 1
            return Labeling(tuple(values))
    return None


def branch_order(d: Digraph) -> list[int]:
    """Vertices by descending underlying degree, ties by index."""
    return sorted(range(d.order), key=lambda v: (-underlying_degree(d, v), v))


def gamma_italian(d: Digraph) -> GammaResult:
    """Exact Italian domination number by branch and bound."""
    n = d.order
    if n == 1:
        return GammaResult(1, Labeling((1,)), 1, 1)
    if n == 2:
        return GammaResult(2, Labeling((1, 1)), 2, 2)
    lb = lower_bound(d)
    seed = upper_bound_witness(d)
    ub = seed.weight
    if lb <= 2:
        two = weight_two_witness(d)
        if two is not None:
            return GammaResult(2, two, lb, ub)
        lb = 3
    if ub <= lb:
        return GammaResult(ub, seed, lb, ub)
    weight, ones, twos, nodes = kernels.best_idf(
        n, d.in_masks, d.out_masks, branch_order(d), ub - 1, lb
    )
    if weight < 0:
        return GammaResult(ub, seed, lb, ub, nodes)
    return GammaResult(weight, Labeling.from_masks(n, ones, twos), lb, ub, nodes)


def find_idf(d: Digraph, budget: int) -> Optional[Labeling]:
    """Some IDF of weight at most ``budget``, or None."""
    weight, ones, twos, _ = kernels.best_idf(
        d.order, d.in_masks, d.out_masks, branch_order(d), budget, budget
    )
    return None if weight < 0 else Labeling.from_masks(d.order, ones, twos)


def brute_force_gamma_italian(d: Digraph) -> GammaResult:
    """Reference value by scanning all 3^n labelings.

    The witness is the lexicographically smallest labeling of minimum weight.
    """
    n = d.order
    if n > BRUTE_FORCE_GUARD:
        raise GuardError(f"brute force supports order <= {BRUTE_FORCE_GUARD}, got {n}")
    preds = [d.in_neighbors(v) for v in range(n)]
    best: Optional[Tuple[int, ...]] = None
    best_weight = 2 * n + 1
    for values in product((0, 1, 2), repeat=n):
        weight = sum(values)
        if weight >= best_weight:
            continue
        if all(x or sum(values[u] for u in preds[v]) >= 2 for v, x in enumerate(values)):
            best, best_weight = values, weight
    assert best is not None
    return GammaResult(best_weight, Labeling(best), best_weight, best_weight, 3 ** n)


def enumerate_min_idfs(d: Digraph, gamma: Optional[int] = None) -> Iterator[Labeling]:
    """Every IDF of weight gamma_I(d), in lexicographic order."""
    n = d.order
    if n > MIN_IDF_GUARD:
        raise GuardError(f"minimum-IDF enumeration supports order <= {MIN_IDF_GUARD}, got {n}")
    if gamma is None:
        gamma = gamma_italian(d).value
    preds = [d.in_neighbors(v) for v in range(n)]
    for values in product((0, 1, 2), repeat=n):
        if sum(values) == gamma and all(
            x or sum(values[u] for u in preds[v]) >= 2 for v, x in enumerate(values)
        ):
            yield Labeling(values)


def _closed_out(d: Digraph) -> list[int]:
    return [m | 1 << v for v, m in enumerate(d.out_masks)]


def _dominating_set_of_size(n: int, closed: Sequence[int], k: int) -> Optional[Tuple[int, ...]]:
    full = (1 << n) - 1
    for subset in combinations(range(n), k):
        covered = 0
        for v in subset:
            covered |= closed[v]
        if covered == full:
            return subset
    return None


def gamma_domination(d: Digraph) -> Tuple[int, frozenset]:
    """Classical domination number with the first minimum dominating set found."""
    n = d.order
    if n > DOMINATION_GUARD:
        raise GuardError(f"domination search supports order <= {DOMINATION_GUARD}, got {n}")
    closed = _closed_out(d)
    for k in range(1, n + 1):
        found = _dominating_set_of_size(n, closed, k)
        if found is not None:
            return k, frozenset(found)
    raise AssertionError("the whole vertex set always dominates")


def has_dominating_set(d: Digraph, k: int) -> bool:
    return k >= 1 and _dominating_set_of_size(d.order, _closed_out(d), k) is not None
