"""Italian bondage and reinforcement numbers, plus classical reinforcement.

Both Italian searches walk arc subsets by ascending size and, within a size,
in lexicographic order of the sorted arc list; the first qualifying subset is
the reported witness.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Tuple

from ._backend import kernels
from .digraph import (
    Arc,
    Digraph,
    add_arcs,
    complement_arcs,
    max_underlying_degree,
    remove_arcs,
    underlying_connected,
    underlying_degree,
)
from .errors import BondageUndefinedError, GuardError
from .idf import (
    MIN_IDF_GUARD,
    branch_order,
    enumerate_min_idfs,
    gamma_domination,
    gamma_italian,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundCertificate:
    source: str
    value: int
    witness_vertices: Optional[Tuple[int, int, int]] = None


@dataclass(frozen=True)
class PerturbationResult:
    kind: str
    value: int
    witness: Tuple[Arc, ...]
    base_gamma: int
    perturbed_gamma: int
    certificates: Tuple[BoundCertificate, ...] = ()
    nodes_explored: int = 0


def bondage_upper_bound_path2(d: Digraph) -> Optional[BoundCertificate]:
    """Smallest removal-count bound over vertices y with two out-neighbors x, z.

    For each such triple the bound is deg_G(x) + deg^-(y) + deg_G(z) minus the
    number of common in-neighbors of x, y and z, minus one more when x and z
    are adjacent in the underlying graph.
    """
    best: Optional[BoundCertificate] = None
    for y in range(d.order):
        outs = d.out_neighbors(y)
        if len(outs) < 2:
            continue
        for x, z in combinations(outs, 2):
            common = d.in_masks[x] & d.in_masks[y] & d.in_masks[z]
            value = (
                underlying_degree(d, x)
                + d.in_degree(y)
                + underlying_degree(d, z)
                - common.bit_count()
            )
            if d.has_arc(x, z) or d.has_arc(z, x):
                value -= 1
            if best is None or value < best.value:
                best = BoundCertificate("path2_bound", value, (x, y, z))
    return best


def bondage_upper_bound_gamma_delta(d: Digraph, gamma: Optional[int] = None) -> Optional[BoundCertificate]:
    """(gamma_I - 1) * max underlying degree, for connected digraphs of order >= 3."""
    if d.order < 3 or not underlying_connected(d):
        return None
    if gamma is None:
        gamma = gamma_italian(d).value
    return BoundCertificate("gamma_delta_bound", (gamma - 1) * max_underlying_degree(d))


def reinforcement_upper_bound(d: Digraph, gamma: Optional[int] = None) -> Optional[BoundCertificate]:
    """n - max out-degree - gamma_I + 2, valid when gamma_I >= 3."""
    if gamma is None:
        gamma = gamma_italian(d).value
    if gamma < 3:
        return None
    return BoundCertificate("reinforcement_degree_bound", d.order - d.max_out_degree - gamma + 2)


def _split(arcs: Iterable[Arc]) -> Tuple[list, list]:
    arcs = list(arcs)
    return [t for t, _ in arcs], [h for _, h in arcs]


def italian_bondage(d: Digraph) -> PerturbationResult:
    """Fewest arcs whose removal raises gamma_I.

    Raises :class:`BondageUndefinedError` when gamma_I(d) == n: removal can
    never push gamma_I above n.
    """
    base = gamma_italian(d)
    n = d.order
    if base.value == n:
        raise BondageUndefinedError(f"gamma_I = n = {n}; no arc removal can raise it")
    certs = tuple(
        c
        for c in (bondage_upper_bound_path2(d), bondage_upper_bound_gamma_delta(d, base.value))
        if c is not None
    )
    arcs = d.arcs()
    cap = min([c.value for c in certs] + [len(arcs)])
    tails, heads = _split(arcs)
    order = branch_order(d)
    w = base.witness
    cache = [(sum(1 << v for v in w.part(1)), sum(1 << v for v in w.part(2)))]
    nodes = 0
    for k in range(1, len(arcs) + 1):
        if k == cap + 1:
            log.warning("bondage search passed its bound %d on %r", cap, d)
        combo, used = kernels.first_bondage_subset(
            n, d.in_masks, d.out_masks, tails, heads, k, base.value, order, cache
        )
        nodes += used
        if combo is not None:
            witness = tuple(arcs[j] for j in combo)
            after = gamma_italian(remove_arcs(d, witness)).value
            return PerturbationResult("bondage", k, witness, base.value, after, certs, nodes)
    raise AssertionError("removing every arc leaves gamma_I = n > gamma_I(d)")


def italian_reinforcement(d: Digraph) -> PerturbationResult:
    """Fewest added arcs that lower gamma_I; 0 by convention when gamma_I <= 2."""
    base = gamma_italian(d)
    if base.value <= 2:
        return PerturbationResult("reinforcement", 0, (), base.value, base.value)
    cert = reinforcement_upper_bound(d, base.value)
    certs = (cert,) if cert is not None else ()
    candidates = list(complement_arcs(d))
    tails, heads = _split(candidates)
    order = branch_order(d)
    nodes = 0
    for k in range(1, len(candidates) + 1):
        if cert is not None and k == cert.value + 1:
            log.warning("reinforcement search passed its bound %d on %r", cert.value, d)
        combo, used = kernels.first_reinforcing_subset(
            d.order, d.in_masks, d.out_masks, tails, heads, k, base.value - 1, order
        )
        nodes += used
        if combo is not None:
            witness = tuple(candidates[j] for j in combo)
            after = gamma_italian(add_arcs(d, witness)).value
            return PerturbationResult("reinforcement", k, witness, base.value, after, certs, nodes)
    raise AssertionError("the complete digraph has gamma_I = 2")


def check_rI_one_characterization(d: Digraph, zero_targets_only: bool = False) -> bool:
    """True iff some minimum IDF f and vertex v with f(v) = 1 satisfy either

    (i)  f(N^-(v)) = 1 and f(N^-(x) - v) >= 2 for every 0-labeled x in N^+(v), or
    (ii) f(N^-(v)) = 0, f(N^-(x) - v) >= 2 for every x in N^+(v), and some label is 2.

    With ``zero_targets_only`` condition (ii) only constrains 0-labeled x, the
    same restriction (i) uses.  The unrestricted form is not equivalent to
    r_I = 1: arcs 0->2, 0->3, 1->0 give r_I = 1 while (ii) fails at x = 0.
    """
    if d.order > MIN_IDF_GUARD:
        raise GuardError(f"characterization needs order <= {MIN_IDF_GUARD}, got {d.order}")
    gamma = gamma_italian(d).value
    if gamma < 3:
        raise ValueError(f"characterization applies to gamma_I >= 3, got {gamma}")
    preds = [d.in_neighbors(v) for v in range(d.order)]
    succs = [d.out_neighbors(v) for v in range(d.order)]
    for f in enumerate_min_idfs(d, gamma):
        vals = f.values
        has_two = 2 in vals

        def rest(x: int, v: int) -> int:
            return sum(vals[u] for u in preds[x] if u != v)

        for v in range(d.order):
            if vals[v] != 1:
                continue
            into_v = sum(vals[u] for u in preds[v])
            if into_v == 1 and all(rest(x, v) >= 2 for x in succs[v] if vals[x] == 0):
                return True
            if into_v == 0 and has_two and all(
                rest(x, v) >= 2 for x in succs[v] if vals[x] == 0 or not zero_targets_only
            ):
                return True
    return False


@dataclass
class IrsVerdict:
    base_gamma: int
    perturbed_gamma: int
    drop_ok: bool
    endpoint_violations: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.drop_ok and not self.endpoint_violations


def validate_irs_witness(d: Digraph, arcs: Iterable[Arc]) -> IrsVerdict:
    """Check a minimum reinforcement set F against the structure it must have.

    gamma_I must drop by exactly one, and every minimum IDF g of d + F must
    give each added arc a nonzero tail and a zero head.
    """
    arcs = tuple(arcs)
    base = gamma_italian(d).value
    if base < 3:
        raise ValueError(f"witness validation applies to gamma_I >= 3, got {base}")
    plus = add_arcs(d, arcs)
    if plus.order > MIN_IDF_GUARD:
        raise GuardError(f"witness validation needs order <= {MIN_IDF_GUARD}, got {plus.order}")
    after = gamma_italian(plus).value
    bad = []
    for g in enumerate_min_idfs(plus, after):
        for tail, head in arcs:
            if g[tail] == 0 or g[head] != 0:
                bad.append((str(g), (tail, head)))
    return IrsVerdict(base, after, after == base - 1, bad)


def classical_reinforcement(d: Digraph) -> PerturbationResult:
    """Fewest added arcs that lower the classical domination number; 0 when it is 1."""
    gamma, _ = gamma_domination(d)
    if gamma == 1:
        return PerturbationResult("classical_reinforcement", 0, (), 1, 1)
    candidates = list(complement_arcs(d))
    n = d.order
    full = (1 << n) - 1
    closed = [m | 1 << v for v, m in enumerate(d.out_masks)]
    for k in range(1, len(candidates) + 1):
        for combo in combinations(candidates, k):
            cl = list(closed)
            for t, h in combo:
                cl[t] |= 1 << h
            for subset in combinations(range(n), gamma - 1):
                covered = 0
                for v in subset:
                    covered |= cl[v]
                if covered == full:
                    after, _ = gamma_domination(add_arcs(d, combo))
                    return PerturbationResult("classical_reinforcement", k, combo, gamma, after)
    raise AssertionError("the complete digraph has domination number 1")


__all__ = [
    "BoundCertificate",
    "IrsVerdict",
    "PerturbationResult",
    "bondage_upper_bound_gamma_delta",
    "bondage_upper_bound_path2",
    "check_rI_one_characterization",
    "classical_reinforcement",
    "italian_bondage",
    "italian_reinforcement",
    "reinforcement_upper_bound",
    "validate_irs_witness",
]
