"""Machine-checkable claims about Italian domination, run over digraph corpora.

Each :class:`TheoremCheck` has an applicability test and a claim.  A corpus is
a list of instances (exhaustive enumerations, family catalog entries, seeded
random samples); :func:`run_corpus` evaluates the selected checks on each and
collects the verdicts into a :class:`Report`.  Violations never abort a run.
"""

from __future__ import annotations

import json
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Optional, Sequence, Tuple, Union

from .digraph import Digraph, degrees, new_digraph, max_underlying_degree, underlying_connected
from .errors import BondageUndefinedError, GuardError, ItaldomError
from .families import ENUMERATION_GUARD, FamilySpec, all_pairs, digraph_from_mask, parse_family
from .idf import (
    DOMINATION_GUARD,
    MIN_IDF_GUARD,
    find_idf,
    gamma_domination,
    gamma_italian,
)
from .perturbation import (
    bondage_upper_bound_path2,
    check_rI_one_characterization,
    classical_reinforcement,
    italian_bondage,
    italian_reinforcement,
    validate_irs_witness,
)

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not_applicable"

#: Checks whose violations are reported but do not fail a verification run.
DOCUMENTED_EXCEPTIONS = ("thm-3.1",)

#: Arc-count ceiling for the exhaustive bondage search inside the harness.
BONDAGE_ARC_GUARD = 40
#: Candidate-arc ceiling for the reinforcement search inside the harness.
REINFORCE_ARC_GUARD = 132


# -- instances ----------------------------------------------------------------


@dataclass(frozen=True)
class Instance:
    digraph: Digraph
    descriptor: str
    family: Optional[FamilySpec] = None


def enum_descriptor(n: int, mask: int) -> str:
    return f"enum:{n},{mask}"


def resolve_instance(descriptor: str) -> Instance:
    """Rebuild an instance from its descriptor (``enum:n,mask`` or a family spec)."""
    if descriptor.startswith("enum:"):
        n, mask = (int(x) for x in descriptor[5:].split(","))
        return Instance(digraph_from_mask(n, mask), descriptor)
    if descriptor.startswith("arcs:"):
        _, n, body = descriptor.split(":", 2)
        arcs = [tuple(int(x) for x in tok.split("-")) for tok in body.split(";") if tok]
        return Instance(new_digraph(int(n), arcs), descriptor)
    spec = parse_family(descriptor)
    return Instance(spec.build(), str(spec), spec)


def as_instance(obj: Union[Instance, Digraph, str]) -> Instance:
    if isinstance(obj, Instance):
        return obj
    if isinstance(obj, str):
        return resolve_instance(obj)
    pairs = all_pairs(obj.order)
    if obj.order <= ENUMERATION_GUARD:
        mask = sum(1 << i for i, (u, v) in enumerate(pairs) if obj.has_arc(u, v))
        return Instance(obj, enum_descriptor(obj.order, mask))
    arcs = ";".join(f"{u}-{v}" for u, v in obj.arcs())
    return Instance(obj, f"arcs:{obj.order}:{arcs}")


# -- structural recognizers -----------------------------------------------------


def is_complete(d: Digraph) -> bool:
    full = (1 << d.order) - 1
    return all(m == full & ~(1 << v) for v, m in enumerate(d.out_masks))


def is_path_or_cycle(d: Digraph) -> bool:
    """Directed path or directed cycle (connected, all in/out degrees <= 1)."""
    deg = degrees(d)
    return deg.max_out <= 1 and deg.max_in <= 1 and underlying_connected(d)


def bipartite_parts(d: Digraph) -> Optional[Tuple[int, int]]:
    """Part sizes ``(m, n)``, ``m <= n``, when ``d`` is a complete bipartite digraph."""
    if d.order < 2 or d.out_masks != d.in_masks or not underlying_connected(d):
        return None
    side = [-1] * d.order
    side[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in d.out_neighbors(v):
            if side[u] < 0:
                side[u] = 1 - side[v]
                queue.append(u)
            elif side[u] == side[v]:
                return None
    parts = [sum(1 << v for v in range(d.order) if side[v] == s) for s in (0, 1)]
    for v in range(d.order):
        if d.out_masks[v] != parts[1 - side[v]]:
            return None
    a, b = (p.bit_count() for p in parts)
    return min(a, b), max(a, b)


def two_condition(d: Digraph) -> bool:
    """Some vertex reaches all others, or two vertices both reach all but the pair."""
    n = d.order
    outs = [set(d.out_neighbors(v)) for v in range(n)]
    if any(len(o) == n - 1 for o in outs):
        return True
    everyone = set(range(n))
    return any(
        everyone - {u, v} <= outs[u] and everyone - {u, v} <= outs[v]
        for u in range(n)
        for v in range(u + 1, n)
    )


# -- lazily computed facts ------------------------------------------------------


def _arcs_text(arcs: Iterable[Tuple[int, int]]) -> list:
    return [f"{u}->{v}" for u, v in arcs]


class Facts:
    """Quantities about one instance, each computed at most once."""

    def __init__(self, instance: Instance) -> None:
        self.instance = instance
        self.d = instance.digraph
        self.n = instance.digraph.order

    @cached_property
    def gamma_result(self):
        return gamma_italian(self.d)

    @cached_property
    def gamma(self) -> int:
        return self.gamma_result.value

    @cached_property
    def deg(self):
        return degrees(self.d)

    @cached_property
    def connected(self) -> bool:
        return underlying_connected(self.d)

    @cached_property
    def bondage(self):
        """Bondage result, or None when undefined."""
        if self.d.size > BONDAGE_ARC_GUARD:
            raise GuardError(f"bondage search limited to {BONDAGE_ARC_GUARD} arcs, digraph has {self.d.size}")
        try:
            return italian_bondage(self.d)
        except BondageUndefinedError:
            return None

    @cached_property
    def reinforcement(self):
        if self.n * (self.n - 1) - self.d.size > REINFORCE_ARC_GUARD:
            raise GuardError(f"reinforcement search limited to {REINFORCE_ARC_GUARD} candidate arcs")
        return italian_reinforcement(self.d)

    @cached_property
    def gamma_classic(self) -> int:
        if self.n > DOMINATION_GUARD:
            raise GuardError(f"domination search limited to order {DOMINATION_GUARD}")
        return gamma_domination(self.d)[0]

    @cached_property
    def classical_r(self):
        return classical_reinforcement(self.d)

    @cached_property
    def operands(self) -> Tuple[Digraph, Digraph]:
        spec = self.instance.family
        assert spec is not None and spec.operands
        return tuple(op.build() for op in spec.operands)

    def family_kind(self) -> Optional[str]:
        return self.instance.family.kind if self.instance.family is not None else None


# -- the catalog ------------------------------------------------------------------

Outcome = Tuple[bool, dict]


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    summary: str
    applies: Callable[[Facts], Optional[str]]
    claim: Callable[[Facts], Outcome]


def _always(_: Facts) -> Optional[str]:
    return None


def _order_at_least_3(f: Facts) -> Optional[str]:
    return None if f.n >= 3 else "order < 3"


def _obs_upper(f: Facts) -> Outcome:
    bound = f.n - f.deg.max_out + 1
    return f.gamma <= bound, {"gamma_I": f.gamma, "bound": bound}


def _lower(f: Facts) -> Outcome:
    bound = -(-2 * f.n // (2 + f.deg.max_out))
    return f.gamma >= bound, {"gamma_I": f.gamma, "bound": bound}


def _two_iff(f: Facts) -> Outcome:
    # solver side: a plain budget-2 search, independent of the weight-2 shortcut
    weight_two = find_idf(f.d, 2) is not None
    cond = two_condition(f.d)
    return weight_two == cond, {"gamma_I_is_2": weight_two, "condition": cond}


def _below_n_iff(f: Facts) -> Outcome:
    below = f.gamma < f.n
    cond = f.deg.max_out >= 2 or f.deg.max_in >= 2
    return below == cond, {"gamma_I": f.gamma, "n": f.n, "condition": cond}


def _path_cycle_applies(f: Facts) -> Optional[str]:
    return None if is_path_or_cycle(f.d) else "not a directed path or cycle"


def _path_cycle(f: Facts) -> Outcome:
    return f.gamma == f.n, {"gamma_I": f.gamma, "n": f.n}


def _bondage_defined(f: Facts) -> Optional[str]:
    return None if f.gamma < f.n else "bondage undefined (gamma_I = n)"


def _path2_applies(f: Facts) -> Optional[str]:
    if bondage_upper_bound_path2(f.d) is None:
        return "no vertex with two out-neighbors"
    return _bondage_defined(f)


def _path2(f: Facts) -> Outcome:
    cert = bondage_upper_bound_path2(f.d)
    b = f.bondage
    return b.value <= cert.value, {
        "b_I": b.value,
        "bound": cert.value,
        "triple": list(cert.witness_vertices),
        "witness": _arcs_text(b.witness),
    }


def _gamma_delta_applies(f: Facts) -> Optional[str]:
    if f.n < 3:
        return "order < 3"
    if not f.connected:
        return "underlying graph disconnected"
    return _bondage_defined(f)


def _gamma_delta(f: Facts) -> Outcome:
    bound = (f.gamma - 1) * max_underlying_degree(f.d)
    b = f.bondage
    return b.value <= bound, {"b_I": b.value, "bound": bound, "gamma_I": f.gamma}


def _complete_applies(f: Facts) -> Optional[str]:
    return None if f.n >= 3 and is_complete(f.d) else "not a complete digraph of order >= 3"


def _complete_bondage(f: Facts) -> Outcome:
    b = f.bondage
    return b.value == f.n, {"b_I": b.value, "expected": f.n, "witness": _arcs_text(b.witness)}


def _kbip_strict_applies(f: Facts) -> Optional[str]:
    parts = bipartite_parts(f.d)
    if parts is None or parts[0] >= parts[1]:
        return "not K*_{m,n} with m < n"
    return None


def _kbip_bondage(f: Facts) -> Outcome:
    m, n = bipartite_parts(f.d)
    expected = 1 if m <= 2 else 2 if m == 3 else m + 2
    b = f.bondage
    return b.value == expected, {
        "m": m,
        "n": n,
        "b_I": b.value,
        "expected": expected,
        "witness": _arcs_text(b.witness),
    }


def _kbip_applies(f: Facts) -> Optional[str]:
    parts = bipartite_parts(f.d)
    if parts is None or parts[1] < 2:
        return "not K*_{m,n} with 1 <= m <= n, n >= 2"
    return None


def _kbip_gamma(f: Facts) -> Outcome:
    m, n = bipartite_parts(f.d)
    expected = 2 if m <= 2 else 3 if m == 3 else 4
    return f.gamma == expected, {"m": m, "n": n, "gamma_I": f.gamma, "expected": expected}


def _reinforce_applies(f: Facts) -> Optional[str]:
    return None if f.gamma >= 3 else "gamma_I < 3"


def _min_idf_applies(f: Facts) -> Optional[str]:
    if f.gamma < 3:
        return "gamma_I < 3"
    if f.n > MIN_IDF_GUARD:
        return f"order > {MIN_IDF_GUARD} (minimum-IDF enumeration guard)"
    return None


def _irs_structure(f: Facts) -> Outcome:
    r = f.reinforcement
    verdict = validate_irs_witness(f.d, r.witness)
    return verdict.holds, {
        "r_I": r.value,
        "witness": _arcs_text(r.witness),
        "gamma_I": verdict.base_gamma,
        "gamma_I_after": verdict.perturbed_gamma,
        "endpoint_violations": [[g, f"{a}->{b}"] for g, (a, b) in verdict.endpoint_violations],
    }


def _full_gamma_applies(f: Facts) -> Optional[str]:
    if f.n < 3:
        return "order < 3"
    if f.deg.max_out < 1:
        return "no arcs"
    return None if f.gamma == f.n else "gamma_I < n"


def _full_gamma(f: Facts) -> Outcome:
    r = f.reinforcement
    return r.value == 1, {"r_I": r.value, "witness": _arcs_text(r.witness)}


def _one_iff(f: Facts) -> Outcome:
    r = f.reinforcement
    cond = check_rI_one_characterization(f.d)
    details = {"r_I": r.value, "condition": cond, "gamma_I": f.gamma}
    ok = (r.value == 1) == cond
    if not ok:
        # diagnostic only: does the 0-labeled-targets reading of (ii) agree?
        details["zero_targets_condition"] = check_rI_one_characterization(f.d, zero_targets_only=True)
    return ok, details


def _reinforce_bound(f: Facts) -> Outcome:
    bound = f.n - f.deg.max_out - f.gamma + 2
    r = f.reinforcement
    return r.value <= bound, {"r_I": r.value, "bound": bound, "gamma_I": f.gamma}


def _r_vs_ri_applies(f: Facts) -> Optional[str]:
    if f.gamma != 3:
        return "gamma_I != 3"
    return None if f.gamma_classic == 2 else "gamma != 2"


def _r_vs_ri(f: Facts) -> Outcome:
    r = f.classical_r
    ri = f.reinforcement
    return r.value <= ri.value + 1, {
        "r": r.value,
        "r_I": ri.value,
        "r_witness": _arcs_text(r.witness),
        "r_I_witness": _arcs_text(ri.witness),
    }


def _join_applies(f: Facts) -> Optional[str]:
    if f.family_kind() != "join_oneway":
        return "not a one-way join instance"
    g, h = f.operands
    if g.max_out_degree < 1 or h.max_out_degree < 1:
        return "an operand has no arcs"
    return None


def _join(f: Facts) -> Outcome:
    g, _ = f.operands
    gamma_g = gamma_italian(g).value
    r_g = italian_reinforcement(g).value
    r_join = f.reinforcement.value
    return f.gamma == gamma_g and r_join == r_g, {
        "gamma_I": f.gamma,
        "gamma_I_G": gamma_g,
        "r_I": r_join,
        "r_I_G": r_g,
    }


def _corona_applies(f: Facts) -> Optional[str]:
    if f.family_kind() != "corona":
        return "not a corona instance"
    return None if f.operands[1].order >= 2 else "n(H) < 2"


def corona_reinforcement_formula(g: Digraph, h: Digraph) -> int:
    if g.order == 1:
        return 0
    if g.size == 0:
        return h.order
    return h.order - 1


def _corona(f: Facts) -> Outcome:
    g, h = f.operands
    expected_gamma = 2 * g.order
    expected_r = corona_reinforcement_formula(g, h)
    r = f.reinforcement
    return f.gamma == expected_gamma and r.value == expected_r, {
        "gamma_I": f.gamma,
        "expected_gamma_I": expected_gamma,
        "r_I": r.value,
        "expected_r_I": expected_r,
        "witness": _arcs_text(r.witness),
    }


CATALOG: Tuple[TheoremCheck, ...] = (
    TheoremCheck("obs-2.1", "gamma_I <= n - max out-degree + 1", _always, _obs_upper),
    TheoremCheck("eq-com-bi", "gamma_I(K*_{m,n}) is 2, 3, 4 for m <= 2, m = 3, m >= 4", _kbip_applies, _kbip_gamma),
    TheoremCheck("thm-2.3", "gamma_I >= ceil(2n / (2 + max out-degree))", _always, _lower),
    TheoremCheck("thm-2.4-iff", "gamma_I = 2 iff a vertex or a vertex pair reaches the rest", _order_at_least_3, _two_iff),
    TheoremCheck("thm-2.5-iff", "gamma_I < n iff some in- or out-degree is >= 2", _order_at_least_3, _below_n_iff),
    TheoremCheck("cor-2.6", "directed paths and cycles have gamma_I = n", _path_cycle_applies, _path_cycle),
    TheoremCheck("thm-3.1", "b_I bounded through a vertex with two out-neighbors", _path2_applies, _path2),
    TheoremCheck("thm-3.2", "b_I <= (gamma_I - 1) * max underlying degree", _gamma_delta_applies, _gamma_delta),
    TheoremCheck("thm-3.3", "b_I(K*_n) = n", _complete_applies, _complete_bondage),
    TheoremCheck("thm-3.4", "b_I(K*_{m,n}) is 1, 2, m + 2 for m <= 2, m = 3, m >= 4", _kbip_strict_applies, _kbip_bondage),
    TheoremCheck("lem-4.1", "minimum reinforcement sets drop gamma_I by one, tails nonzero, heads zero", _min_idf_applies, _irs_structure),
    TheoremCheck("lem-4.2", "max out-degree >= 1 and gamma_I = n give r_I = 1", _full_gamma_applies, _full_gamma),
    TheoremCheck("thm-4.3-iff", "r_I = 1 iff a minimum IDF has a suitable 1-labeled vertex", _min_idf_applies, _one_iff),
    TheoremCheck("thm-4.4-bound", "r_I <= n - max out-degree - gamma_I + 2", _reinforce_applies, _reinforce_bound),
    TheoremCheck("thm-4.x-r-vs-rI", "gamma_I = 3 and gamma = 2 give r <= r_I + 1", _r_vs_ri_applies, _r_vs_ri),
    TheoremCheck("thm-4.5-join", "gamma_I and r_I of G -> H equal those of G", _join_applies, _join),
    TheoremCheck("thm-4.6-corona", "corona has gamma_I = 2n(G) and the three-case r_I", _corona_applies, _corona),
)

CHECKS = {c.id: c for c in CATALOG}
CHECK_IDS = tuple(c.id for c in CATALOG)

#: Checks that only need gamma_I and degrees.
GAMMA_ONLY = ("obs-2.1", "thm-2.3", "thm-2.4-iff", "thm-2.5-iff", "cor-2.6", "eq-com-bi")


# -- verdicts -----------------------------------------------------------------------


@dataclass
class TheoremVerdict:
    check_id: str
    instance: str
    outcome: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"check": self.check_id, "instance": self.instance, "outcome": self.outcome, "details": self.details}


def _evaluate(check: TheoremCheck, facts: Facts) -> TheoremVerdict:
    desc = facts.instance.descriptor
    try:
        reason = check.applies(facts)
        if reason is not None:
            return TheoremVerdict(check.id, desc, NOT_APPLICABLE, {"reason": reason})
        ok, details = check.claim(facts)
    except (GuardError, ItaldomError) as exc:
        return TheoremVerdict(check.id, desc, NOT_APPLICABLE, {"reason": str(exc)})
    return TheoremVerdict(check.id, desc, HOLDS if ok else VIOLATED, details)


def run_check(check: Union[TheoremCheck, str], instance: Union[Instance, Digraph, str]) -> TheoremVerdict:
    if isinstance(check, str):
        check = CHECKS[check]
    return _evaluate(check, Facts(as_instance(instance)))


# -- corpora ------------------------------------------------------------------------


@dataclass(frozen=True)
class RandomSpec:
    n: int
    p: float
    seed: int
    count: int
    checks: Optional[Tuple[str, ...]] = None

    def descriptors(self) -> Iterator[str]:
        for i in range(self.count):
            yield f"random:{self.n},{self.p},{self.seed + i}"


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    checks: Optional[Tuple[str, ...]] = None


@dataclass(frozen=True)
class CorpusConfig:
    exhaustive_orders: Tuple[int, ...] = ()
    random: Tuple[RandomSpec, ...] = ()
    family_catalog: Tuple[CatalogEntry, ...] = ()

    def __post_init__(self) -> None:
        for n in self.exhaustive_orders:
            if not 1 <= n <= ENUMERATION_GUARD:
                raise GuardError(f"exhaustive order {n} outside 1..{ENUMERATION_GUARD}")
        for entry in self.family_catalog:
            parse_family(entry.family)
        for spec in self.random:
            if not 0 <= spec.p <= 1 or spec.count < 0:
                raise ValueError(f"bad random corpus entry {spec}")
        for ids in [e.checks for e in self.family_catalog] + [r.checks for r in self.random]:
            for cid in ids or ():
                if cid not in CHECKS:
                    raise ValueError(f"unknown check id {cid!r}")

    def work(self) -> Iterator[Tuple[str, Optional[Tuple[str, ...]]]]:
        """Instance descriptors in report order, each with its check restriction."""
        for n in self.exhaustive_orders:
            for mask in range(1 << (n * (n - 1))):
                yield enum_descriptor(n, mask), None
        for entry in self.family_catalog:
            yield entry.family, entry.checks
        for spec in self.random:
            for desc in spec.descriptors():
                yield desc, spec.checks

    @classmethod
    def from_dict(cls, data: dict) -> "CorpusConfig":
        rnd = []
        for item in data.get("random", []):
            if isinstance(item, dict):
                checks = item.get("checks")
                rnd.append(RandomSpec(int(item["n"]), float(item["p"]), int(item["seed"]), int(item["count"]),
                                      tuple(checks) if checks else None))
            else:
                n, p, seed, count = item
                rnd.append(RandomSpec(int(n), float(p), int(seed), int(count)))
        cat = []
        for item in data.get("family_catalog", []):
            if isinstance(item, dict):
                checks = item.get("checks")
                cat.append(CatalogEntry(item["family"], tuple(checks) if checks else None))
            else:
                cat.append(CatalogEntry(item))
        return cls(tuple(int(n) for n in data.get("exhaustive_orders", [])), tuple(rnd), tuple(cat))

    def to_dict(self) -> dict:
        def checks(c):
            return list(c) if c else None

        return {
            "exhaustive_orders": list(self.exhaustive_orders),
            "family_catalog": [{"family": e.family, "checks": checks(e.checks)} for e in self.family_catalog],
            "random": [
                {"n": r.n, "p": r.p, "seed": r.seed, "count": r.count, "checks": checks(r.checks)}
                for r in self.random
            ],
        }


def default_catalog() -> Tuple[CatalogEntry, ...]:
    """Family instances for the value-type claims (complete, bipartite, joins, coronas)."""
    entries = []
    for n in range(2, 8):
        entries.append(CatalogEntry(f"path:{n}", GAMMA_ONLY))
        entries.append(CatalogEntry(f"cycle:{n}", GAMMA_ONLY))
    for n in range(3, 7):
        entries.append(CatalogEntry(f"complete:{n}", GAMMA_ONLY + ("thm-3.3",) if n <= 5 else GAMMA_ONLY))
    for m in range(1, 6):
        for n in range(m, 7):
            entries.append(CatalogEntry(f"kbip:{m},{n}", ("eq-com-bi",)))
    for m, n in ((1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)):
        entries.append(CatalogEntry(f"kbip:{m},{n}", ("thm-3.4",)))
    ops = [f"path:{k}" for k in (2, 3, 4)] + [f"cycle:{k}" for k in (3, 4)] + [f"complete:{k}" for k in (2, 3, 4)]
    for g in ops:
        for h in ops:
            entries.append(CatalogEntry(f"join1:({g}),({h})", ("thm-4.5-join",)))
    for g in ("empty:1", "empty:2", "empty:3", "path:2", "path:3", "cycle:3"):
        for h in ("empty:2", "empty:3", "path:2", "path:3"):
            entries.append(CatalogEntry(f"corona:({g}),({h})", ("thm-4.6-corona",)))
    return tuple(entries)


def _run_instance(args: Tuple[str, Optional[Tuple[str, ...]], Tuple[str, ...]]):
    descriptor, restrict, check_ids = args
    instance = resolve_instance(descriptor)
    facts = Facts(instance)
    out = []
    for cid in check_ids:
        if restrict is not None and cid not in restrict:
            continue
        start = time.perf_counter()
        verdict = _evaluate(CHECKS[cid], facts)
        out.append((verdict, time.perf_counter() - start))
    return out


@dataclass
class Report:
    check_ids: Tuple[str, ...]
    counts: dict
    violations: list
    instances: int
    config: dict
    timings: dict = field(default_factory=dict)

    @property
    def blocking_violations(self) -> list:
        return [v for v in self.violations if v.check_id not in DOCUMENTED_EXCEPTIONS]

    def to_json(self, include_timings: bool = False) -> str:
        data = {
            "checks": {cid: self.counts[cid] for cid in self.check_ids},
            "config": self.config,
            "documented_exceptions": list(DOCUMENTED_EXCEPTIONS),
            "instances": self.instances,
            "violations": [v.to_json() for v in self.violations],
        }
        if include_timings:
            data["wall_time_s"] = {cid: round(self.timings.get(cid, 0.0), 6) for cid in self.check_ids}
        return json.dumps(data, indent=2, sort_keys=True) + "\n"

    def table(self) -> str:
        header = f"{'check':<18}{'holds':>8}{'violated':>10}{'n/a':>8}{'time_s':>10}"
        lines = [header, "-" * len(header)]
        for cid in self.check_ids:
            c = self.counts[cid]
            lines.append(
                f"{cid:<18}{c[HOLDS]:>8}{c[VIOLATED]:>10}{c[NOT_APPLICABLE]:>8}{self.timings.get(cid, 0.0):>10.2f}"
            )
        lines.append(f"instances: {self.instances}; violations: {len(self.violations)}")
        for v in self.violations:
            lines.append(f"  VIOLATED {v.check_id} on {v.instance}: {json.dumps(v.details, sort_keys=True)}")
        return "\n".join(lines)


def run_corpus(config: CorpusConfig, checks: Optional[Sequence[str]] = None, workers: int = 1) -> Report:
    """Evaluate ``checks`` (default: the whole catalog) on every instance of ``config``."""
    check_ids = tuple(checks) if checks else CHECK_IDS
    for cid in check_ids:
        if cid not in CHECKS:
            raise ValueError(f"unknown check id {cid!r}")
    counts = {cid: {HOLDS: 0, VIOLATED: 0, NOT_APPLICABLE: 0} for cid in check_ids}
    timings = {cid: 0.0 for cid in check_ids}
    violations = []
    jobs = ((desc, restrict, check_ids) for desc, restrict in config.work())
    instances = 0

    def consume(results) -> None:
        nonlocal instances
        for per_instance in results:
            instances += 1
            for verdict, elapsed in per_instance:
                counts[verdict.check_id][verdict.outcome] += 1
                timings[verdict.check_id] += elapsed
                if verdict.outcome == VIOLATED:
                    violations.append(verdict)

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            consume(pool.map(_run_instance, jobs, chunksize=64))
    else:
        consume(map(_run_instance, jobs))
    return Report(check_ids, counts, violations, instances, config.to_dict(), timings)
