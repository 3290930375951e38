import logging

import pytest
from hypothesis import assume, given, settings

from italdom.digraph import add_arcs, new_digraph, remove_arcs
from italdom.errors import BondageUndefinedError
from italdom.families import (
    build_family,
    complete_bipartite_digraph,
    complete_digraph,
    directed_cycle,
    directed_path,
    enumerate_all,
)
from italdom.idf import gamma_domination, gamma_italian
from italdom.perturbation import (
    bondage_upper_bound_gamma_delta,
    bondage_upper_bound_path2,
    check_rI_one_characterization,
    classical_reinforcement,
    italian_bondage,
    italian_reinforcement,
    reinforcement_upper_bound,
    validate_irs_witness,
)

from .oracles import bondage_by_milp, bondage_by_subsets, reinforcement_by_labelings
from .strategies import digraphs


@settings(max_examples=60)
@given(digraphs(min_order=2, max_order=4))
def test_bondage_against_subset_oracle(d):
    g = gamma_italian(d).value
    assume(g < d.order and d.size <= 9)
    r = italian_bondage(d)
    assert r.value == bondage_by_subsets(d)
    assert len(r.witness) == r.value
    assert gamma_italian(remove_arcs(d, r.witness)).value == r.perturbed_gamma > g


@settings(max_examples=80)
@given(digraphs(min_order=2, max_order=5))
def test_reinforcement_against_labeling_oracle(d):
    r = italian_reinforcement(d)
    assert r.value == reinforcement_by_labelings(d)
    if r.value:
        assert gamma_italian(add_arcs(d, r.witness)).value == r.perturbed_gamma < r.base_gamma


@pytest.mark.parametrize("m, n", [(1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)])
def test_bipartite_bondage_against_milp(m, n):
    pytest.importorskip("scipy")
    d = complete_bipartite_digraph(m, n)
    assert italian_bondage(d).value == bondage_by_milp(d)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_complete_bondage(n):
    assert italian_bondage(complete_digraph(n)).value == n


def test_bondage_undefined():
    with pytest.raises(BondageUndefinedError):
        italian_bondage(directed_path(4))


@pytest.mark.parametrize("spec", ["complete:3", "complete:4", "kbip:2,3", "kbip:1,3"])
def test_bondage_witness_is_lexicographically_first(spec):
    from itertools import combinations

    d = build_family(spec)
    r = italian_bondage(d)
    first = next(
        c for c in combinations(d.arcs(), r.value)
        if gamma_italian(remove_arcs(d, c)).value > r.base_gamma
    )
    assert r.witness == first


def test_bondage_witness_of_star_pair():
    # both arcs of one 2-cycle must go: any single removal leaves an IDF of weight 2
    d = complete_bipartite_digraph(1, 2)
    for a in d.arcs():
        assert gamma_italian(remove_arcs(d, [a])).value == 2
    assert italian_bondage(d).value == 2


def test_bipartite_counterexample_to_witness():
    # the removal set {x_i -> y_1} + {y_1 -> x_1, y_1 -> x_2} keeps gamma_I at 4
    d = complete_bipartite_digraph(4, 5)
    y1 = 4
    removed = [(x, y1) for x in range(4)] + [(y1, 0), (y1, 1)]
    assert gamma_italian(remove_arcs(d, removed)).value == 4
    assert italian_bondage(d).value == 7


def test_cycle_reinforcement():
    for n in range(3, 7):
        r = italian_reinforcement(directed_cycle(n))
        assert r.value == 1
        assert len(r.witness) == 1


def test_reinforcement_zero_when_gamma_small():
    r = italian_reinforcement(complete_digraph(4))
    assert (r.value, r.witness) == (0, ())


@given(digraphs(min_order=3, max_order=6))
def test_path2_bound_holds(d):
    cert = bondage_upper_bound_path2(d)
    g = gamma_italian(d).value
    assume(cert is not None and g < d.order and d.size <= 14)
    assert italian_bondage(d).value <= cert.value


@settings(max_examples=50)
@given(digraphs(min_order=3, max_order=5))
def test_gamma_delta_bound_holds(d):
    cert = bondage_upper_bound_gamma_delta(d)
    g = gamma_italian(d).value
    assume(cert is not None and g < d.order)
    assert italian_bondage(d).value <= cert.value


@given(digraphs(min_order=3, max_order=6))
def test_reinforcement_bound_holds(d):
    cert = reinforcement_upper_bound(d)
    assume(cert is not None)
    assert italian_reinforcement(d).value <= cert.value


def test_reinforcement_quiet_within_bound(caplog):
    # bound on the 5-cycle is 5 - 1 - 5 + 2 = 1 and the search stops at 1
    with caplog.at_level(logging.WARNING):
        italian_reinforcement(directed_cycle(5))
    assert not caplog.records


@settings(max_examples=60)
@given(digraphs(min_order=3, max_order=5))
def test_irs_witness_structure(d):
    r = italian_reinforcement(d)
    assume(r.value > 0)
    verdict = validate_irs_witness(d, r.witness)
    assert verdict.holds, verdict


def test_stated_characterization_misses_a_case():
    # r_I = 1 here, but the out-neighbor condition fails at a 2-labeled vertex
    d = new_digraph(4, [(0, 2), (0, 3), (1, 0)])
    assert gamma_italian(d).value == 3
    assert italian_reinforcement(d).value == 1
    assert not check_rI_one_characterization(d)
    assert check_rI_one_characterization(d, zero_targets_only=True)


def test_zero_target_characterization_exhaustive():
    for n in (3, 4):
        for d in enumerate_all(n):
            if gamma_italian(d).value < 3:
                continue
            r = italian_reinforcement(d).value
            assert (r == 1) == check_rI_one_characterization(d, zero_targets_only=True)


def test_characterization_needs_gamma_three():
    with pytest.raises(ValueError):
        check_rI_one_characterization(complete_digraph(3))


@given(digraphs(min_order=2, max_order=5))
def test_classical_reinforcement(d):
    r = classical_reinforcement(d)
    g = gamma_domination(d)[0]
    if g == 1:
        assert r.value == 0
    else:
        assert gamma_domination(add_arcs(d, r.witness))[0] == g - 1
        # one arc per extra vertex dominated: never more than n - g additions needed
        assert 1 <= r.value <= d.order - g + 1


def test_witness_arcs_are_complement_arcs():
    d = build_family("path:4")
    r = italian_reinforcement(d)
    assert all(not d.has_arc(t, h) for t, h in r.witness)
