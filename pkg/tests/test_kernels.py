"""Both kernel modules must agree exactly, node counts included."""

import os
import subprocess
import sys

import pytest
from hypothesis import given, settings

from italdom import _backend, _pykernels
from italdom.families import build_family, random_digraph
from italdom.idf import brute_force_gamma_italian, branch_order, upper_bound_witness

from .conftest import KERNELS, _ckernels
from .strategies import digraphs

needs_compiled = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def _gamma_args(d):
    return d.order, d.in_masks, d.out_masks, branch_order(d), upper_bound_witness(d).weight, 0


@given(digraphs(min_order=3, max_order=7))
def test_best_idf_is_exact(d):
    want = brute_force_gamma_italian(d).value
    for mod in KERNELS:
        weight, ones, twos, _ = mod.best_idf(*_gamma_args(d))
        assert weight == want
        assert (ones & twos) == 0


def test_budget_too_small(kernel):
    d = build_family("cycle:5")
    assert kernel.best_idf(5, d.in_masks, d.out_masks, branch_order(d), 4, 0)[0] == -1
    assert kernel.best_idf(5, d.in_masks, d.out_masks, branch_order(d), -1, 0) == (-1, 0, 0, 0)


@needs_compiled
@settings(max_examples=60)
@given(digraphs(min_order=2, max_order=9))
def test_same_answer_and_nodes(d):
    assert _pykernels.best_idf(*_gamma_args(d)) == _ckernels.best_idf(*_gamma_args(d))


@needs_compiled
@pytest.mark.parametrize("n", [16, 30, 64])
def test_wide_digraphs(n):
    d = random_digraph(n, 0.3 if n < 64 else 0.6, n)
    budget = upper_bound_witness(d).weight - 1
    args = (d.order, d.in_masks, d.out_masks, branch_order(d), budget, 0)
    if n == 64:
        # full search is slow in Python; compare the compiled answer for validity only
        w, ones, twos, _ = _ckernels.best_idf(*args)
        assert w == -1 or (ones | twos).bit_count() <= w
        return
    assert _pykernels.best_idf(*args) == _ckernels.best_idf(*args)


def _split(arcs):
    return [t for t, _ in arcs], [h for _, h in arcs]


@needs_compiled
@pytest.mark.parametrize("spec, k", [("kbip:2,3", 1), ("complete:4", 2), ("complete:4", 3), ("kbip:3,4", 2)])
def test_bondage_subset_agrees(spec, k):
    d = build_family(spec)
    tails, heads = _split(d.arcs())
    gamma = brute_force_gamma_italian(d).value
    results = []
    for mod in (_pykernels, _ckernels):
        cache = []
        results.append((mod.first_bondage_subset(d.order, d.in_masks, d.out_masks, tails, heads, k, gamma,
                                                 branch_order(d), cache), cache))
    assert results[0] == results[1]


@needs_compiled
@pytest.mark.parametrize("spec, target", [("cycle:5", 4), ("path:5", 4), ("cycle:6", 5)])
def test_reinforcing_subset_agrees(spec, target):
    from italdom.digraph import complement_arcs

    d = build_family(spec)
    tails, heads = _split(list(complement_arcs(d)))
    for k in (1, 2):
        a = _pykernels.first_reinforcing_subset(d.order, d.in_masks, d.out_masks, tails, heads, k, target,
                                                branch_order(d))
        b = _ckernels.first_reinforcing_subset(d.order, d.in_masks, d.out_masks, tails, heads, k, target,
                                               branch_order(d))
        assert a == b


def test_subset_size_out_of_range(kernel):
    d = build_family("path:3")
    tails, heads = _split(d.arcs())
    assert kernel.first_bondage_subset(3, d.in_masks, d.out_masks, tails, heads, 5, 2, [0, 1, 2], []) == (None, 0)
    assert kernel.first_reinforcing_subset(3, d.in_masks, d.out_masks, tails, heads, 5, 2, [0, 1, 2]) == (None, 0)


def test_cache_limit_matches():
    if _ckernels is not None:
        assert _ckernels.CACHE_LIMIT == _pykernels.CACHE_LIMIT


def test_env_forces_pure_python():
    code = "from italdom import _backend; print(_backend.kernels.NAME, _backend.COMPILED)"
    env = dict(os.environ, ITALDOM_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "False"]


def test_backend_prefers_compiled():
    if os.environ.get("ITALDOM_PURE_PYTHON"):
        pytest.skip("fallback forced by environment")
    assert _backend.COMPILED == (_ckernels is not None)
