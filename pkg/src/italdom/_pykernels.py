"""Pure-Python search kernels.

Same functions and return conventions as the compiled ``_ckernels`` module;
:mod:`italdom._backend` picks one at import time.  Digraphs arrive as lists of
in/out bitmasks, labelings leave as ``(ones, twos)`` bitmask pairs.
"""

from __future__ import annotations

from itertools import combinations

NAME = "python"


def best_idf(n, in_masks, out_masks, order, budget, lower):
    """Lightest Italian dominating function of weight at most ``budget``.

    Depth-first branch and bound over ``order``, labels tried 0, 2, 1.  The
    search returns as soon as it holds a labeling of weight ``<= lower``.
    Returns ``(weight, ones, twos, nodes)``; ``weight`` is -1 when no IDF of
    weight ``<= budget`` exists.
    """
    full = (1 << n) - 1
    best = [budget + 1, 0, 0]
    nodes = 0
    stop = False

    def visit(i, assigned, ones, twos, weight):
        nonlocal nodes, stop
        nodes += 1
        unassigned = full & ~assigned
        zeros = assigned & ~(ones | twos)
        need = 0
        needy = 0
        forced = 0
        pending = zeros | unassigned
        while pending:
            low = pending & -pending
            pending ^= low
            v = low.bit_length() - 1
            m = in_masks[v]
            cur = (m & ones).bit_count() + 2 * (m & twos).bit_count()
            if cur >= 2:
                continue
            if cur + 2 * (m & unassigned).bit_count() < 2:
                if zeros & low:
                    return
                forced += 1
            need += 2 - cur
            needy |= low
        if need == 0:
            if weight < best[0]:
                best[0], best[1], best[2] = weight, ones, twos
                if weight <= lower:
                    stop = True
            return
        # each unit of new weight on u covers at most 2 + |N+(u) & needy| need
        spread = 0
        free = unassigned
        while free:
            low = free & -free
            free ^= low
            d = (out_masks[low.bit_length() - 1] & needy).bit_count()
            if d > spread:
                spread = d
        lb = -(-need // (2 + spread))
        if forced > lb:
            lb = forced
        if weight + lb > budget or weight + lb >= best[0]:
            return
        bit = 1 << order[i]
        assigned |= bit
        visit(i + 1, assigned, ones, twos, weight)
        if stop:
            return
        visit(i + 1, assigned, ones, twos | bit, weight + 2)
        if stop:
            return
        visit(i + 1, assigned, ones | bit, twos, weight + 1)

    if budget >= 0:
        visit(0, 0, 0, 0, 0)
    if best[0] > budget:
        return -1, 0, 0, nodes
    return best[0], best[1], best[2], nodes


def _survives(in_masks, heads, ones, twos):
    labelled = ones | twos
    for h in heads:
        if labelled >> h & 1:
            continue
        m = in_masks[h]
        if (m & ones).bit_count() + 2 * (m & twos).bit_count() < 2:
            return False
    return True


def first_bondage_subset(n, in_masks, out_masks, tails, heads, k, gamma, order, cache):
    """Lexicographically first ``k``-subset of arcs whose removal lifts gamma_I.

    ``cache`` holds ``(ones, twos)`` IDFs of the intact digraph of weight
    ``gamma`` and is updated in place (most recently useful first).  Such an
    IDF stays valid after removal unless a removed arc enters one of its zero
    vertices, so only those heads are rechecked.  On a cache miss the full
    decision search runs on the reduced digraph.  Returns ``(indices, nodes)``
    with ``indices`` None when no subset works.
    """
    nodes = 0
    for combo in combinations(range(len(tails)), k):
        ins = list(in_masks)
        outs = list(out_masks)
        hs = []
        for j in combo:
            t, h = tails[j], heads[j]
            ins[h] &= ~(1 << t)
            outs[t] &= ~(1 << h)
            hs.append(h)
        hit = -1
        for idx, (ones, twos) in enumerate(cache):
            if _survives(ins, hs, ones, twos):
                hit = idx
                break
        if hit > 0:
            cache.insert(0, cache.pop(hit))
        if hit >= 0:
            continue
        weight, ones, twos, used = best_idf(n, ins, outs, order, gamma, gamma)
        nodes += used
        if weight < 0:
            return combo, nodes
        cache.insert(0, (ones, twos))
        if len(cache) > CACHE_LIMIT:
            cache.pop()
    return None, nodes


def first_reinforcing_subset(n, in_masks, out_masks, tails, heads, k, target, order):
    """Lexicographically first ``k``-subset of candidate arcs whose addition
    admits an IDF of weight ``<= target``.  Returns ``(indices, nodes)``."""
    nodes = 0
    for combo in combinations(range(len(tails)), k):
        ins = list(in_masks)
        outs = list(out_masks)
        for j in combo:
            t, h = tails[j], heads[j]
            ins[h] |= 1 << t
            outs[t] |= 1 << h
        weight, _, _, used = best_idf(n, ins, outs, order, target, target)
        nodes += used
        if weight >= 0:
            return combo, nodes
    return None, nodes


CACHE_LIMIT = 512
