"""Cyclic blow-up preprocessing.

Alternates blow-up phases (one increasing struction that temporarily grows
the graph) with full reduction phases, keeping whichever kernel is smallest:

    K <- reduce(G); K* <- K
    while |V(K)| < alpha * |V(K*)| and unsuccessful < X:
        K'  <- blow_up(K)           (NoCandidate: return K*)
        K'' <- reduce(K')
        accept K'' only if it has strictly fewer vertices than K,
        otherwise roll K, the log and the candidate bounds back and
        count the phase as unsuccessful
        K* <- K whenever K got smaller

Blow-up candidates are ranked by estimated net growth bound - (deg + 1),
where bound starts at L, the number of exceeding independent sets of size
at most two.  A struction attempt is capped at min(ceil(beta*bound) - 1,
n_max); a cap abort below n_max doubles the bound and retries later
(tightness check), anything else excludes the vertex until its weight or
neighborhood changes.
"""

import math
import time
from dataclasses import dataclass, field

from .reductions import (KernelResult, ReduceConfig, _reduce_into,
                         _with_neighbors, neighborhood_fingerprint)
from .struction import VARIANT_OPS, Aborted, NotMinimal
from .translog import TransformLog

CHANGED = "changed"
NO_CANDIDATE = "nocandidate"

PRESET_NONINCREASING = "nonincreasing"
PRESET_CYCLIC_FAST = "cyclic-fast"
PRESET_CYCLIC_STRONG = "cyclic-strong"
PRESETS = (PRESET_NONINCREASING, PRESET_CYCLIC_FAST, PRESET_CYCLIC_STRONG)


@dataclass
class BlowupConfig:
    X: int = 25                  # max unsuccessful blow-up phases
    n_max: int = 512             # hard cap on vertices created by one struction
    d_max: int = 64              # max center degree
    alpha: float = 1.25          # size-explosion guard factor
    beta: float = 2.0            # tightness-check factor
    variant: str = "extended"
    reduce_cfg: ReduceConfig = field(default_factory=ReduceConfig)
    structions_per_phase: int = 1


def make_blowup_config(mode, **overrides):
    """Named presets; keyword overrides replace individual fields."""
    if mode == PRESET_CYCLIC_FAST:
        cfg = BlowupConfig(X=25, n_max=512, d_max=64)
    elif mode == PRESET_CYCLIC_STRONG:
        cfg = BlowupConfig(X=64, n_max=2048, d_max=512)
    else:
        raise ValueError(f"unknown cyclic preset {mode!r}")
    for key, val in overrides.items():
        if val is not None:
            setattr(cfg, key, val)
    cfg.reduce_cfg = ReduceConfig(variant=cfg.variant, d_max=cfg.d_max)
    return cfg


def estimate_L(g, v):
    """Exceeding independent sets of size <= 2 inside N(v): a lower bound
    on how many vertices a struction at v would create."""
    wv = g.weight(v)
    w, nbs = g._w, g._nbs
    nbrs = g._adj[v]
    count = sum(1 for u in nbrs if w[u] > wv)
    for i, u in enumerate(nbrs):
        wu = w[u]
        nu = nbs[u]
        for x in nbrs[i + 1:]:
            if wu + w[x] > wv and x not in nu:
                count += 1
    return count


@dataclass
class BlowupState:
    bounds: dict = field(default_factory=dict)    # vertex -> current bound
    excluded: dict = field(default_factory=dict)  # vertex -> fingerprint


def blow_up(K, state, cfg, log):
    """Apply one (configurable: up to structions_per_phase) increasing
    struction to the irreducible graph K.  Returns (status, centers, seeds)
    where seeds is the dirty region the follow-up reduction must revisit."""
    centers = []
    seeds = set()
    while len(centers) < cfg.structions_per_phase:
        best = None
        for v in K.active_vertices():
            d = K.degree(v)
            if d > cfg.d_max:
                continue
            if state.excluded.get(v) == neighborhood_fingerprint(K, v):
                continue
            b = state.bounds.get(v)
            if b is None:
                b = estimate_L(K, v)
                state.bounds[v] = b
            key = (b - (d + 1), v)
            if best is None or key < best[0]:
                best = (key, v, b)
        if best is None:
            break
        _key, v, b = best
        tight_cap = math.ceil(cfg.beta * b) - 1
        cap = min(tight_cap, cfg.n_max)
        changed = set()
        try:
            out = VARIANT_OPS[cfg.variant](K, v, cap, log, changed=changed)
        except NotMinimal:
            state.excluded[v] = neighborhood_fingerprint(K, v)
            state.bounds.pop(v, None)
            continue
        if isinstance(out, Aborted):
            if out.reason == "budget" or tight_cap >= cfg.n_max:
                # the cap that failed was the global one (or the enumeration
                # gave up): shelve v until its neighborhood changes
                state.excluded[v] = neighborhood_fingerprint(K, v)
                state.bounds.pop(v, None)
            else:
                # tightness failure: retry later with a doubled bound
                state.bounds[v] = max(math.ceil(cfg.beta * b), b + 1)
            continue
        state.bounds.pop(v, None)
        centers.append(v)
        live = [x for x in changed if K.is_active(x)]
        seeds |= _with_neighbors(K, live)
    return (CHANGED, centers, seeds) if centers else (NO_CANDIDATE, centers,
                                                      seeds)


def cyclic_blow_up(g, cfg=None, deadline=None):
    """Run the full blow-up/reduce cycle on g (consumed); returns the best
    kernel found, with a log describing exactly that kernel.

    deadline is an optional time.monotonic() timestamp; once it passes, no
    further phases start and the best kernel so far is returned (which is
    always a valid kernel, so callers can keep going with it)."""
    cfg = cfg or BlowupConfig()
    log = TransformLog()
    stats = {}
    _reduce_into(g, cfg.reduce_cfg, log, stats)
    K = g
    best = K.copy()
    best_len = len(log)
    stats["initial_kernel_n"] = K.counts()[0]
    stats["blowup_phases"] = 0
    stats["blowup_accepts"] = 0
    stats["blowup_rejects"] = 0

    state = BlowupState()
    unsuccessful = 0
    while (K.counts()[0] < cfg.alpha * best.counts()[0]
           and unsuccessful < cfg.X):
        if deadline is not None and time.monotonic() >= deadline:
            break
        snap_graph = K.copy()
        snap_len = len(log)
        snap_bounds = dict(state.bounds)
        pre_n = K.counts()[0]

        status, centers, seeds = blow_up(K, state, cfg, log)
        if status == NO_CANDIDATE:
            break
        stats["blowup_phases"] = stats.get("blowup_phases", 0) + 1
        _reduce_into(K, cfg.reduce_cfg, log, stats, seeds=seeds)

        if K.counts()[0] < pre_n:
            stats["blowup_accepts"] = stats.get("blowup_accepts", 0) + 1
            state.bounds.clear()
            if K.counts()[0] < best.counts()[0]:
                best = K.copy()
                best_len = len(log)
        else:
            stats["blowup_rejects"] = stats.get("blowup_rejects", 0) + 1
            K = snap_graph
            log.truncate(snap_len)
            state.bounds = snap_bounds
            for v in centers:
                state.excluded[v] = neighborhood_fingerprint(K, v)
            unsuccessful += 1

    log.truncate(best_len)
    stats["kernel_n"], stats["kernel_m"] = best.counts()
    return KernelResult(best, log.offset, log, stats)


def preprocess(g, mode=PRESET_NONINCREASING, reduce_cfg=None, blowup_cfg=None,
               deadline=None):
    """Dispatch to plain reduction or the cyclic cycle by preset name."""
    from . import reductions

    if mode == PRESET_NONINCREASING:
        return reductions.reduce(g, reduce_cfg or ReduceConfig())
    if blowup_cfg is None:
        blowup_cfg = make_blowup_config(mode)
    return cyclic_blow_up(g, blowup_cfg, deadline=deadline)
