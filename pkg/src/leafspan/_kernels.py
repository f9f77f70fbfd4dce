"""Hot numeric and combinatorial kernels.

Every kernel is written once as a plain function over numpy arrays and int64
bitmasks, then compiled with numba when available. Selection: the LEAFSPAN_JIT
environment variable forces the pure path ("0", "false", "off", "no") or the
compiled path (anything else); unset means compile when numba imports.
USING_JIT reports the active path. Results are identical on both paths for
the integer kernels; floating kernels agree to rounding.

Bitmask convention: bit v of adj[u] set means uv is an edge. Kernels require
n <= 62 so masks fit in int64 with the sign bit spared. Edge masks over the
upper triangle are column-major: bit index of (i, j), i < j, is
j*(j-1)/2 + i.
"""
from __future__ import annotations

import os
import warnings

import numpy as np

KERNEL_MAX_ORDER = 62


def _env_request() -> bool | None:
    val = os.environ.get("LEAFSPAN_JIT")
    if val is None:
        return None
    return val.strip().lower() not in ("0", "false", "off", "no", "")


_REQUEST = _env_request()
USING_JIT = False
if _REQUEST is not False:
    try:
        from numba import njit as _njit

        USING_JIT = True
    except ImportError:
        if _REQUEST is True:
            warnings.warn(
                "LEAFSPAN_JIT requested compilation but numba is not installed; "
                "falling back to the pure path",
                RuntimeWarning,
            )

if USING_JIT:

    def _compiled(fn):
        return _njit(cache=True, nogil=True)(fn)

else:

    def _compiled(fn):
        return fn


def adj_int64(g) -> np.ndarray:
    """Adjacency bitmask rows of a Graph as an int64 array for kernel use."""
    if g.n > KERNEL_MAX_ORDER:
        raise ValueError(f"order {g.n} exceeds kernel limit {KERNEL_MAX_ORDER}")
    return np.array(g.adj, dtype=np.int64)


def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def adj_from_mask(n, mask, adj):
    """Fill adjacency rows from a column-major upper-triangle edge mask."""
    for v in range(n):
        adj[v] = 0
    e = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> e) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            e += 1


def connected_masks(n):
    """Edge masks of all connected labeled graphs on n vertices, ascending."""
    m = n * (n - 1) // 2
    total = 1 << m
    out = np.empty(total, np.int64)
    adj = np.zeros(n, np.int64)
    full = (1 << n) - 1
    cnt = 0
    for mask in range(total):
        adj_from_mask(n, mask, adj)
        reach = 1
        frontier = 1
        while frontier != 0:
            nxt = 0
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= adj[v]
            nxt &= ~reach
            reach |= nxt
            frontier = nxt
        if reach == full:
            out[cnt] = mask
            cnt += 1
    return out[:cnt].copy()


def bfs_all_pairs(n, adj):
    """All-pairs BFS distances; flag is 0 if the graph is disconnected."""
    dist = np.zeros((n, n), np.int64)
    full = (1 << n) - 1
    for s in range(n):
        reach = 1 << s
        frontier = reach
        d = 0
        while frontier != 0:
            d += 1
            nxt = 0
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= adj[v]
            nxt &= ~reach
            for v in range(n):
                if (nxt >> v) & 1:
                    dist[s, v] = d
            reach |= nxt
            frontier = nxt
        if reach != full:
            return dist, 0
    return dist, 1


def power_radius(m, tol, max_iter):
    """Dominant eigenvalue of a nonnegative matrix by shifted power iteration.

    Returns (rho, iters); iters == -1 signals non-convergence. The shift by
    the identity makes the dominant eigenvalue strictly largest in modulus,
    and the residual of the shifted system equals the residual of the
    original, so the stop test bounds ||M x - rho x||_inf directly. The stop
    threshold is tol*max(1, rho) scaled down by 2*sqrt(n) so the eigenvalue
    error (at most sqrt(n) times the max-norm residual) stays within tol.
    """
    nn = m.shape[0]
    if nn == 1:
        return m[0, 0], 0
    ms = m.copy()
    for i in range(nn):
        ms[i, i] += 1.0
    x = np.ones(nn) / np.sqrt(nn)
    scale = 0.5 / np.sqrt(nn)
    for it in range(max_iter):
        z = ms @ x
        lam = 0.0
        for i in range(nn):
            lam += x[i] * z[i]
        resid = 0.0
        for i in range(nn):
            r = abs(z[i] - lam * x[i])
            if r > resid:
                resid = r
        rho = lam - 1.0
        if resid <= tol * max(1.0, rho) * scale:
            return rho, it
        znorm = 0.0
        for i in range(nn):
            znorm += z[i] * z[i]
        znorm = np.sqrt(znorm)
        if znorm == 0.0:
            return 0.0, -1
        for i in range(nn):
            x[i] = z[i] / znorm
    return 0.0, -1


def isolated_mask(n, adj, S):
    """Bitmask of vertices isolated after removing the vertex set S."""
    iso = 0
    for v in range(n):
        if ((S >> v) & 1) == 0:
            if (adj[v] & ~S) == 0:
                iso |= 1 << v
    return iso


def violation_search(n, adj, num, den):
    """First S with den*i(G-S) >= num*|S|, searching S = N(I) over
    independent sets I in increasing bitmask order.

    Sound and complete for connected graphs: if S is any violating set and I
    the isolated vertices it leaves, then I is independent, N(I) is a subset
    of S, and N(I) violates at least as strongly. Returns (found, S, iso).
    """
    top = 1 << n
    for I in range(1, top):
        indep = True
        S = 0
        for v in range(n):
            if (I >> v) & 1:
                if (adj[v] & I) != 0:
                    indep = False
                    break
                S |= adj[v]
        if not indep:
            continue
        if S == 0:
            continue
        iso = isolated_mask(n, adj, S)
        if den * popcount(iso) >= num * popcount(S):
            return 1, S, iso
    return 0, 0, 0


def violation_search_all(n, adj, num, den):
    """Exhaustive variant over every nonempty S, increasing bitmask order."""
    top = 1 << n
    for S in range(1, top):
        iso = isolated_mask(n, adj, S)
        if den * popcount(iso) >= num * popcount(S):
            return 1, S, iso
    return 0, 0, 0


def tree_dist(parent, depth, a, b):
    d = 0
    while depth[a] > depth[b]:
        a = parent[a]
        d += 1
    while depth[b] > depth[a]:
        b = parent[b]
        d += 1
    while a != b:
        a = parent[a]
        b = parent[b]
        d += 2
    return d


def final_metric_ok(n, mode, param, parent, depth, deg):
    """Exact goal test on a completed spanning tree."""
    if mode == 0:
        for a in range(n):
            if deg[a] == 1:
                for b in range(a + 1, n):
                    if deg[b] == 1:
                        if tree_dist(parent, depth, a, b) < param:
                            return False
        return True
    for v in range(n):
        c = 0
        for u in range(n):
            if parent[u] == v and deg[u] == 1:
                c += 1
        p = parent[v]
        if p >= 0 and deg[p] == 1:
            c += 1
        if c > param:
            return False
    return True


def tree_search(n, adj, mode, param, budget):
    """Branching search for a spanning tree meeting a leaf goal.

    mode 0: every pair of leaves at tree distance >= param.
    mode 1: every vertex adjacent to at most param leaves.

    Grows a single tree from vertex 0, branching on the lexicographically
    smallest undecided frontier edge (include, then exclude). A tree vertex
    of degree 1 with no usable edge left is a committed leaf: the path
    between two tree vertices never changes as the tree grows, so committed
    leaf pairs that already violate the goal prune the branch. Exclusions
    that disconnect the remaining usable graph prune as well. Every spanning
    tree corresponds to exactly one include/exclude decision path, so the
    search is exhaustive.

    Returns (status, parent, nodes): status 1 found (parent holds the tree,
    root 0 marked -1), 0 proven none, -1 budget exhausted.
    """
    parent = np.full(n, -1, np.int64)
    depth = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    forb = np.zeros(n, np.int64)
    comm = np.empty(n, np.int64)
    cnt = np.zeros(n, np.int64)
    cap = n * n + 2
    fu = np.empty(cap, np.int64)
    fw = np.empty(cap, np.int64)
    fph = np.empty(cap, np.int64)
    top = 0
    full = (1 << n) - 1
    inT = 1
    nvert = 1
    nodes = 0

    while True:
        nodes += 1
        if nodes > budget:
            return -1, parent, nodes
        viable = True

        ncomm = 0
        for v in range(n):
            if ((inT >> v) & 1) != 0 and deg[v] == 1:
                if (adj[v] & ~inT & ~forb[v]) == 0:
                    comm[ncomm] = v
                    ncomm += 1
        if mode == 0:
            for a in range(ncomm):
                if not viable:
                    break
                for b in range(a + 1, ncomm):
                    if tree_dist(parent, depth, comm[a], comm[b]) < param:
                        viable = False
                        break
        else:
            for v in range(n):
                cnt[v] = 0
            for a in range(ncomm):
                v = comm[a]
                nb = parent[v]
                if nb < 0:
                    for u in range(n):
                        if parent[u] == v:
                            nb = u
                            break
                cnt[nb] += 1
                if cnt[nb] > param:
                    viable = False
                    break

        if viable:
            reach = inT
            frontier = inT
            while frontier != 0:
                nxt = 0
                for v in range(n):
                    if (frontier >> v) & 1:
                        nxt |= adj[v] & ~forb[v]
                nxt &= ~reach
                reach |= nxt
                frontier = nxt
            if reach != full:
                viable = False

        if viable and nvert == n:
            if final_metric_ok(n, mode, param, parent, depth, deg):
                return 1, parent, nodes
            viable = False

        if viable:
            bu = -1
            bw = -1
            ba = n + 1
            bb = n + 1
            for u in range(n):
                if (inT >> u) & 1:
                    cand = adj[u] & ~inT & ~forb[u]
                    if cand != 0:
                        for w in range(n):
                            if (cand >> w) & 1:
                                a = u if u < w else w
                                b = w if u < w else u
                                if a < ba or (a == ba and b < bb):
                                    ba = a
                                    bb = b
                                    bu = u
                                    bw = w
            if bu < 0:
                viable = False
            else:
                parent[bw] = bu
                depth[bw] = depth[bu] + 1
                deg[bu] += 1
                deg[bw] = 1
                inT |= 1 << bw
                nvert += 1
                fu[top] = bu
                fw[top] = bw
                fph[top] = 0
                top += 1
                continue

        descended = False
        while top > 0:
            u = fu[top - 1]
            w = fw[top - 1]
            if fph[top - 1] == 0:
                inT &= ~(1 << w)
                nvert -= 1
                deg[u] -= 1
                deg[w] = 0
                parent[w] = -1
                depth[w] = 0
                forb[u] |= 1 << w
                forb[w] |= 1 << u
                fph[top - 1] = 1
                descended = True
                break
            forb[u] &= ~(1 << w)
            forb[w] &= ~(1 << u)
            top -= 1
        if not descended:
            return 0, parent, nodes


def batch_leaf_degree(n, masks, k, budget):
    """Condition (k+1, 1) versus leaf-degree-k tree search per edge mask."""
    m = masks.shape[0]
    cond = np.empty(m, np.int8)
    tree = np.empty(m, np.int8)
    adj = np.zeros(n, np.int64)
    for i in range(m):
        adj_from_mask(n, masks[i], adj)
        found, S, iso = violation_search(n, adj, k + 1, 1)
        cond[i] = 1 if found == 0 else 0
        st, par, nd = tree_search(n, adj, 1, k, budget)
        tree[i] = st
    return cond, tree


def batch_leaf_distance(n, masks, num, den, d, budget):
    """Condition (num, den) versus leaf-distance-d tree search per edge mask."""
    m = masks.shape[0]
    cond = np.empty(m, np.int8)
    tree = np.empty(m, np.int8)
    adj = np.zeros(n, np.int64)
    for i in range(m):
        adj_from_mask(n, masks[i], adj)
        found, S, iso = violation_search(n, adj, num, den)
        cond[i] = 1 if found == 0 else 0
        st, par, nd = tree_search(n, adj, 0, d, budget)
        tree[i] = st
    return cond, tree


def batch_condition_agreement(n, masks, num, den):
    """Reduced versus exhaustive violation search; 1 per mask if they agree
    and every returned witness replays."""
    m = masks.shape[0]
    agree = np.empty(m, np.int8)
    adj = np.zeros(n, np.int64)
    for i in range(m):
        adj_from_mask(n, masks[i], adj)
        f1, S1, iso1 = violation_search(n, adj, num, den)
        f2, S2, iso2 = violation_search_all(n, adj, num, den)
        ok = f1 == f2
        if f1 == 1:
            if iso1 != isolated_mask(n, adj, S1):
                ok = False
            if den * popcount(iso1) < num * popcount(S1):
                ok = False
        if f2 == 1:
            if iso2 != isolated_mask(n, adj, S2):
                ok = False
            if den * popcount(iso2) < num * popcount(S2):
                ok = False
        agree[i] = 1 if ok else 0
    return agree


# Compile in dependency order; callees must be bound before callers compile.
popcount = _compiled(popcount)
adj_from_mask = _compiled(adj_from_mask)
connected_masks = _compiled(connected_masks)
bfs_all_pairs = _compiled(bfs_all_pairs)
power_radius = _compiled(power_radius)
isolated_mask = _compiled(isolated_mask)
violation_search = _compiled(violation_search)
violation_search_all = _compiled(violation_search_all)
tree_dist = _compiled(tree_dist)
final_metric_ok = _compiled(final_metric_ok)
tree_search = _compiled(tree_search)
batch_leaf_degree = _compiled(batch_leaf_degree)
batch_leaf_distance = _compiled(batch_leaf_distance)
batch_condition_agreement = _compiled(batch_condition_agreement)
