"""Pure-Python versions of the hot kernels.

Every function here has a twin with the same signature and the same output
in ``_ckernels.pyx``. Graphs are passed as ``rows``: a sequence of ``n``
adjacency bitmasks, bit ``u`` of ``rows[v]`` set iff ``u ~ v``.
"""

from __future__ import annotations


def _low_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def components(rows, n: int, removed: int = 0) -> list[int]:
    """Component masks of ``G - removed``, ordered by smallest vertex."""
    left = ((1 << n) - 1) & ~removed
    comps = []
    while left:
        comp = frontier = left & -left
        while frontier:
            nb = 0
            f = frontier
            while f:
                low = f & -f
                nb |= rows[low.bit_length() - 1]
                f ^= low
            nb &= left & ~comp
            comp |= nb
            frontier = nb
        comps.append(comp)
        left &= ~comp
    return comps


def _is_shaved(rows, mask: int, comps: list[int]) -> bool:
    m = mask
    while m:
        low = m & -m
        nb = rows[low.bit_length() - 1]
        touched = 0
        for comp in comps:
            if nb & comp:
                touched += 1
                if touched == 2:
                    break
        if touched < 2:
            return False
        m ^= low
    return True


def toughness_search(rows, n: int, shaved: bool = True) -> tuple[int, int, int]:
    """Minimise ``|S| / c(G-S)`` over cutsets of a noncomplete graph.

    Returns ``(|S|, c(G-S), S)`` for the minimiser with the smallest bitmask.
    Sizes are scanned upward and stop once ``k / (n - k)`` exceeds the
    incumbent, since ``c(G-S) <= n - |S|``.
    """
    comps = components(rows, n, 0)
    if len(comps) > 1:
        return 0, len(comps), 0
    full = (1 << n) - 1
    best_s, best_c, best_m = n, 1, full
    # seed with neighbourhood cutsets, always valid for a non-universal vertex
    for v in range(n):
        nb = rows[v]
        if nb | (1 << v) != full:
            c = len(components(rows, n, nb))
            s = bin(nb).count("1")
            if s * best_c < best_s * c or (s * best_c == best_s * c and nb < best_m):
                best_s, best_c, best_m = s, c, nb
    limit = 1 << n
    for k in range(1, n - 1):
        if k * best_c > best_s * (n - k):
            break
        mask = (1 << k) - 1
        while mask < limit:
            comps = components(rows, n, mask)
            c = len(comps)
            if c >= 2 and (not shaved or _is_shaved(rows, mask, comps)):
                lhs = k * best_c
                rhs = best_s * c
                if lhs < rhs or (lhs == rhs and mask < best_m):
                    best_s, best_c, best_m = k, c, mask
            low = mask & -mask
            r = mask + low
            mask = (((r ^ mask) >> 2) // low) | r
    return best_s, best_c, best_m


def hamilton_cycle(rows, n: int):
    """Lexicographically smallest Hamilton cycle starting at 0, or ``None``.

    ``dp[i]`` holds the endpoints of paths that start at 0 and cover exactly
    the vertex set ``(i << 1) | 1``.
    """
    size = 1 << (n - 1)
    dp = [0] * size
    dp[0] = 1
    for i in range(1, size):
        mask = (i << 1) | 1
        ends = 0
        r = mask ^ 1
        while r:
            b = r & -r
            if rows[b.bit_length() - 1] & dp[(mask ^ b) >> 1]:
                ends |= b
            r ^= b
        dp[i] = ends
    full = (1 << n) - 1
    if not dp[full >> 1] & rows[0]:
        return None
    seq = [0]
    remaining = full ^ 1
    prev = 0
    while remaining:
        cand = rows[prev] & remaining & dp[remaining >> 1]
        b = cand & -cand
        v = b.bit_length() - 1
        seq.append(v)
        remaining ^= b
        prev = v
    return tuple(seq)


def cycle_table(rows, n: int) -> list[int]:
    """Path endpoint sets for every vertex subset.

    Entry ``mask`` is the set of ``v`` such that some path from the smallest
    vertex of ``mask`` to ``v`` covers exactly ``mask``.
    """
    dp = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        if mask == low:
            dp[mask] = low
            continue
        ends = 0
        r = mask ^ low
        while r:
            b = r & -r
            if rows[b.bit_length() - 1] & dp[mask ^ b]:
                ends |= b
            r ^= b
        dp[mask] = ends
    return dp


# canonical labelling -------------------------------------------------------


def _refine(rows, n: int, color: list[int], k: int) -> tuple[list[int], int]:
    while True:
        sigs = []
        for v in range(n):
            cnt = [0] * k
            r = rows[v]
            while r:
                b = r & -r
                cnt[color[b.bit_length() - 1]] += 1
                r ^= b
            sigs.append((color[v], tuple(cnt)))
        order = sorted(set(sigs))
        if len(order) == k:
            return color, k
        rank = {s: i for i, s in enumerate(order)}
        color = [rank[s] for s in sigs]
        k = len(order)


def _leaf_code(rows, n: int, color: list[int]) -> int:
    inv = [0] * n
    for v, c in enumerate(color):
        inv[c] = v
    total = n * (n - 1) // 2
    code = 0
    p = 0
    for b in range(1, n):
        vb = rows[inv[b]]
        for a in range(b):
            if vb >> inv[a] & 1:
                code |= 1 << (total - 1 - p)
            p += 1
    return code


def canonical_code(rows, n: int) -> int:
    """Maximum adjacency code over the leaves of a refinement search tree.

    Bits follow graph6 pair order (0,1), (0,2), (1,2), (0,3), ..., with the
    first pair most significant. Twins inside the target cell are explored
    once, since swapping them is an automorphism of the coloured graph.
    """
    if n <= 1:
        return 0
    best = -1

    def search(color: list[int], k: int) -> None:
        nonlocal best
        color, k = _refine(rows, n, color, k)
        if k == n:
            code = _leaf_code(rows, n, color)
            if code > best:
                best = code
            return
        sizes = [0] * k
        for c in color:
            sizes[c] += 1
        target = next(c for c in range(k) if sizes[c] >= 2)
        tried: list[int] = []
        for w in range(n):
            if color[w] != target:
                continue
            if any(
                rows[w] & ~(1 << u) == rows[u] & ~(1 << w) for u in tried
            ):
                continue
            tried.append(w)
            child = [
                c if c < target else (target if v == w else c + 1)
                for v, c in enumerate(color)
            ]
            search(child, k + 1)

    search([0] * n, 1)
    return best


def decode_code(code: int, n: int) -> list[int]:
    rows = [0] * n
    total = n * (n - 1) // 2
    p = 0
    for b in range(1, n):
        for a in range(b):
            if code >> (total - 1 - p) & 1:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
            p += 1
    return rows


def extend_codes(codes, k: int) -> list[int]:
    """Canonical codes of all graphs on ``k + 1`` vertices.

    Each graph arises by attaching a new vertex to some ``k``-vertex graph in
    ``codes`` such that the new vertex has minimum degree, so only those
    neighbour sets are tried.
    """
    found = set()
    for code in codes:
        base = decode_code(code, k)
        degs = [bin(r).count("1") for r in base]
        newbit = 1 << k
        for mask in range(1 << k):
            d = bin(mask).count("1")
            if any(degs[u] + (mask >> u & 1) < d for u in range(k)):
                continue
            rows = list(base)
            for u in range(k):
                if mask >> u & 1:
                    rows[u] |= newbit
            rows.append(mask)
            found.add(canonical_code(rows, k + 1))
    return sorted(found)
