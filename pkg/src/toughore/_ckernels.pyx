# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see ``_pykernels`` for contracts."""

from libc.stdint cimport uint32_t, uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil

cdef enum:
    MAXN = 32
    MAXC = 16


cdef inline uint32_t _full(int n) noexcept nogil:
    if n >= 32:
        return 0xFFFFFFFFu
    return (<uint32_t>1 << n) - 1


cdef int _load(object rows, int n, uint32_t* adj) except -1:
    cdef int i
    if n < 0 or n > MAXN:
        raise ValueError("graph order %d outside kernel range 0..%d" % (n, MAXN))
    for i in range(n):
        adj[i] = <uint32_t>rows[i]
    return 0


cdef int _components(const uint32_t* adj, int n, uint32_t removed,
                     uint32_t* out) noexcept nogil:
    cdef uint32_t left = _full(n) & ~removed
    cdef uint32_t comp, frontier, nb, f
    cdef int count = 0
    while left:
        comp = left & (~left + 1)
        frontier = comp
        while frontier:
            nb = 0
            f = frontier
            while f:
                nb |= adj[__builtin_ctz(f)]
                f &= f - 1
            nb &= left & ~comp
            comp |= nb
            frontier = nb
        out[count] = comp
        count += 1
        left &= ~comp
    return count


def components(rows, int n, removed=0):
    cdef uint32_t adj[MAXN]
    cdef uint32_t out[MAXN]
    _load(rows, n, adj)
    cdef int c = _components(adj, n, <uint32_t>removed, out)
    return [out[i] for i in range(c)]


cdef bint _is_shaved(const uint32_t* adj, uint32_t mask, const uint32_t* comps,
                     int c) noexcept nogil:
    cdef uint32_t m = mask, nb
    cdef int touched, i
    while m:
        nb = adj[__builtin_ctz(m)]
        touched = 0
        for i in range(c):
            if nb & comps[i]:
                touched += 1
                if touched == 2:
                    break
        if touched < 2:
            return False
        m &= m - 1
    return True


def toughness_search(rows, int n, bint shaved=True):
    cdef uint32_t adj[MAXN]
    cdef uint32_t comps[MAXN]
    _load(rows, n, adj)
    cdef int c = _components(adj, n, 0, comps)
    if c > 1:
        return 0, c, 0
    cdef uint32_t full = _full(n)
    cdef long long best_s = n, best_c = 1, s, lhs, rhs
    cdef uint64_t best_m = full
    cdef uint32_t nb
    cdef int v, k
    for v in range(n):
        nb = adj[v]
        if (nb | (<uint32_t>1 << v)) != full:
            c = _components(adj, n, nb, comps)
            s = __builtin_popcount(nb)
            if s * best_c < best_s * c or (s * best_c == best_s * c and nb < best_m):
                best_s, best_c, best_m = s, c, nb
    cdef uint64_t limit = (<uint64_t>1) << n
    cdef uint64_t mask, low, r
    with nogil:
        for k in range(1, n - 1):
            if k * best_c > best_s * (n - k):
                break
            mask = ((<uint64_t>1) << k) - 1
            while mask < limit:
                c = _components(adj, n, <uint32_t>mask, comps)
                if c >= 2 and (not shaved or _is_shaved(adj, <uint32_t>mask, comps, c)):
                    lhs = k * best_c
                    rhs = best_s * c
                    if lhs < rhs or (lhs == rhs and mask < best_m):
                        best_s, best_c, best_m = k, c, mask
                low = mask & (~mask + 1)
                r = mask + low
                mask = (((r ^ mask) >> 2) // low) | r
    return int(best_s), int(best_c), int(best_m)


def hamilton_cycle(rows, int n):
    cdef uint32_t adj[MAXN]
    _load(rows, n, adj)
    if n < 3 or n > 30:
        raise ValueError("hamilton kernel needs 3 <= n <= 30")
    cdef size_t size = (<size_t>1) << (n - 1)
    cdef uint32_t* dp = <uint32_t*>malloc(size * sizeof(uint32_t))
    if dp == NULL:
        raise MemoryError()
    cdef size_t i
    cdef uint32_t mask, ends, r, b, remaining, cand
    cdef uint32_t full = _full(n)
    cdef int prev, v
    seq = None
    try:
        with nogil:
            dp[0] = 1
            for i in range(1, size):
                mask = (<uint32_t>i << 1) | 1
                ends = 0
                r = mask ^ 1
                while r:
                    b = r & (~r + 1)
                    if adj[__builtin_ctz(b)] & dp[(mask ^ b) >> 1]:
                        ends |= b
                    r ^= b
                dp[i] = ends
        if dp[full >> 1] & adj[0]:
            seq = [0]
            remaining = full ^ 1
            prev = 0
            while remaining:
                cand = adj[prev] & remaining & dp[remaining >> 1]
                v = __builtin_ctz(cand)
                seq.append(v)
                remaining ^= <uint32_t>1 << v
                prev = v
            seq = tuple(seq)
    finally:
        free(dp)
    return seq


def cycle_table(rows, int n):
    cdef uint32_t adj[MAXN]
    _load(rows, n, adj)
    if n > 24:
        raise ValueError("cycle table needs n <= 24")
    cdef size_t size = (<size_t>1) << n
    cdef uint32_t* dp = <uint32_t*>malloc(size * sizeof(uint32_t))
    if dp == NULL:
        raise MemoryError()
    cdef size_t m
    cdef uint32_t mask, low, ends, r, b
    try:
        with nogil:
            dp[0] = 0
            for m in range(1, size):
                mask = <uint32_t>m
                low = mask & (~mask + 1)
                if mask == low:
                    dp[m] = low
                    continue
                ends = 0
                r = mask ^ low
                while r:
                    b = r & (~r + 1)
                    if adj[__builtin_ctz(b)] & dp[mask ^ b]:
                        ends |= b
                    r ^= b
                dp[m] = ends
        out = [dp[m] for m in range(size)]
    finally:
        free(dp)
    return out


# canonical labelling -------------------------------------------------------

cdef struct Canon:
    uint32_t adj[MAXC]
    int n
    uint64_t best
    bint found


cdef inline int _cmp(int v, int w, const int* color, int (*cnt)[MAXC],
                     int k) noexcept nogil:
    cdef int c
    if color[v] != color[w]:
        return color[v] - color[w]
    for c in range(k):
        if cnt[v][c] != cnt[w][c]:
            return cnt[v][c] - cnt[w][c]
    return 0


cdef int _refine(Canon* st, int* color, int k) noexcept nogil:
    cdef int n = st.n
    cdef int cnt[MAXC][MAXC]
    cdef int order[MAXC]
    cdef int newc[MAXC]
    cdef int v, i, j, x, nk
    cdef uint32_t r
    while True:
        for v in range(n):
            for i in range(k):
                cnt[v][i] = 0
            r = st.adj[v]
            while r:
                cnt[v][color[__builtin_ctz(r)]] += 1
                r &= r - 1
        for i in range(n):
            order[i] = i
        for i in range(1, n):
            x = order[i]
            j = i - 1
            while j >= 0 and _cmp(order[j], x, color, cnt, k) > 0:
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = x
        nk = 0
        newc[order[0]] = 0
        for i in range(1, n):
            if _cmp(order[i - 1], order[i], color, cnt, k) != 0:
                nk += 1
            newc[order[i]] = nk
        nk += 1
        if nk == k:
            return k
        for v in range(n):
            color[v] = newc[v]
        k = nk


cdef void _search(Canon* st, int* color, int k) noexcept nogil:
    cdef int n = st.n
    cdef int inv[MAXC]
    cdef int sizes[MAXC]
    cdef int child[MAXC]
    cdef int tried[MAXC]
    cdef int nt = 0, v, w, c, a, b, p, target, total, i
    cdef bint twin
    cdef uint64_t code
    cdef uint32_t vb
    k = _refine(st, color, k)
    if k == n:
        for v in range(n):
            inv[color[v]] = v
        total = n * (n - 1) // 2
        code = 0
        p = 0
        for b in range(1, n):
            vb = st.adj[inv[b]]
            for a in range(b):
                if (vb >> inv[a]) & 1:
                    code |= (<uint64_t>1) << (total - 1 - p)
                p += 1
        if not st.found or code > st.best:
            st.best = code
            st.found = True
        return
    for c in range(k):
        sizes[c] = 0
    for v in range(n):
        sizes[color[v]] += 1
    target = 0
    while sizes[target] < 2:
        target += 1
    for w in range(n):
        if color[w] != target:
            continue
        twin = False
        for i in range(nt):
            if (st.adj[w] & ~((<uint32_t>1) << tried[i])) == \
                    (st.adj[tried[i]] & ~((<uint32_t>1) << w)):
                twin = True
                break
        if twin:
            continue
        tried[nt] = w
        nt += 1
        for v in range(n):
            c = color[v]
            if c < target:
                child[v] = c
            elif v == w:
                child[v] = target
            else:
                child[v] = c + 1
        _search(st, child, k + 1)


cdef uint64_t _canonical(Canon* st) noexcept nogil:
    cdef int color[MAXC]
    cdef int v
    if st.n <= 1:
        return 0
    for v in range(st.n):
        color[v] = 0
    st.found = False
    st.best = 0
    _search(st, color, 1)
    return st.best


def canonical_code(rows, int n):
    cdef Canon st
    if n > 11:
        raise ValueError("canonical codes support n <= 11")
    _load(rows, n, st.adj)
    st.n = n
    return int(_canonical(&st))


cdef void _decode(uint64_t code, int n, uint32_t* adj) noexcept nogil:
    cdef int a, b, p = 0
    cdef int total = n * (n - 1) // 2
    for a in range(n):
        adj[a] = 0
    for b in range(1, n):
        for a in range(b):
            if (code >> (total - 1 - p)) & 1:
                adj[a] |= (<uint32_t>1) << b
                adj[b] |= (<uint32_t>1) << a
            p += 1


def decode_code(code, int n):
    cdef uint32_t adj[MAXC]
    _decode(<uint64_t>code, n, adj)
    return [adj[i] for i in range(n)]


def extend_codes(codes, int k):
    if k + 1 > 11:
        raise ValueError("canonical codes support n <= 11")
    cdef Canon st
    cdef uint32_t base[MAXC]
    cdef int degs[MAXC]
    cdef uint32_t mask, newbit = (<uint32_t>1) << k
    cdef uint32_t nmask = (<uint32_t>1) << k
    cdef int u, d
    cdef bint ok
    cdef uint64_t c
    found = set()
    st.n = k + 1
    for code in codes:
        _decode(<uint64_t>code, k, base)
        for u in range(k):
            degs[u] = __builtin_popcount(base[u])
        for mask in range(nmask):
            d = __builtin_popcount(mask)
            ok = True
            for u in range(k):
                if degs[u] + ((mask >> u) & 1) < d:
                    ok = False
                    break
            if not ok:
                continue
            for u in range(k):
                st.adj[u] = base[u] | (newbit if (mask >> u) & 1 else 0)
            st.adj[k] = mask
            c = _canonical(&st)
            found.add(c)
    return sorted(found)
