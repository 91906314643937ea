# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled scan core: window-bounded partition enumeration fused with an
incremental hook-product exponent check.  Same observable contract as
kernels._scan_py.

The check rides the enumeration instead of running per candidate.  Placing
row i at value x finalizes every column j in (x, parts[i-1]]: rows below i
are too short to reach j, so the hooks of column j are known and their prime
exponents are folded in right away, with an undo journal for backtracking.
Two consequences carry the speed:

- exponents only grow along a branch, so exceeding any target cap prunes the
  whole subtree, and since smaller x closes a superset of columns it prunes
  the remaining siblings too;
- a running count of mismatched odd primes makes the final acceptance test
  O(1) when a partition completes (only columns 1..last_part remain open,
  folded in and rolled back on the spot).
"""

from libc.stdlib cimport free, malloc, realloc

IMPL_NAME = "c"

DEF MAXN = 1024      # weights strictly below MAXN - 4
DEF MAXF = 5120      # flattened (prime, exp) factor slots for h <= MAXN
DEF MAXJ = 16384     # undo journal entries; <= 4 per folded hook


cdef struct Scan:
    int n
    int pmax            # exponents compared over 2..pmax
    int rows_cap
    int need_rows
    bint has_target
    bint oom            # match-buffer growth failed
    bint jover          # journal overflow (never expected; checked anyway)
    long long examined
    int diff_odd        # odd primes whose running exponent != target
    int jlen
    int* mbuf           # matches, flattened as [rows, parts...] records
    long long mlen
    long long mcap
    int lo[MAXN]
    int hi[MAXN]
    long long suf_lo[MAXN + 1]
    long long suf_hi[MAXN + 1]
    int parts[MAXN]
    int exps[MAXN + 4]
    int caps[MAXN + 4]
    int unit[MAXN + 4]
    int fac_off[MAXN + 2]
    int fac_p[MAXF]
    int fac_e[MAXF]
    int jprime[MAXJ]
    int jold[MAXJ]


cdef inline bint _bump(Scan* st, int p, int e) noexcept:
    # exps[p] += e with journaling; False once the cap is exceeded
    cdef int old, t
    if st.jlen >= MAXJ:
        st.jover = True
        return False
    old = st.exps[p]
    t = old + e
    st.jprime[st.jlen] = p
    st.jold[st.jlen] = old
    st.jlen += 1
    st.exps[p] = t
    if p != 2:
        st.diff_odd += (t != st.unit[p]) - (old != st.unit[p])
    return t <= st.caps[p]


cdef inline void _rollback(Scan* st, int mark) noexcept:
    cdef int p, old, cur
    while st.jlen > mark:
        st.jlen -= 1
        p = st.jprime[st.jlen]
        old = st.jold[st.jlen]
        cur = st.exps[p]
        st.exps[p] = old
        if p != 2:
            st.diff_odd += (old != st.unit[p]) - (cur != st.unit[p])


cdef inline bint _fold_hook(Scan* st, int h) noexcept:
    cdef int idx
    for idx in range(st.fac_off[h], st.fac_off[h + 1]):
        if not _bump(st, st.fac_p[idx], st.fac_e[idx]):
            return False
    return True


cdef inline bint _close_column(Scan* st, int j, int rows) noexcept:
    # column j just reached its final length `rows`; fold its hooks top-down
    cdef int t
    for t in range(rows):
        if not _fold_hook(st, st.parts[t] - j + rows - t):
            return False
    return True


cdef void _push_match(Scan* st, int rows) noexcept:
    cdef long long need = st.mlen + rows + 1
    cdef long long cap
    cdef int* grown
    cdef int i
    if need > st.mcap:
        cap = st.mcap * 2
        if cap < need:
            cap = need + 64
        grown = <int*> realloc(st.mbuf, cap * sizeof(int))
        if grown == NULL:
            st.oom = True
            return
        st.mbuf = grown
        st.mcap = cap
    st.mbuf[st.mlen] = rows
    for i in range(rows):
        st.mbuf[st.mlen + 1 + i] = st.parts[i]
    st.mlen = need


cdef void _complete(Scan* st, int rows, int x) noexcept:
    # all columns left open, 1..x, close at the full height
    cdef int mark = st.jlen
    cdef int j, d2
    cdef bint ok = True
    for j in range(1, x + 1):
        if not _close_column(st, j, rows):
            ok = False
            break
    if ok and st.diff_odd == 0:
        d2 = st.exps[2] - st.unit[2]
        if -1 <= d2 <= 1:
            _push_match(st, rows)
    _rollback(st, mark)


cdef void _rec(Scan* st, int i, long long w, int prev) noexcept:
    # place row i; w > 0 is the caller's responsibility
    cdef int top, bot, x, closed_to
    cdef long long rest
    cdef int fmark = st.jlen
    if i >= st.rows_cap or st.oom or st.jover:
        return
    top = prev
    if st.hi[i] < top:
        top = st.hi[i]
    if w < top:
        top = <int> w
    bot = st.lo[i]
    if bot < 1:
        bot = 1
    closed_to = prev
    x = top
    while x >= bot:
        rest = w - x
        # both rejections worsen as x shrinks
        if rest > st.suf_hi[i + 1]:
            break
        if rest > <long long> x * (st.rows_cap - i - 1):
            break
        if st.has_target:
            while closed_to > x:
                if not _close_column(st, closed_to, i):
                    _rollback(st, fmark)
                    return      # smaller x closes these same columns
                closed_to -= 1
        if rest >= st.suf_lo[i + 1]:
            st.parts[i] = x
            if rest == 0:
                if i + 1 >= st.need_rows:
                    st.examined += 1
                    if st.has_target:
                        _complete(st, i + 1, x)
            else:
                _rec(st, i + 1, rest, x)
        x -= 1
    _rollback(st, fmark)


def scan_bounded(int n, lower, upper, const int[::1] spf, unit_exps):
    """See kernels._scan_py.scan_bounded; identical contract."""
    if n < 0:
        raise ValueError("negative weight")
    if n + 4 >= MAXN:
        raise ValueError(f"compiled kernel is built for n < {MAXN - 4}")
    if spf.shape[0] < n + 1:
        raise ValueError("smallest-prime-factor table too small for this weight")

    cdef Scan* st = <Scan*> malloc(sizeof(Scan))
    if st == NULL:
        raise MemoryError("scan state")
    cdef int i, p, v, m, e, idx
    cdef const int[::1] u
    try:
        lo_list = list(lower)
        hi_list = list(upper)
        st.n = n
        st.pmax = n if n > 2 else 2
        st.rows_cap = min(len(hi_list), n)
        st.need_rows = len(lo_list)
        st.examined = 0
        st.oom = False
        st.jover = False
        st.jlen = 0
        st.diff_odd = 0
        for i in range(st.rows_cap):
            st.hi[i] = hi_list[i]
            st.lo[i] = lo_list[i] if i < st.need_rows else 0
        st.suf_lo[st.rows_cap] = 0
        st.suf_hi[st.rows_cap] = 0
        for i in range(st.rows_cap - 1, -1, -1):
            st.suf_lo[i] = st.suf_lo[i + 1] + st.lo[i]
            st.suf_hi[i] = st.suf_hi[i + 1] + st.hi[i]

        st.has_target = unit_exps is not None
        if st.has_target:
            u = unit_exps
            if u.shape[0] < st.pmax + 1:
                raise ValueError("unit exponent table too small for this weight")
            for p in range(st.pmax + 1):
                v = u[p]
                st.unit[p] = v
                st.caps[p] = v + (1 if p == 2 else 0)
                st.exps[p] = 0
                if p > 2 and v != 0:
                    st.diff_odd += 1
            # factorizations of every possible hook value, flattened
            idx = 0
            st.fac_off[0] = 0
            st.fac_off[1] = 0
            for v in range(1, n + 1):
                m = v
                while m > 1:
                    p = spf[m]
                    e = 0
                    while m % p == 0:
                        m //= p
                        e += 1
                    st.fac_p[idx] = p
                    st.fac_e[idx] = e
                    idx += 1
                st.fac_off[v + 1] = idx

        st.mcap = 256
        st.mlen = 0
        st.mbuf = <int*> malloc(st.mcap * sizeof(int))
        if st.mbuf == NULL:
            raise MemoryError("match buffer")
        try:
            if n == 0:
                if st.need_rows == 0:
                    st.examined = 1
                    if st.has_target and st.diff_odd == 0 and st.unit[2] <= 1:
                        _push_match(st, 0)
            else:
                _rec(st, 0, n, n)
            if st.oom:
                raise MemoryError("match buffer growth")
            if st.jover:
                raise RuntimeError("exponent journal overflow")
            matches = []
            i = 0
            while i < st.mlen:
                v = st.mbuf[i]
                matches.append(tuple([st.mbuf[i + 1 + p] for p in range(v)]))
                i += v + 1
            return matches, st.examined
        finally:
            free(st.mbuf)
    finally:
        free(st)
