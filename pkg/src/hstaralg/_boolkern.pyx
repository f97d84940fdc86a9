# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Boolean bitmask kernels.  Contract mirrors ``_boolkern_py``."""

from libc.stdlib cimport malloc, calloc, free

ctypedef unsigned long long u64

DEF MAXN = 8


cdef inline u64 _or_rows(u64 m, u64* rows) nogil:
    cdef u64 acc = 0
    cdef int k = 0
    while m:
        if m & 1:
            acc |= rows[k]
        m >>= 1
        k += 1
    return acc


def matmul(a_rows, b_rows):
    cdef u64 b[64]
    cdef Py_ssize_t k, nb = len(b_rows)
    if nb > 64:
        raise ValueError("at most 64 inner rows")
    for k in range(nb):
        b[k] = b_rows[k]
    return [_or_rows(<u64>r, b) for r in a_rows]


cdef u64* _tables(int n, list gens, int ng):
    cdef int full = 1 << n
    cdef u64* tab = <u64*>calloc(ng * full, sizeof(u64))
    cdef int gi, mask, low_idx
    cdef u64 low
    for gi in range(ng):
        g = gens[gi]
        for mask in range(1, full):
            low = (<u64>mask) & (-(<u64>mask))
            low_idx = 0
            while (low >> low_idx) != 1:
                low_idx += 1
            tab[gi * full + mask] = tab[gi * full + (mask ^ <int>low)] | <u64>g[low_idx]
    return tab


def commutant_search(int n, gens, unsigned long long budget):
    if n > MAXN:
        raise ValueError("dimension above %d" % MAXN)
    if n == 0:
        return [()], 1, False
    cdef list gl = [list(g) for g in gens]
    cdef int ng = len(gl)
    cdef int full = 1 << n
    cdef u64* tab = _tables(n, gl, ng)
    cdef u64* grows = <u64*>malloc((ng + 1) * n * sizeof(u64))
    # constraint lists per depth: (gen, row) pairs
    cdef int* cgen = <int*>malloc((ng * n + 1) * sizeof(int))
    cdef int* crow = <int*>malloc((ng * n + 1) * sizeof(int))
    cdef int cstart[MAXN + 1]
    cdef u64 rows[MAXN]
    cdef int gi, i, d, needed, c, depth
    cdef u64 nodes = 0
    cdef bint ok, exceeded = False
    cdef list out = []
    for gi in range(ng):
        for i in range(n):
            grows[gi * n + i] = <u64>gl[gi][i]
    c = 0
    for d in range(n):
        cstart[d] = c
        for gi in range(ng):
            for i in range(n):
                needed = i
                if grows[gi * n + i]:
                    needed = max(needed, (<object>grows[gi * n + i]).bit_length() - 1)
                if needed == d:
                    cgen[c] = gi
                    crow[c] = i
                    c += 1
    cstart[n] = c
    try:
        depth = 0
        rows[0] = <u64>(-1)
        while depth >= 0:
            rows[depth] += 1
            if rows[depth] >= <u64>full:
                depth -= 1
                continue
            nodes += 1
            if nodes > budget:
                exceeded = True
                break
            ok = True
            for c in range(cstart[depth], cstart[depth + 1]):
                gi = cgen[c]
                i = crow[c]
                if tab[gi * full + rows[i]] != _or_rows(grows[gi * n + i], rows):
                    ok = False
                    break
            if not ok:
                continue
            if depth == n - 1:
                out.append(tuple([rows[i] for i in range(n)]))
            else:
                depth += 1
                rows[depth] = <u64>(-1)
    finally:
        free(tab)
        free(grows)
        free(cgen)
        free(crow)
    return out, nodes, exceeded


def commutant_brute(int n, gens, unsigned long long budget):
    if n > 6:
        raise ValueError("brute force limited to dimension 6")
    cdef u64 total = (<u64>1) << (n * n)
    if total > budget:
        return [], 0, True
    cdef list gl = [list(g) for g in gens]
    cdef int ng = len(gl)
    cdef int full = 1 << n
    cdef u64* tab = _tables(n, gl, ng)
    cdef u64* grows = <u64*>malloc((ng + 1) * n * sizeof(u64))
    cdef u64 f[MAXN]
    cdef u64 code, mask = full - 1
    cdef int gi, i
    cdef bint ok
    cdef list out = []
    for gi in range(ng):
        for i in range(n):
            grows[gi * n + i] = <u64>gl[gi][i]
    try:
        for code in range(total):
            for i in range(n):
                f[i] = (code >> (i * n)) & mask
            ok = True
            for gi in range(ng):
                for i in range(n):
                    if tab[gi * full + f[i]] != _or_rows(grows[gi * n + i], f):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append(tuple([f[i] for i in range(n)]))
    finally:
        free(tab)
        free(grows)
    return out, total, False


def census_commutative_special(int n):
    if n > 4:
        raise ValueError("census limited to dimension 4")
    cdef int pi_[40]
    cdef int pj_[40]
    cdef int width = 0, i, j, p, k, m
    for i in range(n):
        for j in range(i, n):
            pi_[width] = i
            pj_[width] = j
            width += 1
    if n * width > 62:
        raise ValueError("enumeration too large")
    cdef u64 total = (<u64>1) << (n * width)
    cdef u64 code, col, colmask = (1 << n) - 1
    cdef u64 rows[MAXN]
    cdef bint ok
    cdef list out = []
    for code in range(total):
        for k in range(n):
            rows[k] = 0
        for p in range(width):
            col = (code >> (p * n)) & colmask
            k = 0
            while col:
                if col & 1:
                    rows[k] |= ((<u64>1) << (pi_[p] * n + pj_[p])) | ((<u64>1) << (pj_[p] * n + pi_[p]))
                col >>= 1
                k += 1
        ok = True
        for k in range(n):
            if rows[k] == 0:
                ok = False
                break
            for m in range(k + 1, n):
                if rows[k] & rows[m]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple([rows[k] for k in range(n)]))
    return out, total
