"""Pure-Python Boolean bitmask kernels.

Same contract as the compiled ``_boolkern`` extension.  A Boolean ``m x k``
matrix is a sequence of ``m`` row masks; bit ``j`` of row ``i`` is entry
``(i, j)``.
"""


def matmul(a_rows, b_rows):
    out = []
    for r in a_rows:
        acc = 0
        k = 0
        while r:
            if r & 1:
                acc |= b_rows[k]
            r >>= 1
            k += 1
        out.append(acc)
    return out


def _row_products(n, g):
    # table[mask] = row of (f . g) when the f-row is ``mask``
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        table[mask] = table[mask ^ low] | g[low.bit_length() - 1]
    return table


def commutant_search(n, gens, budget):
    """Row-by-row backtracking for ``{f : f.g == g.f for g in gens}``.

    The equation for row ``i`` of generator ``g`` needs f-rows ``i`` and
    ``supp(g_i)``; it is checked as soon as the last of those is assigned.
    Returns ``(solutions, nodes, exceeded)``.
    """
    gens = [list(g) for g in gens]
    tables = [_row_products(n, g) for g in gens]
    checks = [[] for _ in range(n)]
    for gi, g in enumerate(gens):
        for i in range(n):
            needed = i
            if g[i]:
                needed = max(needed, g[i].bit_length() - 1)
            checks[needed].append((gi, i))
    full = 1 << n
    rows = [0] * n
    out = []
    nodes = 0
    if n == 0:
        return [()], 1, False

    def satisfied(depth):
        for gi, i in checks[depth]:
            g = gens[gi]
            rhs = 0
            m = g[i]
            k = 0
            while m:
                if m & 1:
                    rhs |= rows[k]
                m >>= 1
                k += 1
            if tables[gi][rows[i]] != rhs:
                return False
        return True

    depth = 0
    rows[0] = -1
    while depth >= 0:
        rows[depth] += 1
        if rows[depth] >= full:
            depth -= 1
            continue
        nodes += 1
        if nodes > budget:
            return out, nodes, True
        if not satisfied(depth):
            continue
        if depth == n - 1:
            out.append(tuple(rows))
        else:
            depth += 1
            rows[depth] = -1
    return out, nodes, False


def commutant_brute(n, gens, budget):
    """Test every one of the ``2**(n*n)`` candidate matrices."""
    total = 1 << (n * n)
    if total > budget:
        return [], 0, True
    gens = [list(g) for g in gens]
    tables = [_row_products(n, g) for g in gens]
    mask = (1 << n) - 1
    out = []
    for code in range(total):
        f = [(code >> (i * n)) & mask for i in range(n)]
        ok = True
        for g, table in zip(gens, tables):
            for i in range(n):
                rhs = 0
                m = g[i]
                k = 0
                while m:
                    if m & 1:
                        rhs |= f[k]
                    m >>= 1
                    k += 1
                if table[f[i]] != rhs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(f))
    return out, total, False


def census_commutative_special(n):
    """All Boolean ``mu: n*n -> n`` with ``mu . swap == mu`` and ``mu . mu^T == id``.

    Only the columns ``(i, j)`` with ``i <= j`` are free.  Returns
    ``(survivors, enumerated)``; each survivor is a tuple of ``n`` row masks
    over the ``n*n`` input pairs.
    """
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    width = len(pairs)
    colmask = (1 << n) - 1
    out = []
    total = 1 << (n * width)
    for code in range(total):
        rows = [0] * n
        for p, (i, j) in enumerate(pairs):
            col = (code >> (p * n)) & colmask
            k = 0
            while col:
                if col & 1:
                    rows[k] |= (1 << (i * n + j)) | (1 << (j * n + i))
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
            out.append(tuple(rows))
    return out, total
