"""Pure-Python implementations of the hot-loop kernels.

These are the reference implementations; `alexq._kernels_cy` is a compiled
drop-in replacement built from the same algorithms. Both operate on flat
integer tables so they stay independent of the object layer:

- elements of a group of order n are the indices 0..n-1 (lexicographic
  coordinate order, zero element at index 0),
- `add` is the flat n*n addition table, add[a*n + b],
- permutations are tuples p of length n with p[i] = image of element i.
"""

from __future__ import annotations


def compose_perm(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """The permutation of "q then p": (p o q)[i] = p[q[i]]."""
    return tuple(p[i] for i in q)


def invert_perm(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def enumerate_linear_bijections(n, factors, gen_idx, add, allowed):
    """All bijective linear self-maps, as permutations of element indices.

    factors: the invariant factors d_1 | ... | d_k
    gen_idx: element indices of the standard generators
    allowed: per generator position i, the candidate image indices in
        ascending order (callers pre-filter by element order so every
        candidate tuple extends to a well-defined endomorphism)

    Returns the permutations sorted by their generator-image tuples, which
    equals sorting by flattened image coordinates.

    Images are assigned from the last generator position upward, so the
    partial map always covers a prefix of the element indices (the span of
    the generators chosen so far; index = sum of c_i * suffix strides). A
    repeated value in a partial map kills the whole candidate subtree, which
    is what keeps the search near the size of the output.
    """
    k = len(factors)
    if k == 0:
        return [(0,)]

    results = []

    def extend(i, partial):
        # partial maps the span of generators i+1..k-1, a prefix of indices
        d = factors[i]
        width = len(partial)
        for img in allowed[i]:
            new = list(partial)
            seen = bytearray(n)
            for x in partial:
                seen[x] = 1
            ok = True
            base = 0
            for _ in range(1, d):
                base = add[base * n + img]  # base = c*img for c = 1, 2, ...
                for x in range(width):
                    y = add[base * n + partial[x]]
                    if seen[y]:
                        ok = False
                        break
                    seen[y] = 1
                    new.append(y)
                if not ok:
                    break
            if not ok:
                continue
            if i == 0:
                results.append(tuple(new))
            else:
                extend(i - 1, new)

    extend(k - 1, [0])
    results.sort(key=lambda p: tuple(p[g] for g in gen_idx))
    return results


def conjugacy_partition(perms):
    """Partition a full list of automorphism permutations into conjugacy classes.

    perms must be the complete automorphism list (closed under composition
    and inverses). Returns (class_ids, reps): class_ids[i] is the class of
    perms[i]; reps lists one member index per class in discovery order.
    Scanning in input order makes each discovered representative the
    least-index member of its class, hence for input sorted by generator
    images the lexicographically least one.
    """
    n = len(perms[0])
    N = len(perms)
    index_of = {p: i for i, p in enumerate(perms)}
    inverses = [invert_perm(p) for p in perms]
    class_ids = [-1] * N
    reps = []
    rng = range(n)
    for i in range(N):
        if class_ids[i] != -1:
            continue
        cid = len(reps)
        reps.append(i)
        f = perms[i]
        for h, hinv in zip(perms, inverses):
            m = tuple(hinv[f[h[x]]] for x in rng)
            class_ids[index_of[m]] = cid
    return class_ids, reps
