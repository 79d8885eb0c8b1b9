"""Pure-Python enumeration kernels.

Tilings are encoded as bitmasks of domino start cells: bit ``s`` set means a
domino covers cells ``s`` and ``s+1`` (``s+1`` taken mod ``n`` on a bracelet).
Enumerations are returned in lexicographic order of the sorted start sets.
The compiled module ``_ckernels`` exposes exactly the same functions.
"""

BACKEND = "python"


def _walk(n, cyclic):
    last = n - 1 if cyclic and n >= 2 else n - 2
    wrap = 1 << (n - 1) if cyclic and n >= 2 else 0
    out = []

    def rec(mask, start):
        out.append(mask)
        for s in range(start, last + 1):
            bit = 1 << s
            if bit == wrap and mask & 1:
                continue
            rec(mask | bit, s + 2)

    rec(0, 0)
    return out


def board_masks(n):
    return _walk(n, False)


def bracelet_masks(n):
    return _walk(n, True)


def bracelet_phase_counts(n):
    """Return ``(in_phase, out_of_phase)`` counts of ``n``-bracelets."""
    top = 1 << (n - 1) if n >= 2 else 0
    masks = _walk(n, True)
    out = sum(1 for m in masks if m & top)
    return len(masks) - out, out


def partition_counts(n, N):
    """Split all ``n``-bracelets by dominoes on (a0,a1), (a_{N-1},a_N), (a_N,a_{N+1}).

    Returns ``(a, b, r1, r2, misplaced)`` where ``misplaced`` counts bracelets
    lying in zero or several classes.  Each class predicate is evaluated on its
    own so that disjointness and exhaustiveness are checked, not assumed.
    """
    p0, pl, pr = 1, 1 << (N - 1), 1 << N
    a = b = r1 = r2 = bad = 0
    for m in _walk(n, True):
        in_a = not m & p0 and not m & pr
        in_b = bool(m & p0) and not m & pl
        in_1 = bool(m & p0) and bool(m & pl)
        in_2 = bool(m & pr) and not m & p0
        a += in_a
        b += in_b
        r1 += in_1
        r2 += in_2
        if in_a + in_b + in_1 + in_2 != 1:
            bad += 1
    return a, b, r1, r2, bad


def set2_counts(N, M):
    """Classify every (N-bracelet, M-bracelet) pair by phase; returns ``(a, b, c, d)``."""
    ptop = 1 << (N - 1) if N >= 2 else 0
    qtop = 1 << (M - 1) if M >= 2 else 0
    left = [bool(m & ptop) for m in _walk(N, True)]
    right = [bool(m & qtop) for m in _walk(M, True)]
    counts = [0, 0, 0, 0]
    for x in left:
        for y in right:
            counts[2 * y + x] += 1
    return tuple(counts)
