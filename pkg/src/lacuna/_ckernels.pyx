# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernels; same interface as ``_pykernels``."""

ctypedef unsigned long long u64

BACKEND = "cython"

cdef int MAX_CELLS = 62


cdef struct Walk:
    int last
    u64 wrap
    # partition predicates
    u64 p0
    u64 pl
    u64 pr
    long long counts[5]
    long long n_all
    long long n_out
    u64 top


cdef void _collect(Walk* w, u64 mask, int start, list out):
    out.append(mask)
    cdef int s
    cdef u64 bit
    for s in range(start, w.last + 1):
        bit = (<u64>1) << s
        if bit == w.wrap and (mask & 1):
            continue
        _collect(w, mask | bit, s + 2, out)


cdef void _classify(Walk* w, u64 mask, int start) noexcept nogil:
    cdef bint has0 = (mask & w.p0) != 0
    cdef bint hasl = (mask & w.pl) != 0
    cdef bint hasr = (mask & w.pr) != 0
    cdef int in_a = (not has0) and (not hasr)
    cdef int in_b = has0 and (not hasl)
    cdef int in_1 = has0 and hasl
    cdef int in_2 = hasr and (not has0)
    w.counts[0] += in_a
    w.counts[1] += in_b
    w.counts[2] += in_1
    w.counts[3] += in_2
    if in_a + in_b + in_1 + in_2 != 1:
        w.counts[4] += 1
    w.n_all += 1
    if mask & w.top:
        w.n_out += 1
    cdef int s
    cdef u64 bit
    for s in range(start, w.last + 1):
        bit = (<u64>1) << s
        if bit == w.wrap and (mask & 1):
            continue
        _classify(w, mask | bit, s + 2)


cdef Walk _setup(int n, bint cyclic):
    if n < 0 or n > MAX_CELLS:
        raise ValueError(f"n must be in [0, {MAX_CELLS}], got {n}")
    cdef Walk w
    w.last = n - 1 if (cyclic and n >= 2) else n - 2
    w.wrap = ((<u64>1) << (n - 1)) if (cyclic and n >= 2) else 0
    w.top = w.wrap
    w.p0 = w.pl = w.pr = 0
    w.n_all = w.n_out = 0
    cdef int i
    for i in range(5):
        w.counts[i] = 0
    return w


def board_masks(int n):
    cdef Walk w = _setup(n, False)
    cdef list out = []
    _collect(&w, 0, 0, out)
    return out


def bracelet_masks(int n):
    cdef Walk w = _setup(n, True)
    cdef list out = []
    _collect(&w, 0, 0, out)
    return out


def bracelet_phase_counts(int n):
    cdef Walk w = _setup(n, True)
    with nogil:
        _classify(&w, 0, 0)
    return w.n_all - w.n_out, w.n_out


def partition_counts(int n, int N):
    cdef Walk w = _setup(n, True)
    w.p0 = 1
    w.pl = (<u64>1) << (N - 1)
    w.pr = (<u64>1) << N
    with nogil:
        _classify(&w, 0, 0)
    return (w.counts[0], w.counts[1], w.counts[2], w.counts[3], w.counts[4])


def set2_counts(int N, int M):
    cdef list left = bracelet_masks(N)
    cdef list right = bracelet_masks(M)
    cdef u64 ptop = ((<u64>1) << (N - 1)) if N >= 2 else 0
    cdef u64 qtop = ((<u64>1) << (M - 1)) if M >= 2 else 0
    cdef Py_ssize_t i, j, nl = len(left), nr = len(right)
    cdef unsigned char[::1] lo = bytearray(nl)
    cdef unsigned char[::1] ro = bytearray(nr)
    for i in range(nl):
        lo[i] = 1 if (<u64>left[i]) & ptop else 0
    for j in range(nr):
        ro[j] = 1 if (<u64>right[j]) & qtop else 0
    cdef long long c[4]
    c[0] = c[1] = c[2] = c[3] = 0
    with nogil:
        for i in range(nl):
            for j in range(nr):
                c[2 * ro[j] + lo[i]] += 1
    return (c[0], c[1], c[2], c[3])
