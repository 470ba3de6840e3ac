"""Exhaustive minimum-weight search over the GF(2)-span of packed rows.

A codeword over GF(2^m) of length n is m coefficient planes of n bits
each (the packing used by the polynomial module), and a code of
dimension k is the GF(2)-span of the d = m*k rows y^j * x^i * g.  The
2^d - 1 nonzero combinations are visited in Gray-code order, so each
step is one row XOR into the running state; the Hamming weight is the
popcount of the OR of the planes.

Two engines produce identical results: a pure Python walk on unbounded
integers (any length), and a numba kernel on 64-bit words that handles
the large spaces (4^13, 4^14 codewords) in seconds.  Searches can stop
early at a known floor (early_exit) or once the weight drops below a
caller's threshold (abort_below), in which case the returned value is
only an upper bound for this basis but remains a sound reject in a
max-of-minima scan.
"""

import numpy as np

_NUMBA_KERNEL = None
_NUMBA_FAILED = False

# below this step count the compiled kernel cannot win back its call overhead
_NUMBA_STEP_THRESHOLD = 1 << 16


def _get_numba_kernel():
    global _NUMBA_KERNEL, _NUMBA_FAILED
    if _NUMBA_KERNEL is None and not _NUMBA_FAILED:
        try:
            _NUMBA_KERNEL = _compile_numba_kernel()
        except Exception:
            # stale on-disk cache, missing compiler, unsupported platform:
            # all mean the same thing here -- use the pure-Python walk
            _NUMBA_FAILED = True
            return None
    return _NUMBA_KERNEL


def _compile_numba_kernel():
    from numba import njit

    @njit("int64(uint64[:, :], int64, int64, int64, int64)", cache=True)
    def _walk(rows, nwords, early_exit, abort_below, nbits):
        dim = rows.shape[0]
        width = rows.shape[1]
        m = width // nwords
        state = np.zeros(width, dtype=np.uint64)
        best = nbits + 1
        total = np.uint64(1) << np.uint64(dim)
        s = np.uint64(1)
        one = np.uint64(1)
        while s < total:
            t = s
            pos = 0
            while t & one == np.uint64(0):
                t >>= one
                pos += 1
            for w in range(width):
                state[w] ^= rows[pos, w]
            weight = 0
            for wd in range(nwords):
                acc = state[wd]
                for j in range(1, m):
                    acc |= state[j * nwords + wd]
                while acc:
                    acc &= acc - one
                    weight += 1
            if weight < best:
                best = weight
                if best <= early_exit or best < abort_below:
                    return best
            s += one
        return best

    return _walk


def _walk_python(rows, early_exit, abort_below, nbits):
    m = len(rows[0])
    state = [0] * m
    best = nbits + 1
    for s in range(1, 1 << len(rows)):
        row = rows[(s & -s).bit_length() - 1]
        acc = 0
        for j in range(m):
            state[j] ^= row[j]
            acc |= state[j]
        weight = acc.bit_count()
        if weight < best:
            best = weight
            if best <= early_exit or best < abort_below:
                return best
    return best


def _pack_words(rows, nbits):
    """Rows of plane integers to a (dim, m*nwords) uint64 matrix."""
    nwords = (nbits + 63) // 64
    mask = (1 << 64) - 1
    out = np.zeros((len(rows), len(rows[0]) * nwords), dtype=np.uint64)
    for i, planes in enumerate(rows):
        for j, p in enumerate(planes):
            for w in range(nwords):
                out[i, j * nwords + w] = (p >> (64 * w)) & mask
    return out, nwords


def min_weight(rows, nbits, early_exit=1, abort_below=0, engine="auto"):
    """Minimum Hamming weight over nonzero GF(2)-combinations of rows.

    rows: sequences of m plane integers, each of at most nbits bits.
    Returns min weight, or an upper bound once it drops below
    abort_below, or the first value at or below early_exit.
    """
    if not rows:
        raise ValueError("no basis rows: the zero space has no nonzero weight")
    if engine not in ("auto", "python", "numba"):
        raise ValueError(f"unknown engine {engine!r}")
    dim = len(rows)
    use_numba = engine == "numba"
    if engine == "auto" and dim < 63 and (1 << dim) >= _NUMBA_STEP_THRESHOLD:
        use_numba = True
    if use_numba:
        kernel = _get_numba_kernel()
        if kernel is None:
            if engine == "numba":
                raise RuntimeError("numba requested but not importable")
        else:
            packed, nwords = _pack_words(rows, nbits)
            return int(kernel(packed, nwords, early_exit, abort_below, nbits))
    return _walk_python(rows, early_exit, abort_below, nbits)
