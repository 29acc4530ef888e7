"""Packed parenthesis bitvector and chunk-table block scanning.

A sequence of 2n parentheses is stored as a bit array with '(' = 1 and
')' = 0, packed most-significant-bit first into bytes.  All public
positions are 1-based; excess(0) is defined as 0.

Block scans walk the bit array in chunks of 8 or 16 bits using
precomputed per-chunk summaries, dropping to single bits only at the
unaligned edges of the requested range.
"""

import math
import numpy as np

# ------------------------------------------------------------------
# Chunk summary tables
# ------------------------------------------------------------------

def chunk_summary(value, width):
    """Bit-by-bit summary of a chunk value read MSB first.

    Returns (e, m, M, n, ones, pairs10) where e is the net excess, m/M
    the min/max running excess, n the number of times m occurs, ones
    the popcount, and pairs10 the number of "10" pairs that start
    strictly inside the chunk (the pair starting at the last bit is
    reconciled by the caller).
    """
    e = 0
    m = width + 1
    M = -(width + 1)
    n = 0
    ones = 0
    pairs = 0
    prev = None
    for j in range(width):
        bit = (value >> (width - 1 - j)) & 1
        if prev == 1 and bit == 0:
            pairs += 1
        e += 1 if bit else -1
        ones += bit
        if e < m:
            m, n = e, 1
        elif e == m:
            n += 1
        if e > M:
            M = e
        prev = bit
    return e, m, M, n, ones, pairs


class ChunkTables:
    """Summary tables for every chunk value of a fixed width (8 or 16).

    Tables are plain lists for fast scalar lookup during scans; numpy
    mirrors of the same data are kept for vectorized construction work.
    """

    def __init__(self, width):
        if width not in (8, 16):
            raise ValueError("unsupported chunk width: %r" % (width,))
        self.width = width
        if width == 8:
            e, m, M, n, ones, pairs = _build_base_tables()
        else:
            e, m, M, n, ones, pairs = _combine_tables(*_build_base_tables())
        self.e_np, self.m_np, self.M_np = e, m, M
        self.n_np, self.ones_np, self.pairs_np = n, ones, pairs
        self.e = e.tolist()
        self.m = m.tolist()
        self.M = M.tolist()
        self.n = n.tolist()
        self.ones = ones.tolist()
        self.pairs10 = pairs.tolist()


def _build_base_tables():
    """Vectorized 8-bit tables; the bit-by-bit oracle checks them in tests."""
    vals = np.arange(256, dtype=np.uint16)
    bits = ((vals[:, None] >> np.arange(7, -1, -1)) & 1).astype(np.int32)
    steps = 2 * bits - 1
    pref = np.cumsum(steps, axis=1)
    e = pref[:, -1]
    m = pref.min(axis=1)
    M = pref.max(axis=1)
    n = (pref == m[:, None]).sum(axis=1)
    ones = bits.sum(axis=1)
    pairs = ((bits[:, :-1] == 1) & (bits[:, 1:] == 0)).sum(axis=1)
    return (e.astype(np.int32), m.astype(np.int32), M.astype(np.int32),
            n.astype(np.int32), ones.astype(np.int32), pairs.astype(np.int32))


def _combine_tables(e8, m8, M8, n8, ones8, pairs8):
    """Build the 16-bit tables by joining a high and a low byte."""
    hi = np.arange(65536, dtype=np.int64) >> 8
    lo = np.arange(65536, dtype=np.int64) & 0xFF
    e = e8[hi] + e8[lo]
    m = np.minimum(m8[hi], e8[hi] + m8[lo])
    M = np.maximum(M8[hi], e8[hi] + M8[lo])
    n = (np.where(m8[hi] == m, n8[hi], 0)
         + np.where(e8[hi] + m8[lo] == m, n8[lo], 0))
    ones = ones8[hi] + ones8[lo]
    # the pair straddling the two bytes starts inside the 16-bit chunk
    pairs = pairs8[hi] + pairs8[lo] + ((hi & 1) == 1) * ((lo >> 7) == 0)
    return (e.astype(np.int32), m.astype(np.int32), M.astype(np.int32),
            n.astype(np.int32), ones.astype(np.int32), pairs.astype(np.int32))


_TABLE_CACHE = {}


def build_chunk_tables(width):
    """Shared ChunkTables instance for the given width (8 or 16)."""
    tbl = _TABLE_CACHE.get(width)
    if tbl is None:
        tbl = ChunkTables(width)
        _TABLE_CACHE[width] = tbl
    return tbl


# ------------------------------------------------------------------
# Parenthesis bitvector
# ------------------------------------------------------------------

class ParenBitvector:
    """Immutable packed bit sequence, 1-based positions, 1 = '('."""

    __slots__ = ("data", "length")

    def __init__(self, data, length):
        if length < 2 or length % 2:
            raise ValueError("parenthesis sequence length must be even and >= 2")
        if len(data) != (length + 7) // 8:
            raise ValueError("packed data has wrong size for length %d" % length)
        self.data = bytes(data)
        self.length = length

    @classmethod
    def from_bits(cls, bits):
        arr = np.asarray(bits, dtype=np.uint8)
        return cls(np.packbits(arr).tobytes(), len(arr))

    @classmethod
    def from_text(cls, text):
        """Parse '(' / ')' text; whitespace is ignored."""
        stripped = "".join(text.split())
        bad = set(stripped) - {"(", ")"}
        if bad:
            raise ValueError("invalid characters in parenthesis text: %r" % bad)
        bits = np.frombuffer(stripped.encode(), dtype=np.uint8) == ord("(")
        return cls.from_bits(bits)

    def get(self, i):
        """Bit at position i (1-based)."""
        if not 1 <= i <= self.length:
            raise ValueError("position %d out of range [1, %d]" % (i, self.length))
        j = i - 1
        return (self.data[j >> 3] >> (7 - (j & 7))) & 1

    def bit_array(self, lo=1, hi=None):
        """Unpacked uint8 array for positions [lo, hi] (build-time helper)."""
        if hi is None:
            hi = self.length
        b0 = (lo - 1) >> 3
        b1 = (hi + 7) >> 3
        bits = np.unpackbits(np.frombuffer(self.data, dtype=np.uint8)[b0:b1])
        off = (lo - 1) - 8 * b0
        return bits[off:off + (hi - lo + 1)]

    def is_balanced(self):
        """True if the running excess never drops below 0 and ends at 0."""
        steps = self.bit_array().astype(np.int64) * 2 - 1
        exc = np.cumsum(steps)
        return bool(exc.min() >= 0 and exc[-1] == 0)

    def to_text(self):
        return "".join("()"[1 - b] for b in self.bit_array())

    def __len__(self):
        return self.length

    def __eq__(self, other):
        return (isinstance(other, ParenBitvector)
                and self.length == other.length and self.data == other.data)


# ------------------------------------------------------------------
# File formats: plain text and bit-packed binary
# ------------------------------------------------------------------

def write_paren_text(bv, path):
    with open(path, "w") as fh:
        fh.write(bv.to_text())
        fh.write("\n")


def write_paren_packed(bv, path):
    """8-byte little-endian bit count followed by MSB-first packed bytes."""
    with open(path, "wb") as fh:
        fh.write(len(bv).to_bytes(8, "little"))
        fh.write(bv.data)


def read_paren_file(path):
    """Load a parenthesis file, auto-detecting text vs packed binary."""
    with open(path, "rb") as fh:
        raw = fh.read()
    head = raw.lstrip()
    if head[:1] in (b"(", b")"):
        return ParenBitvector.from_text(raw.decode())
    if len(raw) < 8:
        raise ValueError("file too short for packed format: %s" % path)
    length = int.from_bytes(raw[:8], "little")
    payload = raw[8:]
    if len(payload) != (length + 7) // 8:
        raise ValueError("packed payload size mismatch in %s" % path)
    return ParenBitvector(payload, length)


# ------------------------------------------------------------------
# Chunk-assisted scans
#
# All scans take an inclusive 1-based range [lo, hi].  `cur` is the
# running excess just before `lo` in whatever frame the caller uses
# (absolute, bucket-relative, ...); results stay in that frame.
# ------------------------------------------------------------------

def scan_excess_end(bv, tbl, lo, hi, cur):
    """Running excess after consuming positions [lo, hi]."""
    if lo > hi:
        return cur
    data = bv.data
    w = tbl.width
    te = tbl.e
    i = lo
    head = min(hi, lo + (-(lo - 1)) % w - 1)
    while i <= head:
        j = i - 1
        cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        i += 1
    if w == 16:
        while i + 15 <= hi:
            b = (i - 1) >> 3
            cur += te[(data[b] << 8) | data[b + 1]]
            i += 16
    else:
        while i + 7 <= hi:
            cur += te[data[(i - 1) >> 3]]
            i += 8
    while i <= hi:
        j = i - 1
        cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        i += 1
    return cur


def scan_fwd_excess(bv, tbl, lo, hi, cur, target):
    """Leftmost position in [lo, hi] whose running excess equals target."""
    if lo > hi:
        return None
    data = bv.data
    w = tbl.width
    te, tm, tM = tbl.e, tbl.m, tbl.M
    i = lo
    head = min(hi, lo + (-(lo - 1)) % w - 1)
    while i <= head:
        j = i - 1
        cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        if cur == target:
            return i
        i += 1
    while i + w - 1 <= hi:
        b = (i - 1) >> 3
        v = (data[b] << 8) | data[b + 1] if w == 16 else data[b]
        if cur + tm[v] <= target <= cur + tM[v]:
            for k in range(i, i + w):
                j = k - 1
                cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
                if cur == target:
                    return k
        cur += te[v]
        i += w
    while i <= hi:
        j = i - 1
        cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        if cur == target:
            return i
        i += 1
    return None


def scan_bwd_excess(bv, tbl, lo, hi, cur_hi, target):
    """Rightmost position in [lo, hi] whose running excess equals target.

    `cur_hi` is the excess at position hi itself.
    """
    if lo > hi:
        return None
    data = bv.data
    w = tbl.width
    te, tm, tM = tbl.e, tbl.m, tbl.M
    cur = cur_hi
    i = hi
    # bit-scan down to the nearest chunk end at or below hi
    tail = max(lo - 1, (hi // w) * w)
    while i > tail:
        if cur == target:
            return i
        j = i - 1
        cur -= 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        i -= 1
    while i - w + 1 >= lo:
        b = (i - w) >> 3
        v = (data[b] << 8) | data[b + 1] if w == 16 else data[b]
        base = cur - te[v]
        if base + tm[v] <= target <= base + tM[v]:
            for k in range(i, i - w, -1):
                if cur == target:
                    return k
                j = k - 1
                cur -= 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
            i -= w
        else:
            cur = base
            i -= w
    while i >= lo:
        if cur == target:
            return i
        j = i - 1
        cur -= 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        i -= 1
    return None


def scan_min(bv, tbl, lo, hi, cur):
    """(min excess, leftmost position attaining it) over [lo, hi]."""
    data = bv.data
    w = tbl.width
    te, tm = tbl.e, tbl.m
    best = None
    pos = None
    i = lo
    head = min(hi, lo + (-(lo - 1)) % w - 1)
    while i <= head:
        j = i - 1
        cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        if best is None or cur < best:
            best, pos = cur, i
        i += 1
    while i + w - 1 <= hi:
        b = (i - 1) >> 3
        v = (data[b] << 8) | data[b + 1] if w == 16 else data[b]
        if best is None or cur + tm[v] < best:
            goal = cur + tm[v]
            for k in range(i, i + w):
                j = k - 1
                cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
                if best is None or cur < best:
                    best, pos = cur, k
            i += w
        else:
            cur += te[v]
            i += w
    while i <= hi:
        j = i - 1
        cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        if best is None or cur < best:
            best, pos = cur, i
        i += 1
    return best, pos


def scan_max(bv, tbl, lo, hi, cur):
    """(max excess, leftmost position attaining it) over [lo, hi]."""
    data = bv.data
    w = tbl.width
    te, tM = tbl.e, tbl.M
    best = None
    pos = None
    i = lo
    head = min(hi, lo + (-(lo - 1)) % w - 1)
    while i <= head:
        j = i - 1
        cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        if best is None or cur > best:
            best, pos = cur, i
        i += 1
    while i + w - 1 <= hi:
        b = (i - 1) >> 3
        v = (data[b] << 8) | data[b + 1] if w == 16 else data[b]
        if best is None or cur + tM[v] > best:
            for k in range(i, i + w):
                j = k - 1
                cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
                if best is None or cur > best:
                    best, pos = cur, k
            i += w
        else:
            cur += te[v]
            i += w
    while i <= hi:
        j = i - 1
        cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        if best is None or cur > best:
            best, pos = cur, i
        i += 1
    return best, pos


def scan_count_eq(bv, tbl, lo, hi, cur, target):
    """Occurrences of excess == target in [lo, hi].

    Requires target <= the minimum excess of every full chunk touched
    (holds whenever target is the minimum of the enclosing range), so
    per-chunk occurrence counts of the chunk minimum apply directly.
    """
    if lo > hi:
        return 0
    data = bv.data
    w = tbl.width
    te, tm, tn = tbl.e, tbl.m, tbl.n
    cnt = 0
    i = lo
    head = min(hi, lo + (-(lo - 1)) % w - 1)
    while i <= head:
        j = i - 1
        cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        if cur == target:
            cnt += 1
        i += 1
    while i + w - 1 <= hi:
        b = (i - 1) >> 3
        v = (data[b] << 8) | data[b + 1] if w == 16 else data[b]
        if cur + tm[v] == target:
            cnt += tn[v]
        cur += te[v]
        i += w
    while i <= hi:
        j = i - 1
        cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        if cur == target:
            cnt += 1
        i += 1
    return cnt


def scan_select_eq(bv, tbl, lo, hi, cur, target, q):
    """Position of the q-th occurrence of excess == target in [lo, hi].

    Same precondition as scan_count_eq.  Returns (position, 0) when
    found, else (None, remaining q).
    """
    if lo > hi:
        return None, q
    data = bv.data
    w = tbl.width
    te, tm, tn = tbl.e, tbl.m, tbl.n
    i = lo
    head = min(hi, lo + (-(lo - 1)) % w - 1)
    while i <= head:
        j = i - 1
        cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        if cur == target:
            q -= 1
            if q == 0:
                return i, 0
        i += 1
    while i + w - 1 <= hi:
        b = (i - 1) >> 3
        v = (data[b] << 8) | data[b + 1] if w == 16 else data[b]
        if cur + tm[v] == target and q <= tn[v]:
            for k in range(i, i + w):
                j = k - 1
                cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
                if cur == target:
                    q -= 1
                    if q == 0:
                        return k, 0
        if cur + tm[v] == target:
            q -= tn[v]
        cur += te[v]
        i += w
    while i <= hi:
        j = i - 1
        cur += 1 if (data[j >> 3] >> (7 - (j & 7))) & 1 else -1
        if cur == target:
            q -= 1
            if q == 0:
                return i, 0
        i += 1
    return None, q


def scan_select_bit(bv, tbl, lo, hi, q, bit):
    """Position of the q-th occurrence of `bit` in [lo, hi], or None."""
    if lo > hi or q <= 0:
        return None
    data = bv.data
    w = tbl.width
    tones = tbl.ones
    i = lo
    head = min(hi, lo + (-(lo - 1)) % w - 1)
    while i <= head:
        j = i - 1
        if (data[j >> 3] >> (7 - (j & 7))) & 1 == bit:
            q -= 1
            if q == 0:
                return i
        i += 1
    while i + w - 1 <= hi:
        b = (i - 1) >> 3
        v = (data[b] << 8) | data[b + 1] if w == 16 else data[b]
        hits = tones[v] if bit else w - tones[v]
        if q <= hits:
            for k in range(i, i + w):
                j = k - 1
                if (data[j >> 3] >> (7 - (j & 7))) & 1 == bit:
                    q -= 1
                    if q == 0:
                        return k
        q -= hits
        i += w
    while i <= hi:
        j = i - 1
        if (data[j >> 3] >> (7 - (j & 7))) & 1 == bit:
            q -= 1
            if q == 0:
                return i
        i += 1
    return None


def _pair_starts_at(data, length, j):
    """True if a "10" pair starts at position j (needs j+1 <= length)."""
    if j >= length:
        return False
    a = j - 1
    if not (data[a >> 3] >> (7 - (a & 7))) & 1:
        return False
    return not (data[j >> 3] >> (7 - (j & 7))) & 1


def scan_count_pairs(bv, tbl, lo, hi):
    """Number of "10" pairs starting in [lo, hi] (second bit may lie beyond hi)."""
    if lo > hi:
        return 0
    data = bv.data
    length = bv.length
    w = tbl.width
    tp = tbl.pairs10
    cnt = 0
    i = lo
    head = min(hi, lo + (-(lo - 1)) % w - 1)
    while i <= head:
        if _pair_starts_at(data, length, i):
            cnt += 1
        i += 1
    while i + w - 1 <= hi:
        b = (i - 1) >> 3
        v = (data[b] << 8) | data[b + 1] if w == 16 else data[b]
        cnt += tp[v]
        if _pair_starts_at(data, length, i + w - 1):
            cnt += 1
        i += w
    while i <= hi:
        if _pair_starts_at(data, length, i):
            cnt += 1
        i += 1
    return cnt


def scan_select_pair(bv, tbl, lo, hi, q):
    """Position of the q-th "10" pair start in [lo, hi], or None."""
    if lo > hi or q <= 0:
        return None
    data = bv.data
    length = bv.length
    w = tbl.width
    tp = tbl.pairs10
    i = lo
    head = min(hi, lo + (-(lo - 1)) % w - 1)
    while i <= head:
        if _pair_starts_at(data, length, i):
            q -= 1
            if q == 0:
                return i
        i += 1
    while i + w - 1 <= hi:
        b = (i - 1) >> 3
        v = (data[b] << 8) | data[b + 1] if w == 16 else data[b]
        hits = tp[v] + (1 if _pair_starts_at(data, length, i + w - 1) else 0)
        if q <= hits:
            for k in range(i, i + w):
                if _pair_starts_at(data, length, k):
                    q -= 1
                    if q == 0:
                        return k
        q -= hits
        i += w
    while i <= hi:
        if _pair_starts_at(data, length, i):
            q -= 1
            if q == 0:
                return i
        i += 1
    return None


def scan_excess(bv, tbl, lo, hi, mode, base_excess=0, target=None, q=None):
    """Dispatcher over the scan family, used by tests and tools.

    Modes: "find_excess" (leftmost position with excess == target),
    "min" / "max" ((value, position) pairs), "count_min" (occurrences
    of the range minimum), "select_min" (position of the q-th range
    minimum).  `base_excess` is the excess just before `lo`.
    """
    if not (1 <= lo <= hi + 1 and hi <= bv.length):
        raise ValueError("bad scan range [%d, %d]" % (lo, hi))
    if mode == "find_excess":
        return scan_fwd_excess(bv, tbl, lo, hi, base_excess, target)
    if mode == "min":
        return scan_min(bv, tbl, lo, hi, base_excess)
    if mode == "max":
        return scan_max(bv, tbl, lo, hi, base_excess)
    if mode == "count_min":
        mn, _ = scan_min(bv, tbl, lo, hi, base_excess)
        return scan_count_eq(bv, tbl, lo, hi, base_excess, mn)
    if mode == "select_min":
        mn, _ = scan_min(bv, tbl, lo, hi, base_excess)
        pos, _ = scan_select_eq(bv, tbl, lo, hi, base_excess, mn, q)
        return pos
    raise ValueError("unknown scan mode: %r" % (mode,))
