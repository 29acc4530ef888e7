"""Sparse bitvector storing r one-positions out of a universe of size u.

Positions are split into low bits (fixed width w = floor(log2(u/r)))
and high bits written in unary into a small plain bitvector H, giving
roughly r*log(u/r) + 3r bits total.  select1 reads H directly; rank1
and select0 search over at most one unary run / O(log r) candidates.
"""

import numpy as np


class _PlainBits:
    """Word-packed bitvector with popcount prefixes every 8 words."""

    WORD = 64
    SUPER = 8  # words per superblock

    def __init__(self, length):
        self.length = length
        self.words = [0] * ((length + 63) >> 6)
        self._sb = None

    def set(self, i):
        self.words[i >> 6] |= 1 << (i & 63)

    def freeze(self):
        sb = [0]
        acc = 0
        for k, w in enumerate(self.words):
            if k % self.SUPER == 0 and k:
                sb.append(acc)
            acc += w.bit_count()
        sb.append(acc)
        self._sb = sb
        self.total = acc

    def _select(self, k, ones):
        """Index of the k-th one (ones=True) or zero bit, 0-based k in [1, total]."""
        sb = self._sb
        lo, hi = 0, len(sb) - 1
        bits_per_super = self.SUPER * self.WORD
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            have = sb[mid] if ones else mid * bits_per_super - sb[mid]
            if have < k:
                lo = mid
            else:
                hi = mid
        k -= sb[lo] if ones else lo * bits_per_super - sb[lo]
        wk = lo * self.SUPER
        while True:
            w = self.words[wk]
            cnt = w.bit_count() if ones else self.WORD - w.bit_count()
            if cnt >= k:
                break
            k -= cnt
            wk += 1
        w = self.words[wk] if ones else ~self.words[wk]
        for b in range(self.WORD):
            if (w >> b) & 1:
                k -= 1
                if k == 0:
                    return (wk << 6) + b
        raise AssertionError("select ran past the word")

    def select1(self, k):
        return self._select(k, True)

    def select0(self, k):
        return self._select(k, False)

    def space_bits(self):
        return {"high": len(self.words) * 64,
                "aux": (len(self._sb) if self._sb else 0) * 32}


class SparseBitvector:
    """Static set of 1-based one-positions with rank/select support."""

    def __init__(self, positions, universe):
        positions = list(positions)
        self.r = len(positions)
        self.universe = universe
        if any(positions[k] >= positions[k + 1] for k in range(self.r - 1)):
            raise ValueError("positions must be strictly increasing")
        if self.r and not (1 <= positions[0] and positions[-1] <= universe):
            raise ValueError("positions out of universe")
        if self.r == 0 or self.r == universe:
            # degenerate: empty or full, no storage needed
            self.low_width = 0
            self.low = []
            self.high = None
            return
        ratio = universe // self.r
        self.low_width = max(0, ratio.bit_length() - 1)
        w = self.low_width
        mask = (1 << w) - 1
        vals = [p - 1 for p in positions]
        self.low = [v & mask for v in vals] if w else []
        highs = [v >> w for v in vals]
        bits = _PlainBits(self.r + highs[-1] + 1)
        for k, h in enumerate(highs):
            bits.set(k + h)
        bits.freeze()
        self.high = bits
        self._zeros_in_high = bits.length - self.r

    # -- queries --------------------------------------------------------

    def select1(self, k):
        """Position of the k-th one, 1 <= k <= r."""
        if not 1 <= k <= self.r:
            raise ValueError("select1 rank out of range: %d" % k)
        if self.high is None:
            return k  # full bitvector
        h = self.high.select1(k) - (k - 1)
        low = self.low[k - 1] if self.low_width else 0
        return ((h << self.low_width) | low) + 1

    def rank1(self, i):
        """Number of ones at positions <= i, 0 <= i <= universe."""
        if not 0 <= i <= self.universe:
            raise ValueError("rank1 position out of range: %d" % i)
        if i == 0 or self.r == 0:
            return 0
        if self.high is None:
            return i
        # count stored values v = position - 1 with v < i
        h = i >> self.low_width
        if h > self._zeros_in_high:
            return self.r
        # ones with high part < h sit before the h-th zero of H
        begin = 0 if h == 0 else self.high.select0(h) - (h - 1)
        if self.low_width == 0:
            return begin
        end = (self.high.select0(h + 1) - h
               if h + 1 <= self._zeros_in_high else self.r)
        lo_i = i & ((1 << self.low_width) - 1)
        lo_arr = self.low
        a, b = begin, end
        while a < b:
            mid = (a + b) // 2
            if lo_arr[mid] < lo_i:
                a = mid + 1
            else:
                b = mid
        return a

    def rank0(self, i):
        return i - self.rank1(i)

    def select0(self, k):
        """Position of the k-th zero, 1 <= k <= universe - r."""
        if not 1 <= k <= self.universe - self.r:
            raise ValueError("select0 rank out of range: %d" % k)
        if self.r == 0:
            return k
        # largest t in [0, r] with select1(t) - t < k, answer is k + t
        lo, hi = 0, self.r
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.select1(mid) - mid < k:
                lo = mid
            else:
                hi = mid - 1
        return k + lo

    def space_bits(self):
        rep = {"low": len(self.low) * self.low_width, "high": 0, "aux": 0}
        if self.high is not None:
            h = self.high.space_bits()
            rep["high"] = h["high"]
            rep["aux"] = h["aux"]
        return rep

    def total_bits(self):
        return sum(self.space_bits().values())
