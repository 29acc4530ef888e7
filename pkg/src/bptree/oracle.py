"""Brute-force reference implementations used by the test suite.

Two independent oracles: `ExcessOracle` evaluates the parenthesis
primitives literally over the excess array, and `PointerTree` is a
classical pointer-based ordinal tree answering every navigation
operation by direct traversal or precomputed labels.  Both are O(n)
per build and at most O(n) per query; the harness keeps n small.
"""

import bisect
import numpy as np

from .bitvec import ParenBitvector


class ExcessOracle:
    """Literal evaluation of the excess-sequence primitives."""

    def __init__(self, bv):
        if isinstance(bv, str):
            bv = ParenBitvector.from_text(bv)
        self.bv = bv
        bits = bv.bit_array().astype(np.int64)
        self.bits = bits
        self.E = np.concatenate([[0], np.cumsum(2 * bits - 1)])
        self.n2 = bv.length
        self._pair = np.zeros(self.n2 + 1, dtype=np.int64)
        starts = (bits[:-1] == 1) & (bits[1:] == 0)
        self._pair[1:self.n2] = starts
        self._pair_prefix = np.cumsum(self._pair)
        self._ones_prefix = np.concatenate([[0], np.cumsum(bits)])
        self._pos1 = np.nonzero(bits == 1)[0] + 1
        self._pos0 = np.nonzero(bits == 0)[0] + 1
        self._pos10 = np.nonzero(self._pair)[0]

    def excess(self, i):
        return int(self.E[i])

    def fwdsearch(self, i, d):
        target = self.E[i] + d
        hits = np.nonzero(self.E[i + 1:] == target)[0]
        return int(i + 1 + hits[0]) if hits.size else None

    def bwdsearch(self, i, d):
        target = self.E[i] + d
        hits = np.nonzero(self.E[:i] == target)[0]
        return int(hits[-1]) if hits.size else None

    def rmq(self, i, j):
        sub = self.E[i:j + 1]
        return int(i + np.argmin(sub))

    def rMq(self, i, j):
        sub = self.E[i:j + 1]
        return int(i + np.argmax(sub))

    def mincount(self, i, j):
        sub = self.E[i:j + 1]
        return int((sub == sub.min()).sum())

    def minselect(self, i, j, q):
        sub = self.E[i:j + 1]
        hits = np.nonzero(sub == sub.min())[0]
        if not 1 <= q <= hits.size:
            return None
        return int(i + hits[q - 1])

    def rank(self, x, i):
        if x == 1:
            return int(self._ones_prefix[i])
        if x == 0:
            return int(i - self._ones_prefix[i])
        if x == 10:
            return int(self._pair_prefix[i])
        raise ValueError("bad rank symbol %r" % (x,))

    def select(self, x, k):
        pos = {1: self._pos1, 0: self._pos0, 10: self._pos10}[x]
        if not 1 <= k <= pos.size:
            return None
        return int(pos[k - 1])

    def total(self, x):
        return {1: self._pos1, 0: self._pos0, 10: self._pos10}[x].size

    def naive_primitive(self, name, *args):
        return getattr(self, name)(*args)


class PointerTree:
    """Pointer-based ordinal tree (or forest) built from a BP sequence.

    Nodes are identified by their opening-parenthesis position, matching
    the succinct structure's convention.  Everything is precomputed with
    iterative passes so degenerate path shapes do not hit recursion
    limits.
    """

    def __init__(self, bv):
        if isinstance(bv, str):
            bv = ParenBitvector.from_text(bv)
        self.bv = bv
        bits = bv.bit_array()
        n2 = bv.length
        self.n2 = n2
        self.n = int(bits.sum())

        size = n2 + 2
        self.close_of = [0] * size
        self.open_of = [0] * size
        self.parent_of = [0] * size        # 0 means "no parent"
        self.depth_of = [0] * size
        self.children = {}
        self.roots = []

        stack = []
        pre = 0
        self.pre_of = [0] * size
        self.pos_of_pre = [0] * (self.n + 1)
        post = 0
        self.post_of = [0] * size
        self.pos_of_post = [0] * (self.n + 1)
        for idx in range(n2):
            pos = idx + 1
            if bits[idx]:
                pre += 1
                self.pre_of[pos] = pre
                self.pos_of_pre[pre] = pos
                if stack:
                    self.parent_of[pos] = stack[-1]
                    self.children[stack[-1]].append(pos)
                else:
                    self.roots.append(pos)
                self.children[pos] = []
                self.depth_of[pos] = len(stack) + 1
                stack.append(pos)
            else:
                opened = stack.pop()
                post += 1
                self.close_of[opened] = pos
                self.open_of[pos] = opened
                self.post_of[opened] = post
                self.pos_of_post[post] = opened
        if stack:
            raise ValueError("sequence is not balanced")

        # subtree sizes, heights and leftmost deepest descendants,
        # children processed before parents via reverse preorder
        self.subtree_of = [1] * size
        self.height_of = [0] * size
        self.deepest_of = list(range(size))
        for pre_k in range(self.n, 0, -1):
            v = self.pos_of_pre[pre_k]
            best_h = -1
            for c in self.children[v]:
                self.subtree_of[v] += self.subtree_of[c]
                if self.height_of[c] > best_h:
                    best_h = self.height_of[c]
                    self.deepest_of[v] = self.deepest_of[c]
            self.height_of[v] = best_h + 1
            if best_h < 0:
                self.deepest_of[v] = v
        self.subtree_of[0] = 0

        self.levels = {}
        for pre_k in range(1, self.n + 1):
            v = self.pos_of_pre[pre_k]
            self.levels.setdefault(self.depth_of[v], []).append(v)
        self.leaves = [v for v in map(self.pos_of_pre.__getitem__,
                                      range(1, self.n + 1))
                       if not self.children[v]]
        self.leaves.sort()

    # -- basic structure ------------------------------------------------

    def is_node(self, i):
        return 1 <= i <= self.n2 and self.pre_of[i] > 0

    def _need_node(self, i):
        if not self.is_node(i):
            raise ValueError("%d is not a node identifier" % i)

    def root(self):
        return 1

    def preorder(self, i):
        self._need_node(i)
        return self.pre_of[i]

    def preorderselect(self, k):
        if not 1 <= k <= self.n:
            raise ValueError("preorder rank out of range")
        return self.pos_of_pre[k]

    def postorder(self, i):
        self._need_node(i)
        return self.post_of[i]

    def postorderselect(self, k):
        if not 1 <= k <= self.n:
            raise ValueError("postorder rank out of range")
        return self.pos_of_post[k]

    def isleaf(self, i):
        self._need_node(i)
        return not self.children[i]

    def isancestor(self, i, j):
        self._need_node(i)
        self._need_node(j)
        return i <= j < self.close_of[i]

    def depth(self, i):
        self._need_node(i)
        return self.depth_of[i]

    def parent(self, i):
        self._need_node(i)
        return self.parent_of[i] or None

    def fchild(self, i):
        self._need_node(i)
        if not self.children[i]:
            raise ValueError("fchild of a leaf")
        return self.children[i][0]

    def lchild(self, i):
        self._need_node(i)
        if not self.children[i]:
            raise ValueError("lchild of a leaf")
        return self.children[i][-1]

    def _siblings(self, i):
        p = self.parent_of[i]
        return self.children[p] if p else self.roots

    def nsibling(self, i):
        self._need_node(i)
        sibs = self._siblings(i)
        k = sibs.index(i)
        return sibs[k + 1] if k + 1 < len(sibs) else None

    def psibling(self, i):
        self._need_node(i)
        sibs = self._siblings(i)
        k = sibs.index(i)
        return sibs[k - 1] if k > 0 else None

    def subtree(self, i):
        self._need_node(i)
        return self.subtree_of[i]

    def levelancestor(self, i, d):
        self._need_node(i)
        if d < 1:
            raise ValueError("levelancestor distance must be >= 1")
        v = i
        for _ in range(d):
            v = self.parent_of[v]
            if not v:
                return None
        return v

    def levelnext(self, i):
        self._need_node(i)
        lvl = self.levels[self.depth_of[i]]
        k = bisect.bisect_right(lvl, i)
        return lvl[k] if k < len(lvl) else None

    def levelprev(self, i):
        self._need_node(i)
        lvl = self.levels[self.depth_of[i]]
        k = bisect.bisect_left(lvl, i)
        return lvl[k - 1] if k > 0 else None

    def levelleftmost(self, d):
        if d < 1:
            raise ValueError("depth must be >= 1")
        lvl = self.levels.get(d)
        return lvl[0] if lvl else None

    def levelrightmost(self, d):
        if d < 1:
            raise ValueError("depth must be >= 1")
        lvl = self.levels.get(d)
        return lvl[-1] if lvl else None

    def lca(self, i, j):
        self._need_node(i)
        self._need_node(j)
        a, b = i, j
        while self.depth_of[a] > self.depth_of[b]:
            a = self.parent_of[a]
        while self.depth_of[b] > self.depth_of[a]:
            b = self.parent_of[b]
        while a != b:
            a = self.parent_of[a]
            b = self.parent_of[b]
            if not a or not b:
                return None
        return a or None

    def deepestnode(self, i):
        self._need_node(i)
        return self.deepest_of[i]

    def height(self, i):
        self._need_node(i)
        return self.height_of[i]

    def degree(self, i):
        self._need_node(i)
        return len(self.children[i])

    def child(self, i, q):
        self._need_node(i)
        kids = self.children[i]
        if not 1 <= q <= len(kids):
            raise ValueError("child rank out of range")
        return kids[q - 1]

    def childrank(self, i):
        self._need_node(i)
        if not self.parent_of[i]:
            return None
        return self.children[self.parent_of[i]].index(i) + 1

    def leafrank(self, i):
        if not 1 <= i <= self.n2:
            raise ValueError("position out of range")
        return bisect.bisect_right(self.leaves, i)

    def leafselect(self, k):
        if not 1 <= k <= len(self.leaves):
            raise ValueError("leaf rank out of range")
        return self.leaves[k - 1]

    def numleaves(self, i):
        self._need_node(i)
        lo = bisect.bisect_left(self.leaves, i)
        hi = bisect.bisect_right(self.leaves, self.close_of[i])
        return hi - lo

    def leftmostleaf(self, i):
        self._need_node(i)
        return self.leaves[bisect.bisect_left(self.leaves, i)]

    def rightmostleaf(self, i):
        self._need_node(i)
        hi = bisect.bisect_right(self.leaves, self.close_of[i])
        return self.leaves[hi - 1]

    def close(self, i):
        self._need_node(i)
        return self.close_of[i]

    def open(self, i):
        if not (1 <= i <= self.n2 and self.open_of[i]):
            raise ValueError("%d is not a closing position" % i)
        return self.open_of[i]

    def enclose(self, i):
        self._need_node(i)
        return self.parent_of[i] or None

    def to_text(self):
        """Re-serialize the tree; must reproduce the input exactly."""
        out = []
        for r in self.roots:
            stack = [(r, False)]
            while stack:
                v, done = stack.pop()
                if done:
                    out.append(")")
                    continue
                out.append("(")
                stack.append((v, True))
                for c in reversed(self.children[v]):
                    stack.append((c, False))
        return "".join(out)

    def naive_tree_op(self, name, *args):
        return getattr(self, name)(*args)


def node_positions(bv):
    """All opening positions of a sequence, in order."""
    if isinstance(bv, str):
        bv = ParenBitvector.from_text(bv)
    return (np.nonzero(bv.bit_array() == 1)[0] + 1).tolist()
