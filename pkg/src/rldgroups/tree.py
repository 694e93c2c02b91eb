"""Automorphisms of the binary tree with 2^n leaves, stored as portraits.

A portrait holds one flip bit per internal node, laid out breadth first in
heap order (node 1 is the root, node ``i`` has children ``2i`` and ``2i+1``;
array index is ``node - 1``).  The flip bit at a node says whether the next
leaf-address bit is complemented, given the input address so far.  So the
leaf with address ``b_1 ... b_n`` (``b_1`` most significant) goes to
``c_1 ... c_n`` with ``c_i = b_i XOR flip(node reached by b_1 ... b_{i-1})``.

Products are read left to right: ``mul(g, h)`` applies ``g`` and then ``h``.
With that convention the wreath recursion is

    (f, A, B)(g, C, D) = (f+g, AC, BD)   if f = 0
                         (f+g, AD, BC)   if f = 1

and ``to_permutation(mul(g, h)) == perm.compose(to_permutation(g), to_permutation(h))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DepthMismatch, LeafOutOfRange, SwappedPrefix


@dataclass(frozen=True)
class TreeAut:
    n: int
    bits: bytes  # 2^n - 1 bytes, each 0 or 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("depth parameter n must be >= 1")
        if len(self.bits) != (1 << self.n) - 1:
            raise ValueError(f"portrait for n={self.n} needs {(1 << self.n) - 1} bits, got {len(self.bits)}")

    @classmethod
    def from_array(cls, n: int, arr) -> "TreeAut":
        return cls(n, np.asarray(arr, dtype=np.uint8).tobytes())

    @property
    def array(self) -> np.ndarray:
        return np.frombuffer(self.bits, dtype=np.uint8)

    def level(self, d: int) -> np.ndarray:
        """Flip bits of the ``2^d`` nodes at depth ``d`` (root is depth 0)."""
        return self.array[(1 << d) - 1:(1 << (d + 1)) - 1]

    @property
    def flip(self) -> int:
        return self.bits[0]

    def subtree(self, path: Sequence[int]) -> "TreeAut":
        """Portrait below the node reached by ``path`` (no flip checks)."""
        k = len(path)
        if k >= self.n:
            raise ValueError(f"path of length {k} leaves no internal nodes at n={self.n}")
        v = 1
        for b in path:
            v = 2 * v + (b & 1)
        arr = self.array
        parts = []
        for e in range(self.n - k):
            start = (v << e) - 1
            parts.append(arr[start:start + (1 << e)])
        return TreeAut.from_array(self.n - k, np.concatenate(parts))

    @property
    def left(self) -> "TreeAut":
        return self.subtree((0,))

    @property
    def right(self) -> "TreeAut":
        return self.subtree((1,))

    def is_identity(self) -> bool:
        return not any(self.bits)

    def __mul__(self, other: "TreeAut") -> "TreeAut":
        return mul(self, other)

    def __pow__(self, k: int) -> "TreeAut":
        return power(self, k)

    def __repr__(self):
        return f"TreeAut({to_hex(self)})"


def identity(n: int) -> TreeAut:
    return TreeAut(n, bytes((1 << n) - 1))


def root_flip(n: int) -> TreeAut:
    return TreeAut(n, b"\x01" + bytes((1 << n) - 2))


def from_parts(f: int, left: TreeAut, right: TreeAut) -> TreeAut:
    """The element ``(f, left, right)`` one level deeper than its children."""
    if left.n != right.n:
        raise DepthMismatch(f"children have depths {left.n} and {right.n}")
    parts = [np.array([f & 1], dtype=np.uint8)]
    for d in range(left.n):
        parts.append(left.level(d))
        parts.append(right.level(d))
    return TreeAut.from_array(left.n + 1, np.concatenate(parts))


def _node_images(g: TreeAut):
    # Per depth d: local position of the image of each depth-d node under g.
    img = np.zeros(1, dtype=np.int64)
    out = [img]
    for d in range(g.n - 1):
        gd = g.level(d).astype(np.int64)
        nxt = np.empty(2 << d, dtype=np.int64)
        nxt[0::2] = 2 * img + gd
        nxt[1::2] = 2 * img + (1 ^ gd)
        img = nxt
        out.append(img)
    return out


def mul(g: TreeAut, h: TreeAut) -> TreeAut:
    """Product ``gh``: apply ``g`` first, then ``h``."""
    if g.n != h.n:
        raise DepthMismatch(f"cannot multiply depths {g.n} and {h.n}")
    imgs = _node_images(g)
    parts = [g.level(d) ^ h.level(d)[imgs[d]] for d in range(g.n)]
    return TreeAut.from_array(g.n, np.concatenate(parts))


def inverse(g: TreeAut) -> TreeAut:
    imgs = _node_images(g)
    out = np.empty((1 << g.n) - 1, dtype=np.uint8)
    for d, img in enumerate(imgs):
        off = (1 << d) - 1
        out[off + img] = g.level(d)
    return TreeAut.from_array(g.n, out)


def power(g: TreeAut, k: int) -> TreeAut:
    if k < 0:
        g, k = inverse(g), -k
    result = identity(g.n)
    base = g
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def act_on_leaf(g: TreeAut, leaf: int) -> int:
    """Image of a leaf address under ``g``."""
    n = g.n
    if not 0 <= leaf < (1 << n):
        raise LeafOutOfRange(f"leaf {leaf} not in [0, {1 << n})")
    bits = g.bits
    v = 1
    out = 0
    for i in range(n):
        b = (leaf >> (n - 1 - i)) & 1
        out = (out << 1) | (b ^ bits[v - 1])
        v = 2 * v + b
    return out


def to_permutation(g: TreeAut) -> np.ndarray:
    n = g.n
    leaves = np.arange(1 << n, dtype=np.int64)
    arr = g.array.astype(np.int64)
    out = np.zeros_like(leaves)
    for d in range(n):
        prefix = leaves >> (n - d)
        b = (leaves >> (n - 1 - d)) & 1
        out = (out << 1) | (b ^ arr[(1 << d) - 1 + prefix])
    return out


def from_permutation(n: int, images) -> TreeAut:
    """Portrait of a leaf permutation that respects the tree structure.

    Raises ``ValueError`` if the permutation is not a tree automorphism.
    """
    images = np.asarray(images, dtype=np.int64)
    if images.size != 1 << n:
        raise ValueError(f"expected {1 << n} images, got {images.size}")
    parts = []
    for d in range(n):
        first = np.arange(1 << d, dtype=np.int64) << (n - d)
        parts.append(((images[first] >> (n - 1 - d)) & 1).astype(np.uint8))
    g = TreeAut.from_array(n, np.concatenate(parts))
    if not np.array_equal(to_permutation(g), images):
        raise ValueError("permutation is not an automorphism of the binary tree")
    return g


def restrict(g: TreeAut, path: Sequence[int]) -> TreeAut:
    """Sub-automorphism at the node reached by ``path``.

    Only meaningful when ``g`` fixes that node, so every node passed on the
    way down must have flip bit 0.
    """
    if len(path) > g.n - 1:
        raise ValueError(f"path too long for n={g.n}")
    v = 1
    for b in path:
        if g.bits[v - 1]:
            raise SwappedPrefix(f"node {v} on path {tuple(path)} has its flip bit set")
        v = 2 * v + (b & 1)
    return g.subtree(path)


def to_hex(g: TreeAut) -> str:
    """``"<n>:<hex>"`` with the portrait bits breadth first, MSB first, zero padded."""
    return f"{g.n}:{np.packbits(g.array).tobytes().hex()}"


def from_hex(text: str) -> TreeAut:
    try:
        n_text, hex_text = text.strip().split(":")
        n = int(n_text)
        raw = bytes.fromhex(hex_text)
    except ValueError as exc:
        raise ValueError(f"malformed portrait {text!r}; expected '<n>:<hex>'") from exc
    if n < 1:
        raise ValueError(f"malformed portrait {text!r}: n must be >= 1")
    size = (1 << n) - 1
    if len(raw) != (size + 7) // 8:
        raise ValueError(f"malformed portrait {text!r}: n={n} needs {(size + 7) // 8} bytes")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8))
    if bits[size:].any():
        raise ValueError(f"malformed portrait {text!r}: nonzero padding bits")
    return TreeAut.from_array(n, bits[:size])


def random_element(n: int, rng: np.random.Generator) -> TreeAut:
    """Uniform element of the full automorphism group."""
    return TreeAut.from_array(n, rng.integers(0, 2, size=(1 << n) - 1))
