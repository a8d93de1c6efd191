"""Tiny GF(2) linear algebra on int bitmasks (bit j = coordinate j)."""

from __future__ import annotations


class SpanF2:
    """Row space with incremental insertion, pivoted on the highest set bit."""

    __slots__ = ("pivots",)

    def __init__(self, rows=()):
        self.pivots: dict = {}
        for r in rows:
            self.add(r)

    def reduce(self, m: int) -> int:
        while m:
            top = m.bit_length() - 1
            p = self.pivots.get(top)
            if p is None:
                return m
            m ^= p
        return 0

    def add(self, m: int) -> bool:
        """Insert a vector; True if it enlarged the span."""
        m = self.reduce(m)
        if m:
            self.pivots[m.bit_length() - 1] = m
            return True
        return False

    def contains(self, m: int) -> bool:
        return self.reduce(m) == 0

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank_f2(rows) -> int:
    return SpanF2(rows).rank


def kernel_basis(images: list) -> list:
    """Combinations of the inputs that map to zero.

    images[j] is the image bitmask of input basis vector j; the result is a
    basis of the kernel, each element a bitmask over the inputs.
    """
    span: dict = {}  # top bit -> (image, preimage)
    out = []
    for j, img in enumerate(images):
        pre = 1 << j
        while img:
            top = img.bit_length() - 1
            if top in span:
                si, sp = span[top]
                img ^= si
                pre ^= sp
            else:
                span[top] = (img, pre)
                break
        else:
            out.append(pre)
    return out
