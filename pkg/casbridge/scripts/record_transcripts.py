#!/usr/bin/env python3
"""Record CAS transcripts for the worked examples from concrete group models.

These are the files a live GAP session would produce; recording them keeps
the extraction pipeline testable without a CAS.  The order-16 transcript is
matched against the published character table (class sizes 1,2,2,1,1,2,2,2,1,2)
so the rho labels agree with the literature.

Run from casbridge/:  python scripts/record_transcripts.py
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "casbridge" / "transcripts"


class Gauss:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re, self.im = Fraction(re), Fraction(im)

    def __mul__(self, o):
        return Gauss(self.re * o.re - self.im * o.im,
                     self.re * o.im + self.im * o.re)

    def __eq__(self, o):
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def coeffs(self, n: int) -> list:
        """Coefficient vector over zeta_n, using i = zeta_n^(n/4)."""
        out = [0] * n
        assert self.re.denominator == 1 and self.im.denominator == 1
        out[0] = int(self.re)
        if self.im:
            assert n % 4 == 0
            out[n // 4] = int(self.im)
        return out


ONE, I = Gauss(1), Gauss(0, 1)


def ipow(k):
    return [ONE, I, Gauss(-1), Gauss(0, -1)][k % 4]


class Model:
    def __init__(self, elements, mul, identity, exponent, index):
        self.elements = list(elements)
        self.mul = mul
        self.e = identity
        self.exponent = exponent
        self.index = index
        self.order = len(self.elements)

    def power(self, g, k):
        acc = self.e
        for _ in range(k):
            acc = self.mul(acc, g)
        return acc

    def inverse(self, g):
        for h in self.elements:
            if self.mul(g, h) == self.e:
                return h
        raise AssertionError

    def classes(self):
        seen, out = set(), []
        for g in self.elements:
            if g in seen:
                continue
            cls = set()
            for h in self.elements:
                cls.add(self.mul(self.mul(h, g), self.inverse(h)))
            seen |= cls
            out.append(sorted(cls, key=self.elements.index))
        return out


def transcript(model, irreps, class_order, ea_blocks):
    """irreps: list of char dicts element -> Gauss, trivial first.
    class_order: list of classes (lists of elements) in the wanted order.
    ea_blocks: list of lists of elements indexed by F2 vectors."""
    reps = [cls[0] for cls in class_order]
    class_of = {}
    for ci, cls in enumerate(class_order):
        for g in cls:
            class_of[g] = ci
    maxdim = max(int(ch[model.e].re) for ch in irreps)
    power_maps = {"-1": [class_of[model.inverse(g)] for g in reps]}
    for k in range(2, max(4, 2 * maxdim) + 1):
        power_maps[str(k)] = [class_of[model.power(g, k)] for g in reps]
    chars = [[ch[g].coeffs(model.exponent) for g in reps] for ch in irreps]
    eas = []
    for block in ea_blocks:
        rank = len(block)
        classes = []
        for mask in range(1 << rank):
            g = model.e
            for b in range(rank):
                if mask >> b & 1:
                    g = model.mul(g, block[b])
            classes.append(class_of[g])
        eas.append({"rank": rank, "classes": classes})
    return {"order": model.order, "index": model.index,
            "exponent": model.exponent,
            "class_sizes": [len(c) for c in class_order],
            "power_maps": power_maps, "characters": chars,
            "elementary_abelians": eas}


def make_z4():
    G = Model(range(4), lambda a, b: (a + b) % 4, 0, 4, 1)
    irreps = [{g: ipow(j * g) for g in G.elements} for j in (0, 1, 2, 3)]
    return transcript(G, irreps, G.classes(), [[2]])


def q8_mul(a, b):
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    (sa, xa), (sb, xb) = a, b
    s, x = table[(xa, xb)]
    return (sa * sb * s, x)


def make_q8():
    elements = [(s, x) for x in range(4) for s in (1, -1)]
    G = Model(elements, q8_mul, (1, 0), 4, 4)

    def lin(ei, ej):
        signs = {0: (1, 1), 1: (1, -1), 2: (-1, 1), 3: (-1, -1)}

        def val(g):
            a, b = signs[g[1]]
            return Gauss((a ** ei) * (b ** ej))
        return {g: val(g) for g in G.elements}

    two = {g: Gauss(2 * g[0]) if g[1] == 0 else Gauss(0) for g in G.elements}
    irreps = [lin(0, 0), lin(0, 1), lin(1, 0), lin(1, 1), two]
    return transcript(G, irreps, G.classes(), [[(-1, 0)]])


def g16_mul(a, b):
    (k1, e1), (k2, e2) = a, b
    return ((k1 + k2 * (5 ** e1)) % 8, (e1 + e2) % 2)


PAPER_TABLE = {
    "rho1": [1, -1, 1, 1, 1, -1, -1, 1, 1, -1],
    "rho2": [1, 1, -1, 1, 1, -1, 1, -1, 1, -1],
    "rho3": [1, -1, -1, 1, 1, 1, -1, -1, 1, 1],
    "rho4": [1, "i", 1, -1, 1, "i", "-i", -1, -1, "-i"],
    "rho5": [1, "-i", 1, -1, 1, "-i", "i", -1, -1, "i"],
    "rho6": [1, "i", -1, -1, 1, "-i", "-i", 1, -1, "i"],
    "rho7": [1, "-i", -1, -1, 1, "i", "i", 1, -1, "-i"],
    "rho8": [2, 0, 0, "2i", -2, 0, 0, 0, "-2i", 0],
    "rho9": [2, 0, 0, "-2i", -2, 0, 0, 0, "2i", 0],
}
PAPER_SIZES = [1, 2, 2, 1, 1, 2, 2, 2, 1, 2]


def _gval(v):
    return Gauss(v) if isinstance(v, int) else \
        {"i": I, "-i": Gauss(0, -1), "2i": Gauss(0, 2), "-2i": Gauss(0, -2)}[v]


def make_g16_6():
    elements = [(k, e) for k in range(8) for e in range(2)]
    G = Model(elements, g16_mul, (0, 0), 8, 6)
    classes = G.classes()

    def lin(s, t):
        return {(k, e): ipow(s * k) * Gauss((-1) ** (t * e))
                for (k, e) in G.elements}

    def ind(j):
        vals = {}
        for (k, e) in G.elements:
            if e == 1 or k % 2 == 1:
                vals[(k, e)] = Gauss(0)
            else:
                v = ipow(j * (k // 2))
                vals[(k, e)] = Gauss(2) * v
        return vals

    abstract = [lin(s, t) for s in range(4) for t in range(2)] + [ind(1), ind(3)]
    class_of = {}
    for ci, cls in enumerate(classes):
        for g in cls:
            class_of[g] = ci
    reps = [cls[0] for cls in classes]

    idx_by_size = {}
    for ci, cls in enumerate(classes):
        idx_by_size.setdefault(len(cls), []).append(ci)
    slots_by_size = {}
    for pos, size in enumerate(PAPER_SIZES):
        slots_by_size.setdefault(size, []).append(pos)
    names = list(PAPER_TABLE)
    target = {nm: [_gval(v) for v in row] for nm, row in PAPER_TABLE.items()}
    found = None
    for perm1 in itertools.permutations(idx_by_size[1]):
        for perm2 in itertools.permutations(idx_by_size[2]):
            cols = [None] * 10
            for slot, ci in zip(slots_by_size[1], perm1):
                cols[slot] = ci
            for slot, ci in zip(slots_by_size[2], perm2):
                cols[slot] = ci
            if cols[0] != class_of[G.e]:
                continue
            assign, used, ok = {}, set(), True
            for nm in names:
                match = None
                for ai, ch in enumerate(abstract):
                    if ai not in used and all(ch[reps[cols[p]]] == target[nm][p]
                                              for p in range(10)):
                        match = ai
                        break
                if match is None:
                    ok = False
                    break
                assign[nm] = match
                used.add(match)
            if ok:
                found = (cols, assign)
                break
        if found:
            break
    assert found, "printed character table not matched"
    cols, assign = found
    class_order = [classes[c] for c in cols]
    irreps = [lin(0, 0)] + [abstract[assign[nm]] for nm in names]
    return transcript(G, irreps, class_order, [[(4, 0), (0, 1)]])


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, doc in (("z4.json", make_z4()), ("q8.json", make_q8()),
                      ("g16_6.json", make_g16_6())):
        assert sum(doc["class_sizes"]) == doc["order"]
        path = OUT / name
        path.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n", "utf-8")
        print("wrote", path, "classes:", doc["class_sizes"])


if __name__ == "__main__":
    main()
