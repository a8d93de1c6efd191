"""CAS transcripts: the group-theoretic facts extraction needs, as JSON.

A transcript records, for one group: conjugacy-class sizes, the power maps
the derivations require, every irreducible complex character as coefficient
vectors over the exponent-order root of unity, and the maximal elementary
abelian subgroups as class indices of their elements.  Transcripts come from
a live GAP session or from a recorded file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import value


@dataclass
class Transcript:
    order: int
    index: int
    exponent: int
    class_sizes: list
    power_maps: dict          # int k -> list class -> class (k = -1 for inverse)
    characters: list          # per irrep: list per class of cyclotomic dict
    elementary_abelians: list = field(default_factory=list)
    # each entry: {"rank": r, "classes": [class index per F2 vector 0..2^r-1]}

    @property
    def n_classes(self) -> int:
        return len(self.class_sizes)

    def chi(self, i: int, c: int) -> dict:
        return self.characters[i][c]

    def power_class(self, c: int, k: int) -> int:
        if k == 1:
            return c
        return self.power_maps[k][c]


def parse_transcript(doc: dict | str) -> Transcript:
    if isinstance(doc, str):
        doc = json.loads(doc)
    n = doc["exponent"]
    chars = []
    for row in doc["characters"]:
        chars.append([value(coeffs, n) for coeffs in row])
    t = Transcript(
        order=doc["order"],
        index=doc["index"],
        exponent=n,
        class_sizes=list(doc["class_sizes"]),
        power_maps={int(k): list(v) for k, v in doc["power_maps"].items()},
        characters=chars,
        elementary_abelians=[dict(e) for e in doc.get("elementary_abelians", [])],
    )
    _validate(t)
    return t


def _validate(t: Transcript):
    nc = t.n_classes
    if sum(t.class_sizes) != t.order:
        raise ValueError("class sizes do not sum to the group order")
    if sum(len(_dims(t, i)) for i in range(len(t.characters))) == 0:
        raise ValueError("no characters")
    for k, pm in t.power_maps.items():
        if len(pm) != nc or any(not 0 <= c < nc for c in pm):
            raise ValueError("power map %d is malformed" % k)
    dims = []
    for i, row in enumerate(t.characters):
        if len(row) != nc:
            raise ValueError("character %d has %d values, expected %d"
                             % (i, len(row), nc))
        d = row[0]
        if set(d) - {0}:
            raise ValueError("character %d has irrational dimension" % i)
        dims.append(int(d.get(0, Fraction(0))))
    if sum(d * d for d in dims) != t.order:
        raise ValueError("sum of squared dimensions != group order")
    for e in t.elementary_abelians:
        if len(e["classes"]) != 1 << e["rank"]:
            raise ValueError("elementary abelian block has wrong element count")


def _dims(t: Transcript, i: int):
    return t.characters[i][0]
