"""Input documents: representation-theoretic data and cohomology presentations.

Both inputs are UTF-8 JSON.  A repdata document lists the real and complex
irreducibles with their endomorphism types, the tensor and exterior-power
tables (decompositions with explicit trivial multiplicity), and optionally
restriction data to maximal elementary abelian subgroups.  A cohomology
document is a Carlson-style presentation: generators with degrees plus
relation strings in the shared polynomial grammar.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from math import comb as binomial

from .f2poly import Ring, SchemaError
from .groebner import Algebra, Budget, graded_dimension, present
from .linalg import rank_f2

FS_REAL, FS_COMPLEX, FS_QUATERNION = "R", "C", "H"


@dataclass(frozen=True)
class RealRep:
    name: str
    dim: int
    fs_type: str
    trivial: bool = False


@dataclass(frozen=True)
class ComplexRep:
    name: str
    dim: int
    link_kind: str  # "complexification" | "realification"
    link_real: str
    trivial: bool = False


@dataclass(frozen=True)
class Decomposition:
    """Nonnegative combination of irreducibles, trivial summand explicit."""

    parts: tuple  # ((rep name, mult), ...) sorted by name
    trivial_mult: int = 0

    def total_dim(self, dims: dict) -> int:
        return self.trivial_mult + sum(dims[nm] * k for nm, k in self.parts)

    def items(self):
        return self.parts


@dataclass
class RepTheoryData:
    reals: list
    complexes: list
    tensor_real: dict  # frozenset-or-single key -> Decomposition
    lambda_real: dict  # (name, p) -> Decomposition
    tensor_complex: dict
    lambda_complex: dict
    restrictions: list = field(default_factory=list)  # [(rank, {rep: [form vectors]})]

    def real(self, name: str) -> RealRep:
        for r in self.reals:
            if r.name == name:
                return r
        raise SchemaError("unknown real representation %r" % name)

    def nontrivial_reals(self) -> list:
        return [r for r in self.reals if not r.trivial]

    def nontrivial_complexes(self) -> list:
        return [c for c in self.complexes if not c.trivial]

    def tensor_entry(self, kind: str, a: str, b: str) -> Decomposition:
        table = self.tensor_real if kind == "real" else self.tensor_complex
        return table[_pair_key(a, b)]


def _pair_key(a: str, b: str):
    return (a, b) if a <= b else (b, a)


def _need(doc: dict, key: str, where: str):
    if key not in doc:
        raise SchemaError("%s: missing key %r" % (where, key))
    return doc[key]


def _parse_decomp(entry: dict, names: dict, where: str) -> Decomposition:
    parts: dict = {}
    for i, item in enumerate(entry.get("decomp", ())):
        rep = _need(item, "rep", "%s.decomp[%d]" % (where, i))
        mult = _need(item, "mult", "%s.decomp[%d]" % (where, i))
        if rep not in names:
            raise SchemaError("%s.decomp[%d]: unknown rep name %r" % (where, i, rep))
        if not isinstance(mult, int) or mult < 0:
            raise SchemaError("%s.decomp[%d]: multiplicity must be >= 0" % (where, i))
        if mult:
            parts[rep] = parts.get(rep, 0) + mult
    tm = entry.get("trivial_mult", 0)
    if not isinstance(tm, int) or tm < 0:
        raise SchemaError("%s.trivial_mult must be >= 0" % where)
    return Decomposition(tuple(sorted(parts.items())), tm)


def parse_repdata(doc: dict | str) -> RepTheoryData:
    """Validate a repdata document; every table invariant is enforced here."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise SchemaError("repdata document must be a JSON object")

    reals: list = []
    for i, entry in enumerate(_need(doc, "reals", "repdata")):
        where = "reals[%d]" % i
        name = _need(entry, "name", where)
        dim = _need(entry, "dim", where)
        typ = _need(entry, "type", where)
        trivial = bool(entry.get("trivial", False))
        if not isinstance(dim, int) or dim < 1:
            raise SchemaError("%s: dim must be a positive integer" % where)
        if typ not in (FS_REAL, FS_COMPLEX, FS_QUATERNION):
            raise SchemaError("%s: type must be one of R, C, H" % where)
        if typ == FS_COMPLEX and dim % 2:
            raise SchemaError("%s: complex type forces even dimension" % where)
        if typ == FS_QUATERNION and dim % 4:
            raise SchemaError("%s: quaternion type forces dimension divisible by 4" % where)
        reals.append(RealRep(name, dim, typ, trivial))
    if len({r.name for r in reals}) != len(reals):
        raise SchemaError("reals: duplicate names")
    trivials = [r for r in reals if r.trivial]
    if len(trivials) != 1 or trivials[0].dim != 1 or trivials[0].fs_type != FS_REAL:
        raise SchemaError("reals: exactly one trivial representation of dim 1, type R required")

    rdims = {r.name: r.dim for r in reals}
    rbyname = {r.name: r for r in reals}

    complexes: list = []
    for i, entry in enumerate(doc.get("complexes", ())):
        where = "complexes[%d]" % i
        name = _need(entry, "name", where)
        dim = _need(entry, "dim", where)
        trivial = bool(entry.get("trivial", False))
        if not isinstance(dim, int) or dim < 1:
            raise SchemaError("%s: dim must be a positive integer" % where)
        if trivial:
            complexes.append(ComplexRep(name, dim, "complexification",
                                        trivials[0].name, True))
            continue
        link = _need(entry, "link", where)
        kind = _need(link, "kind", where + ".link")
        real = _need(link, "real", where + ".link")
        if real not in rbyname:
            raise SchemaError("%s.link: unknown real rep %r" % (where, real))
        r = rbyname[real]
        if kind == "complexification":
            if r.fs_type != FS_REAL or r.dim != dim:
                raise SchemaError("%s: complexification must link a real-type rep "
                                  "of equal dimension" % where)
        elif kind == "realification":
            if r.fs_type not in (FS_COMPLEX, FS_QUATERNION) or r.dim != 2 * dim:
                raise SchemaError("%s: realification must link a complex- or quaternion-"
                                  "type rep of twice the complex dimension" % where)
        else:
            raise SchemaError("%s.link: kind must be complexification or realification" % where)
        complexes.append(ComplexRep(name, dim, kind, real))
    if len({c.name for c in complexes}) != len(complexes):
        raise SchemaError("complexes: duplicate names")
    cdims = {c.name: c.dim for c in complexes}

    def parse_tensor(key: str, names: dict, dims: dict) -> dict:
        table: dict = {}
        for i, entry in enumerate(doc.get(key, ())):
            where = "%s[%d]" % (key, i)
            left = _need(entry, "left", where)
            right = _need(entry, "right", where)
            for nm in (left, right):
                if nm not in names:
                    raise SchemaError("%s: unknown rep name %r" % (where, nm))
            dec = _parse_decomp(entry, names, where)
            if dec.total_dim(dims) != dims[left] * dims[right]:
                raise SchemaError("%s: dimension mismatch, %d x %d != %d"
                                  % (where, dims[left], dims[right], dec.total_dim(dims)))
            k = _pair_key(left, right)
            if k in table and table[k] != dec:
                raise SchemaError("%s: conflicting duplicate of tensor entry" % where)
            table[k] = dec
        return table

    def parse_lambda(key: str, names: dict, dims: dict) -> dict:
        table: dict = {}
        for i, entry in enumerate(doc.get(key, ())):
            where = "%s[%d]" % (key, i)
            rep = _need(entry, "rep", where)
            p = _need(entry, "p", where)
            if rep not in names:
                raise SchemaError("%s: unknown rep name %r" % (where, rep))
            if not isinstance(p, int) or not 1 <= p <= dims[rep]:
                raise SchemaError("%s: p out of range 1..%d" % (where, dims[rep]))
            dec = _parse_decomp(entry, names, where)
            if dec.total_dim(dims) != binomial(dims[rep], p):
                raise SchemaError("%s: dimension mismatch, C(%d,%d) != %d"
                                  % (where, dims[rep], p, dec.total_dim(dims)))
            table[(rep, p)] = dec
        return table

    rnames = {r.name for r in reals}
    cnames = {c.name for c in complexes}
    data = RepTheoryData(
        reals=reals,
        complexes=complexes,
        tensor_real=parse_tensor("tensor_real", rnames, rdims),
        lambda_real=parse_lambda("lambda_real", rnames, rdims),
        tensor_complex=parse_tensor("tensor_complex", cnames, cdims),
        lambda_complex=parse_lambda("lambda_complex", cnames, cdims),
    )

    # table completeness: all pairs of nontrivial reps, all 1 <= p <= dim
    nt = [r.name for r in reals if not r.trivial]
    for a in nt:
        for b in nt:
            if _pair_key(a, b) not in data.tensor_real:
                raise SchemaError("tensor_real: missing entry for (%s, %s)" % (a, b))
    for r in reals:
        if r.trivial:
            continue
        for p in range(1, r.dim + 1):
            if (r.name, p) not in data.lambda_real:
                raise SchemaError("lambda_real: missing entry for (%s, %d)" % (r.name, p))
    ntc = [c.name for c in complexes if not c.trivial]
    for a in ntc:
        for b in ntc:
            if _pair_key(a, b) not in data.tensor_complex:
                raise SchemaError("tensor_complex: missing entry for (%s, %s)" % (a, b))
    for c in complexes:
        if c.trivial:
            continue
        for p in range(1, c.dim + 1):
            if (c.name, p) not in data.lambda_complex:
                raise SchemaError("lambda_complex: missing entry for (%s, %d)" % (c.name, p))

    for i, entry in enumerate(doc.get("restrictions", ())):
        where = "restrictions[%d]" % i
        rank = _need(entry, "rank", where)
        forms = _need(entry, "forms", where)
        if not isinstance(rank, int) or rank < 1:
            raise SchemaError("%s: rank must be >= 1" % where)
        table: dict = {}
        for r in reals:
            if r.trivial:
                continue
            if r.name not in forms:
                raise SchemaError("%s.forms: missing rep %r" % (where, r.name))
            vecs = forms[r.name]
            if len(vecs) != r.dim:
                raise SchemaError("%s.forms[%s]: need exactly %d linear forms"
                                  % (where, r.name, r.dim))
            rows = []
            for v in vecs:
                if len(v) != rank or any(x not in (0, 1) for x in v):
                    raise SchemaError("%s.forms[%s]: forms are GF(2) vectors of length %d"
                                      % (where, r.name, rank))
                rows.append(tuple(int(x) for x in v))
            table[r.name] = rows
        data.restrictions.append((rank, table))

    return data


def serialize_repdata(data: RepTheoryData) -> dict:
    """Canonical document form; parse(serialize(x)) == x on valid data."""

    def dec(d: Decomposition) -> dict:
        return {"decomp": [{"rep": nm, "mult": k} for nm, k in d.parts],
                "trivial_mult": d.trivial_mult}

    doc = {
        "reals": [{"name": r.name, "dim": r.dim, "type": r.fs_type,
                   **({"trivial": True} if r.trivial else {})} for r in data.reals],
        "complexes": [
            {"name": c.name, "dim": c.dim, **({"trivial": True} if c.trivial else
             {"link": {"kind": c.link_kind, "real": c.link_real}})}
            for c in data.complexes],
        "tensor_real": [{"left": a, "right": b, **dec(d)}
                        for (a, b), d in sorted(data.tensor_real.items())],
        "lambda_real": [{"rep": r, "p": p, **dec(d)}
                        for (r, p), d in sorted(data.lambda_real.items())],
        "tensor_complex": [{"left": a, "right": b, **dec(d)}
                           for (a, b), d in sorted(data.tensor_complex.items())],
        "lambda_complex": [{"rep": r, "p": p, **dec(d)}
                           for (r, p), d in sorted(data.lambda_complex.items())],
    }
    if data.restrictions:
        doc["restrictions"] = [
            {"rank": rank, "forms": {nm: [list(v) for v in rows]
                                     for nm, rows in sorted(table.items())}}
            for rank, table in data.restrictions]
    return doc


def parse_cohomology(doc: dict | str, budget: Budget | None = None) -> Algebra:
    """Carlson-style presentation -> presented algebra with a reduced basis."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise SchemaError("cohomology document must be a JSON object")
    gens = _need(doc, "generators", "cohomology")
    names, degrees = [], []
    for i, g in enumerate(gens):
        names.append(_need(g, "name", "generators[%d]" % i))
        d = _need(g, "degree", "generators[%d]" % i)
        if not isinstance(d, int) or d < 1:
            raise SchemaError("generators[%d]: degree must be >= 1" % i)
        degrees.append(d)
    ring = Ring(names, degrees)
    rels = []
    for i, s in enumerate(doc.get("relations", ())):
        p = ring.parse(s)
        if not ring.is_homogeneous(p):
            raise SchemaError("relations[%d]: %r is not homogeneous" % (i, s))
        rels.append(p)
    alg = present(ring, rels, budget)
    n1 = sum(1 for d in degrees if d == 1)
    if graded_dimension(alg, 1) != n1:
        raise SchemaError("cohomology: degree-1 generators are not independent "
                          "modulo the relations")
    return alg


def validate_cross(data: RepTheoryData, coh: Algebra) -> list:
    """Sanity diagnostics between the two inputs; raises on a fatal mismatch.

    The span of the nontrivial one-dimensional reps modulo the relations from
    the degree-1 tensor entries must match dim H^1.
    """
    warnings: list = []
    ones = [r.name for r in data.reals if r.dim == 1 and not r.trivial]
    idx = {nm: i for i, nm in enumerate(ones)}
    rows = []
    for (a, b), dec in data.tensor_real.items():
        if a in idx and b in idx:
            row = [0] * len(ones)
            row[idx[a]] ^= 1
            row[idx[b]] ^= 1
            for nm, k in dec.parts:
                if nm in idx and k % 2:
                    row[idx[nm]] ^= 1
            if any(row):
                rows.append(row)
    rank = _f2_rank(rows)
    h1 = graded_dimension(coh, 1)
    if len(ones) - rank != h1:
        raise SchemaError("degree-1 mismatch: %d independent one-dimensional reps "
                          "vs dim H^1 = %d" % (len(ones) - rank, h1))
    if not data.restrictions:
        warnings.append("no restriction data: Test 4 will be skipped")
    return warnings


def _f2_rank(rows) -> int:
    masks = []
    for row in rows:
        m = 0
        for j, bit in enumerate(row):
            if bit:
                m |= 1 << j
        masks.append(m)
    return rank_f2(masks)


def load_fixture(name: str) -> dict:
    """Bundled JSON document by file name, e.g. 'q8.json'."""
    text = resources.files("swcohom.fixtures").joinpath(name).read_text("utf-8")
    return json.loads(text)
