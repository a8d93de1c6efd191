"""Canonical form for repdata documents.

Representation names are cosmetic, so documents are compared after renaming:
reps are colored by (kind, dimension, type), the coloring is refined by how
each rep sits inside the tensor/exterior tables, and any remaining symmetric
group of reps is broken by choosing the renaming with the lexicographically
smallest serialization.  Restriction blocks are canonicalized only up to the
recorded basis (the basis choice is part of the extraction contract).
"""

from __future__ import annotations

import json
from itertools import permutations


def _initial_colors(doc):
    colors = {}
    for r in doc["reals"]:
        colors[("R", r["name"])] = ("R", r["dim"], r["type"],
                                    bool(r.get("trivial")))
    for c in doc.get("complexes", ()):
        colors[("C", c["name"])] = ("C", c["dim"], c["link"]["kind"])
    return colors


def _dec_signature(entry, colors, kind_tag):
    parts = tuple(sorted((colors[(kind_tag, d["rep"])], d["mult"])
                         for d in entry["decomp"]))
    return (parts, entry.get("trivial_mult", 0))


def _refine(doc, colors):
    while True:
        sigs = {key: [colors[key]] for key in colors}
        for entry in doc.get("tensor_real", ()):
            a, b = ("R", entry["left"]), ("R", entry["right"])
            dec = _dec_signature(entry, colors, "R")
            sigs[a].append(("t", colors[b], dec))
            sigs[b].append(("t", colors[a], dec))
        for entry in doc.get("lambda_real", ()):
            key = ("R", entry["rep"])
            sigs[key].append(("l", entry["p"], _dec_signature(entry, colors, "R")))
        for entry in doc.get("tensor_complex", ()):
            a, b = ("C", entry["left"]), ("C", entry["right"])
            dec = _dec_signature(entry, colors, "C")
            sigs[a].append(("t", colors[b], dec))
            sigs[b].append(("t", colors[a], dec))
        for entry in doc.get("lambda_complex", ()):
            key = ("C", entry["rep"])
            sigs[key].append(("l", entry["p"], _dec_signature(entry, colors, "C")))
        for c in doc.get("complexes", ()):
            key = ("C", c["name"])
            sigs[key].append(("link", colors[("R", c["link"]["real"])]))
            sigs[("R", c["link"]["real"])].append(("linked", colors[key]))
        for key in sigs:
            sigs[key] = tuple(sorted(map(repr, sigs[key])))
        ranked = sorted(set(sigs.values()))
        new = {key: ranked.index(sig) for key, sig in sigs.items()}
        if len(set(new.values())) == len(set(colors.values())):
            return new
        colors = {key: (colors[key], new[key]) for key in colors}


def _rename(doc, mapping_r, mapping_c):
    def rn(name):
        return mapping_r[name]

    def cn(name):
        return mapping_c[name]

    def dec(entry, name_fn):
        return {"decomp": sorted(({"rep": name_fn(d["rep"]), "mult": d["mult"]}
                                  for d in entry["decomp"]),
                                 key=lambda d: d["rep"]),
                "trivial_mult": entry.get("trivial_mult", 0)}

    out = {"reals": sorted(({"name": rn(r["name"]), "dim": r["dim"],
                             "type": r["type"],
                             **({"trivial": True} if r.get("trivial") else {})}
                            for r in doc["reals"]), key=lambda r: r["name"]),
           "complexes": sorted(({"name": cn(c["name"]), "dim": c["dim"],
                                 "link": {"kind": c["link"]["kind"],
                                          "real": rn(c["link"]["real"])}}
                                for c in doc.get("complexes", ())),
                               key=lambda c: c["name"])}
    tr = []
    for e in doc.get("tensor_real", ()):
        a, b = sorted((rn(e["left"]), rn(e["right"])))
        tr.append({"left": a, "right": b, **dec(e, rn)})
    out["tensor_real"] = sorted(tr, key=lambda e: (e["left"], e["right"]))
    out["lambda_real"] = sorted(({"rep": rn(e["rep"]), "p": e["p"], **dec(e, rn)}
                                 for e in doc.get("lambda_real", ())),
                                key=lambda e: (e["rep"], e["p"]))
    tc = []
    for e in doc.get("tensor_complex", ()):
        a, b = sorted((cn(e["left"]), cn(e["right"])))
        tc.append({"left": a, "right": b, **dec(e, cn)})
    out["tensor_complex"] = sorted(tc, key=lambda e: (e["left"], e["right"]))
    out["lambda_complex"] = sorted(({"rep": cn(e["rep"]), "p": e["p"], **dec(e, cn)}
                                    for e in doc.get("lambda_complex", ())),
                                   key=lambda e: (e["rep"], e["p"]))
    blocks = []
    for blk in doc.get("restrictions", ()):
        forms = {rn(nm): sorted(rows) for nm, rows in blk["forms"].items()}
        blocks.append({"rank": blk["rank"], "forms": forms})
    if blocks:
        out["restrictions"] = sorted(blocks, key=lambda b: json.dumps(b, sort_keys=True))
    return out


def canonicalize(doc: dict) -> dict:
    """Rename reps canonically; ties broken by smallest serialization."""
    colors = _refine(doc, _initial_colors(doc))
    groups: dict = {}
    for key, color in colors.items():
        groups.setdefault((key[0], color), []).append(key[1])
    for members in groups.values():
        members.sort()
    total = 1
    for members in groups.values():
        for k in range(2, len(members) + 1):
            total *= k
        if total > 5040:
            raise ValueError("too much symmetry to canonicalize by enumeration")

    group_keys = sorted(groups, key=repr)
    best = None
    best_text = None

    def assign(gi, mapping_r, mapping_c, counters):
        nonlocal best, best_text
        if gi == len(group_keys):
            candidate = _rename(doc, mapping_r, mapping_c)
            text = json.dumps(candidate, sort_keys=True)
            if best_text is None or text < best_text:
                best, best_text = candidate, text
            return
        kind, color = group_keys[gi]
        members = groups[group_keys[gi]]
        for perm in permutations(members):
            mr, mc = dict(mapping_r), dict(mapping_c)
            c2 = dict(counters)
            for nm in perm:
                if kind == "R":
                    c2["R"] += 1
                    mr[nm] = "R%02d" % c2["R"]
                else:
                    c2["C"] += 1
                    mc[nm] = "C%02d" % c2["C"]
            assign(gi + 1, mr, mc, c2)

    assign(0, {}, {}, {"R": 0, "C": 0})
    return best


def canonical_text(doc: dict) -> str:
    return json.dumps(canonicalize(doc), indent=1, sort_keys=True) + "\n"
