"""From a CAS transcript to a repdata document.

Endomorphism types come from the Frobenius-Schur indicator, real irreducibles
from the standard complexification/realification grouping, decompositions
from exact character inner products, exterior powers from the power-sum
recursion, and restriction forms from character restrictions to the recorded
elementary abelian subgroups.
"""

from __future__ import annotations

from fractions import Fraction

from . import cyclotomic as cyc
from .transcript import Transcript


class DeriveError(Exception):
    pass


class Extraction:
    def __init__(self, t: Transcript):
        self.t = t
        self.n = t.exponent
        nc = t.n_classes
        self.dims = [cyc.as_integer(t.chi(i, 0), self.n)
                     for i in range(len(t.characters))]
        self.trivial = None
        for i, row in enumerate(t.characters):
            if all(cyc.equal(v, cyc.rational(1), self.n) for v in row):
                self.trivial = i
                break
        if self.trivial is None:
            raise DeriveError("no trivial character in the transcript")
        self.fs = [self._frobenius_schur(i) for i in range(len(t.characters))]
        self.conj = [self._conjugate_of(i) for i in range(len(t.characters))]
        self._build_reals()

    # -- character arithmetic ------------------------------------------------

    def inner(self, theta, psi) -> int:
        """<theta, psi> as a nonnegative integer (irreducible psi)."""
        t = self.t
        acc: dict = {}
        for c in range(t.n_classes):
            term = cyc.mul(theta[c], cyc.conj(psi[c], self.n), self.n)
            acc = cyc.add(acc, cyc.scale(term, t.class_sizes[c]))
        val = cyc.as_integer(cyc.scale(acc, Fraction(1, t.order)), self.n)
        if val < 0:
            raise DeriveError("negative inner product; transcript inconsistent")
        return val

    def _frobenius_schur(self, i: int) -> int:
        t = self.t
        acc: dict = {}
        for c in range(t.n_classes):
            sq = t.power_class(c, 2)
            acc = cyc.add(acc, cyc.scale(t.chi(i, sq), t.class_sizes[c]))
        nu = cyc.as_integer(cyc.scale(acc, Fraction(1, t.order)), self.n)
        if nu not in (-1, 0, 1):
            raise DeriveError("Frobenius-Schur indicator out of range")
        return nu

    def _conjugate_of(self, i: int) -> int:
        t = self.t
        target = [cyc.conj(v, self.n) for v in t.characters[i]]
        for j in range(len(t.characters)):
            if all(cyc.equal(t.chi(j, c), target[c], self.n)
                   for c in range(t.n_classes)):
                return j
        raise DeriveError("conjugate character missing from the transcript")

    def char_product(self, a, b):
        return [cyc.mul(x, y, self.n) for x, y in zip(a, b)]

    def char_sum(self, a, b):
        return [cyc.add(x, y) for x, y in zip(a, b)]

    def lambda_power(self, theta, p: int):
        """Exterior power by the Newton-style recursion over power sums."""
        t = self.t
        nc = t.n_classes
        lams = [[cyc.rational(1)] * nc]
        for q in range(1, p + 1):
            acc = [dict() for _ in range(nc)]
            for k in range(1, q + 1):
                sign = 1 if k % 2 == 1 else -1
                for c in range(nc):
                    term = cyc.mul(theta[t.power_class(c, k)],
                                   lams[q - k][c], self.n)
                    acc[c] = cyc.add(acc[c], cyc.scale(term, sign))
            lams.append([cyc.scale(acc[c], Fraction(1, q)) for c in range(nc)])
        return lams[p]

    # -- real irreducibles ------------------------------------------------------

    def _build_reals(self):
        t = self.t
        self.real_order: list = []   # real names in declaration order
        self.real_char: dict = {}
        self.real_dim: dict = {}
        self.real_type: dict = {}
        self.real_of_complex: dict = {}
        seen = set()
        for i in range(len(t.characters)):
            if i == self.trivial or i in seen:
                continue
            seen.add(i)
            if self.fs[i] == 1:
                name = "r%d" % self._label(i)
                self.real_char[name] = list(t.characters[i])
                self.real_dim[name] = self.dims[i]
                self.real_type[name] = "R"
                self.real_of_complex[i] = name
            elif self.fs[i] == 0:
                j = self.conj[i]
                seen.add(j)
                name = "r%d" % min(self._label(i), self._label(j))
                self.real_char[name] = self.char_sum(t.characters[i],
                                                     t.characters[j])
                self.real_dim[name] = 2 * self.dims[i]
                self.real_type[name] = "C"
                self.real_of_complex[i] = name
                self.real_of_complex[j] = name
            else:
                name = "r%d" % self._label(i)
                self.real_char[name] = [cyc.scale(v, 2) for v in t.characters[i]]
                self.real_dim[name] = 2 * self.dims[i]
                self.real_type[name] = "H"
                self.real_of_complex[i] = name
            self.real_order.append(name)
        # dedupe realification pairs added twice
        self.real_order = list(dict.fromkeys(self.real_order))

    def _label(self, i: int) -> int:
        """1-based position among the nontrivial irreducibles."""
        return i + 1 if i < self.trivial else i

    # -- decompositions -----------------------------------------------------------

    def decompose_complex(self, theta) -> dict:
        out = {}
        for i in range(len(self.t.characters)):
            m = self.inner(theta, self.t.characters[i])
            if m:
                out[i] = m
        recon = [dict() for _ in range(self.t.n_classes)]
        for i, m in out.items():
            for c in range(self.t.n_classes):
                recon[c] = cyc.add(recon[c], cyc.scale(self.t.chi(i, c), m))
        for c in range(self.t.n_classes):
            if not cyc.equal(recon[c], theta[c], self.n):
                raise DeriveError("complex decomposition failed to reconstruct")
        return out

    def decompose_real(self, theta):
        cm = self.decompose_complex(theta)
        triv = cm.pop(self.trivial, 0)
        parts: dict = {}
        while cm:
            i = min(cm)
            m = cm.pop(i)
            name = self.real_of_complex[i]
            if self.fs[i] == 1:
                parts[name] = parts.get(name, 0) + m
            elif self.fs[i] == 0:
                j = self.conj[i]
                if cm.pop(j, None) != m:
                    raise DeriveError("conjugate multiplicities differ")
                parts[name] = parts.get(name, 0) + m
            else:
                if m % 2:
                    raise DeriveError("odd multiplicity for quaternion type")
                parts[name] = parts.get(name, 0) + m // 2
        return parts, triv

    # -- the document -----------------------------------------------------------------

    def document(self) -> dict:
        t = self.t
        doc = {"reals": [{"name": "1", "dim": 1, "type": "R", "trivial": True}],
               "complexes": [], "tensor_real": [], "lambda_real": [],
               "tensor_complex": [], "lambda_complex": []}
        for name in self.real_order:
            doc["reals"].append({"name": name, "dim": self.real_dim[name],
                                 "type": self.real_type[name]})
        cnames = {}
        for i in range(len(t.characters)):
            if i == self.trivial:
                continue
            cname = "rho%d" % self._label(i)
            cnames[i] = cname
            kind = "complexification" if self.fs[i] == 1 else "realification"
            doc["complexes"].append({
                "name": cname, "dim": self.dims[i],
                "link": {"kind": kind, "real": self.real_of_complex[i]}})

        def dec_json(pair):
            parts, triv = pair
            return {"decomp": [{"rep": nm, "mult": m}
                               for nm, m in sorted(parts.items())],
                    "trivial_mult": triv}

        for a_i, a in enumerate(self.real_order):
            for b in self.real_order[a_i:]:
                theta = self.char_product(self.real_char[a], self.real_char[b])
                doc["tensor_real"].append(
                    {"left": a, "right": b, **dec_json(self.decompose_real(theta))})
        for a in self.real_order:
            for p in range(1, self.real_dim[a] + 1):
                theta = self.lambda_power(self.real_char[a], p)
                doc["lambda_real"].append(
                    {"rep": a, "p": p, **dec_json(self.decompose_real(theta))})

        def cdec_json(theta):
            cm = self.decompose_complex(theta)
            triv = cm.pop(self.trivial, 0)
            return {"decomp": [{"rep": cnames[i], "mult": m}
                               for i, m in sorted(cm.items())],
                    "trivial_mult": triv}

        nontriv = [i for i in range(len(t.characters)) if i != self.trivial]
        for ai, i in enumerate(nontriv):
            for j in nontriv[ai:]:
                theta = self.char_product(t.characters[i], t.characters[j])
                doc["tensor_complex"].append(
                    {"left": cnames[i], "right": cnames[j], **cdec_json(theta)})
        for i in nontriv:
            for p in range(1, self.dims[i] + 1):
                theta = self.lambda_power(t.characters[i], p)
                doc["lambda_complex"].append(
                    {"rep": cnames[i], "p": p, **cdec_json(theta)})

        blocks = []
        for block in t.elementary_abelians:
            rank = block["rank"]
            classes = block["classes"]
            forms = {}
            for name in self.real_order:
                theta = self.real_char[name]
                rows = []
                for v in range(1 << rank):
                    acc: dict = {}
                    for mask, c in enumerate(classes):
                        sign = 1 if bin(mask & v).count("1") % 2 == 0 else -1
                        acc = cyc.add(acc, cyc.scale(theta[c], sign))
                    mult = cyc.as_integer(cyc.scale(acc, Fraction(1, 1 << rank)),
                                          self.n)
                    if mult < 0:
                        raise DeriveError("negative restriction multiplicity")
                    rows += [[(v >> b) & 1 for b in range(rank)]] * mult
                if len(rows) != self.real_dim[name]:
                    raise DeriveError("restriction of %s has wrong dimension"
                                      % name)
                forms[name] = rows
            blocks.append({"rank": rank, "forms": forms})
        if blocks:
            doc["restrictions"] = blocks
        return doc


def extract_document(t: Transcript) -> dict:
    return Extraction(t).document()
