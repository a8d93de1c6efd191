"""Drive a live GAP session to record a transcript for a small-group library
entry.  GAP prints a single JSON object; everything downstream is pure Python.
"""

from __future__ import annotations

import json
import shutil
import subprocess

from .transcript import Transcript, parse_transcript

GAP_SCRIPT = r"""
G := SmallGroup(%(order)d, %(index)d);;
tbl := CharacterTable(G);;
n := Exponent(G);;
irr := Irr(tbl);;
maxdim := Maximum(List(irr, chi -> chi[1]));;
maxreal := 2 * maxdim;;
ccs := ConjugacyClasses(G);;

pm := rec();;
pm.("-1") := List(PowerMap(tbl, -1), x -> x - 1);;
for k in [2..Maximum(4, maxreal)] do
  pm.(String(k)) := List(PowerMap(tbl, k), x -> x - 1);
od;;

vals := List(irr, chi -> List(chi, v -> CoeffsCyc(v, n)));;

eas := [];;
subs := List(ConjugacyClassesSubgroups(G), Representative);;
cand := Filtered(subs, H -> IsElementaryAbelian(H) and Size(H) > 1);;
for H in cand do
  if not ForAny(cand, K -> Size(K) > Size(H)
                and ContainedConjugates(G, K, H, true) <> fail) then
    gens := IndependentGeneratorsOfAbelianGroup(H);
    r := Length(gens);
    classes := [];
    for mask in [0..2^r-1] do
      x := One(G);
      for b in [1..r] do
        if IsOddInt(QuoInt(mask, 2^(b-1))) then x := x * gens[b]; fi;
      od;
      Add(classes, PositionProperty(ccs, c -> x in c) - 1);
    od;
    Add(eas, rec(rank := r, classes := classes));
  fi;
od;;

out := rec(order := Size(G), index := %(index)d, exponent := n,
           class_sizes := SizesConjugacyClasses(tbl),
           power_maps := pm, characters := vals,
           elementary_abelians := eas);;
Print(GapToJsonString(out), "\n");
QUIT;
"""


def gap_available(gap: str = "gap") -> bool:
    return shutil.which(gap) is not None


def record_transcript(order: int, index: int, gap: str = "gap",
                      timeout: int = 300) -> Transcript:
    """Run GAP on the small-group library entry and parse the transcript."""
    if not gap_available(gap):
        raise RuntimeError(
            "the GAP system is not on PATH; install GAP or replay a "
            "recorded transcript with --transcript")
    script = GAP_SCRIPT % {"order": order, "index": index}
    proc = subprocess.run([gap, "-q", "--norepl", "-A"], input=script,
                          capture_output=True, text=True, timeout=timeout)
    if proc.returncode != 0:
        raise RuntimeError("GAP failed: %s" % proc.stderr.strip()[-400:])
    for line in proc.stdout.splitlines():
        line = line.strip()
        if line.startswith("{"):
            return parse_transcript(json.loads(line))
    raise RuntimeError("no transcript in the GAP output; is the json "
                       "package available? Output was: %r"
                       % proc.stdout[-400:])
