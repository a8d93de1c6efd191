"""extract_repdata: produce a repdata document for a small-group library entry.

With a live GAP on PATH the group data is computed on the fly; otherwise a
recorded transcript (bundled for the worked examples) can be replayed.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .canonical import canonicalize
from .derive import DeriveError, extract_document
from .gapdriver import record_transcript
from .transcript import parse_transcript

BUNDLED = {(4, 1): "z4.json", (8, 4): "q8.json", (16, 6): "g16_6.json"}


def load_bundled_transcript(order: int, index: int):
    name = BUNDLED.get((order, index))
    if name is None:
        return None
    text = resources.files("casbridge.transcripts").joinpath(name).read_text("utf-8")
    return parse_transcript(json.loads(text))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="extract_repdata",
        description="representation data for swc from a computer-algebra system")
    parser.add_argument("--order", type=int, required=True)
    parser.add_argument("--index", type=int, required=True,
                        help="index in the small-group library")
    parser.add_argument("--transcript", default=None,
                        help="replay a recorded CAS transcript instead of "
                             "driving GAP ('bundled' picks a shipped one)")
    parser.add_argument("--gap", default="gap", help="GAP executable")
    parser.add_argument("--canonical", action="store_true",
                        help="emit the canonical renaming of the document")
    parser.add_argument("--out", default=None)
    args = parser.parse_args(argv)

    if args.order & (args.order - 1):
        sys.stderr.write("warning: order %d is not a power of two; this "
                         "pipeline targets 2-groups\n" % args.order)
    try:
        if args.transcript == "bundled":
            t = load_bundled_transcript(args.order, args.index)
            if t is None:
                sys.stderr.write("no bundled transcript for (%d, %d)\n"
                                 % (args.order, args.index))
                return 3
        elif args.transcript:
            with open(args.transcript, "r", encoding="utf-8") as fh:
                t = parse_transcript(json.load(fh))
            if (t.order, t.index) != (args.order, args.index):
                sys.stderr.write("transcript is for group (%d, %d), not (%d, %d)\n"
                                 % (t.order, t.index, args.order, args.index))
                return 3
        else:
            t = record_transcript(args.order, args.index, args.gap)
    except RuntimeError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write("transcript error: %s\n" % exc)
        return 3

    try:
        doc = extract_document(t)
        if args.canonical:
            doc = canonicalize(doc)
    except DeriveError as exc:
        sys.stderr.write("derivation error (diagnostic dump follows): %s\n" % exc)
        sys.stderr.write("class sizes: %r\n" % (t.class_sizes,))
        return 1
    text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
