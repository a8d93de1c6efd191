"""Extract repdata documents for swcohom from a computer-algebra system."""

from .canonical import canonical_text, canonicalize
from .derive import DeriveError, Extraction, extract_document
from .gapdriver import gap_available, record_transcript
from .transcript import Transcript, parse_transcript

__version__ = "0.1.0"
