"""stabenum: enumerate the stable extensions of abstract argumentation frameworks."""

from . import label_enum, set_enum
from .formats import (
    MissingSeparator,
    ParseDiagnostic,
    ParseError,
    format_extension,
    parse_apx,
    parse_tgf,
    write_apx,
    write_extensions,
    write_tgf,
)
from .framework import Framework, UnknownArgument, build, initial_partition
from .generators import GenSpec, UnknownFamily, family, random_af
from .invariants import InvariantViolation
from .oracle import TooLarge, enumerate_bruteforce, is_stable
from .strategies import STRATEGIES, SearchStats

__version__ = "0.1.0"

__all__ = [
    "Framework",
    "GenSpec",
    "InvariantViolation",
    "MissingSeparator",
    "ParseDiagnostic",
    "ParseError",
    "STRATEGIES",
    "SearchStats",
    "TooLarge",
    "UnknownArgument",
    "UnknownFamily",
    "build",
    "enumerate_bruteforce",
    "family",
    "format_extension",
    "initial_partition",
    "is_stable",
    "label_enum",
    "parse_apx",
    "parse_tgf",
    "random_af",
    "set_enum",
    "write_apx",
    "write_extensions",
    "write_tgf",
]
