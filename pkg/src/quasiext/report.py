"""JSON reports with exact values.

Cyclotomic values become {"conductor", "coords", "str"}; Fractions become
strings; keys are sorted and output is UTF-8 with LF line endings.
"""

import hashlib
import json
from fractions import Fraction

import numpy as np

from .chartab import ClassFunction
from .cyclotomic import Cyclotomic
from .perm import PrimeSet

__all__ = ["decode_exact", "digest", "dumps", "encode"]

SCHEMA_VERSION = 1


def encode(obj):
    """Plain JSON structure for reports."""
    if isinstance(obj, Cyclotomic):
        d = obj.to_json()
        d["str"] = str(obj)
        return d
    if isinstance(obj, ClassFunction):
        return [encode(v) for v in obj.values]
    if isinstance(obj, PrimeSet):
        return sorted(obj.primes)
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(encode(v) for v in obj)
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [encode(v) for v in obj]
    return obj


def decode_exact(obj):
    """Inverse of :func:`encode` for exact values: every {"conductor", "coords"} dict becomes a Cyclotomic."""
    if isinstance(obj, dict):
        if "conductor" in obj and "coords" in obj:
            return Cyclotomic.from_json(obj)
        return {k: decode_exact(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [decode_exact(v) for v in obj]
    return obj


def dumps(report):
    return json.dumps(encode(report), sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def digest(data):
    """sha256 of the canonical JSON of ``data``."""
    text = json.dumps(encode(data), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
