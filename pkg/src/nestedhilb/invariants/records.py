"""JSON result records."""
from __future__ import annotations

import json
from fractions import Fraction

from ..algebra.laurent import Laurent
from ..algebra.series import TruncatedSeries
from .integrals import CheckResult
from .modes import Mode

SCHEMA = "nestedhilb.result/1"


def encode_value(v):
    if isinstance(v, TruncatedSeries):
        return v.to_json()
    if isinstance(v, (Fraction, Laurent)):
        return str(v)
    if isinstance(v, Mode):
        return v.to_json()
    if isinstance(v, CheckResult):
        return v.to_json()
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, dict):
        return {str(k): encode_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    return v


def make_record(operation: str, inputs: dict, mode=None, seed=None, value=None,
                series=None, checks=()) -> dict:
    rec = {"schema": SCHEMA, "operation": operation, "inputs": encode_value(inputs),
           "mode": encode_value(mode) if mode is not None else None, "seed": seed}
    if series is not None:
        rec["series"] = encode_value(series)
    if value is not None:
        rec["value"] = encode_value(value)
    rec["checks"] = [encode_value(c) for c in checks]
    return rec


def dumps(record) -> str:
    return json.dumps(record, indent=2, sort_keys=True)
