"""Shortest-roundtrip decimal rendering of floats.

Shared by the state codec, the CSV export, and the frame serializer so
every emitted number is byte-identical across runs and platforms.
"""

import math


def format_float(value: float) -> str:
    """Shortest decimal string that parses back to exactly `value`.

    Python's repr is already shortest-roundtrip; integral values
    additionally drop the redundant '.0' (so 0.0 -> '0', 2.0 -> '2').
    Non-finite values render as 'nan', 'inf', '-inf'.
    """
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    text = repr(float(value))
    if text.endswith(".0"):
        return text[:-2]
    return text
