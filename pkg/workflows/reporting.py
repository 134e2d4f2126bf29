"""
Report writers - JSON documents and flat CSV tables.
"""
import io
import json
import sys
from typing import Any, Dict, List

import numpy as np
import pandas as pd

from utils.errors import IoFailure


def _json_default(value: Any):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"Not JSON serializable: {type(value).__name__}")


def to_json(document: Any) -> str:
    return json.dumps(document, indent=2, default=_json_default)


def to_csv(rows: List[Dict[str, Any]], columns: List[str] = None) -> str:
    buffer = io.StringIO()
    pd.DataFrame(rows, columns=columns).to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def write_text(text: str, path: str = "-"):
    """Write to a file, or stdout for '-'."""
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    except OSError as e:
        raise IoFailure(f"Cannot write report {path}: {e}") from e
