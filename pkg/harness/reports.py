import json
import sys
from pathlib import Path
from typing import Any, Optional, Union

import pandas as pd

from eigenstruct_numeric.signature import index_list
from generic_model.families import FullRankStructure, GenericStructure
from utils_ops.paths import reportPath


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, default=str) + "\n"


def structures_frame(structures: list[Union[GenericStructure, FullRankStructure]]) -> pd.DataFrame:
    """One row per family: a, right indices, left indices, codim (empty for full rank)."""
    rows = []
    for K in structures:
        codim = K.codim if isinstance(K, GenericStructure) else ""
        rows.append({"a": K.a, "right": index_list(K.right), "left": index_list(K.left), "codim": codim})
    return pd.DataFrame(rows, columns=["a", "right", "left", "codim"])


def emit(text: str, out: Optional[Union[str, Path]] = None, suffix: str = ".json") -> None:
    """Writes to `out` with the given suffix, or to stdout."""
    if out is None:
        sys.stdout.write(text)
        return
    reportPath(out, suffix).write_text(text, encoding="utf-8")
