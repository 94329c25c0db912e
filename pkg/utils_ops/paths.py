from pathlib import Path

from typing import Union

def constructPath(basePath: Path, *pathsParts: Union[str, Path]) -> Path:
    """
    Constructs a path by appending path_parts to the base_path.
    """
    return basePath.joinpath(*pathsParts)


def reportPath(out: Union[str, Path], suffix: str) -> Path:
    """
    Resolves the file a report is written to.

    A path without extension is treated as a stem and gets `suffix` appended,
    so `--out runs/sweep` produces `runs/sweep.csv` and `runs/sweep.json`.
    Parent directories are created.

    Args:
        out (Union[str, Path]): The --out value given on the command line.
        suffix (str): The extension, including the dot.

    Returns:
        Path: The resolved file path.
    """
    out = Path(out)
    target = out.with_suffix(suffix)
    target.parent.mkdir(parents=True, exist_ok=True)
    return target
