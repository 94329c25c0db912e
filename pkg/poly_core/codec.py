"""
JSON wire format for matrix polynomials:

    {"m": 2, "n": 3, "grade": 1, "coeffs": [A_0, A_1]}

where every A_i is a list of m rows, each a list of n [re, im] pairs, ascending power.
"""

import json
from pathlib import Path
from typing import Any, Union

import numpy as np

from poly_core.polynomial import MatrixPolynomial
from utils_ops.errors import HypothesisError


def polynomial_to_dict(P: MatrixPolynomial) -> dict[str, Any]:
    return {
        "m": P.m,
        "n": P.n,
        "grade": P.grade,
        "coeffs": [
            [[[float(z.real), float(z.imag)] for z in row] for row in block]
            for block in P.coeffs
        ],
    }


def polynomial_from_dict(payload: dict[str, Any]) -> MatrixPolynomial:
    """
    Inverse of `polynomial_to_dict`.

    Raises:
        HypothesisError: On missing fields, a wrong coefficient count or shape,
            or entries that are not [re, im] pairs.
    """
    try:
        m, n, grade = int(payload["m"]), int(payload["n"]), int(payload["grade"])
        raw = np.asarray(payload["coeffs"], dtype=np.float64)
    except (KeyError, TypeError, ValueError) as e:
        raise HypothesisError(f"malformed polynomial payload: {e}") from e
    if raw.shape != (grade + 1, m, n, 2):
        raise HypothesisError(f"coeffs has shape {raw.shape}, expected {(grade + 1, m, n, 2)}")
    return MatrixPolynomial(m, n, grade, raw[..., 0] + 1j * raw[..., 1])


def dumps(P: MatrixPolynomial) -> str:
    return json.dumps(polynomial_to_dict(P))


def loads(text: str) -> MatrixPolynomial:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise HypothesisError(f"polynomial file is not valid JSON: {e}") from e
    if not isinstance(payload, dict):
        raise HypothesisError("polynomial file must hold a JSON object")
    return polynomial_from_dict(payload)


def load(path: Union[str, Path]) -> MatrixPolynomial:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise HypothesisError(f"cannot read polynomial file: {e}") from e
    return loads(text)


def dump(P: MatrixPolynomial, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(P))
