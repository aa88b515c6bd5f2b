"""JSON file formats for operators, pure vectors, and certificates.

Operators serialize as ``{"dim": n, "factor_dims": [...], "re": [...],
"im": [...]}`` with row-major flattening; vectors drop the ``dim`` key.
Floats pass through Python's shortest round-trip repr, so writing and
re-reading reproduces every double bit-exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .operators import ComplexOperator, DensityOperator, HermitianOperator, PureVector


def operator_to_dict(op, factor_dims=None) -> dict:
    m = np.asarray(getattr(op, "matrix", op), dtype=np.complex128)
    dims = factor_dims if factor_dims is not None else getattr(op, "factor_dims", None)
    out = {"dim": int(m.shape[0])}
    if dims is not None:
        out["factor_dims"] = [int(d) for d in dims]
    out["re"] = [float(x) for x in m.real.ravel()]
    out["im"] = [float(x) for x in m.imag.ravel()]
    return out


def _matrix_from_dict(data: dict) -> np.ndarray:
    dim = int(data["dim"])
    re = np.asarray(data["re"], dtype=np.float64)
    im = np.asarray(data["im"], dtype=np.float64)
    if re.size != dim * dim or im.size != dim * dim:
        raise ValueError(f"operator arrays must have length {dim * dim}")
    return (re + 1j * im).reshape(dim, dim)


def operator_from_dict(data: dict) -> ComplexOperator:
    return ComplexOperator(_matrix_from_dict(data))


def hermitian_from_dict(data: dict) -> HermitianOperator:
    return HermitianOperator(_matrix_from_dict(data))


def density_from_dict(data: dict) -> DensityOperator:
    dims = data.get("factor_dims")
    return DensityOperator(_matrix_from_dict(data), factor_dims=tuple(dims) if dims else ())


def vector_to_dict(vec: PureVector) -> dict:
    return {
        "factor_dims": [int(d) for d in vec.factor_dims],
        "re": [float(x) for x in vec.amplitudes.real],
        "im": [float(x) for x in vec.amplitudes.imag],
    }


def vector_from_dict(data: dict) -> PureVector:
    re = np.asarray(data["re"], dtype=np.float64)
    im = np.asarray(data["im"], dtype=np.float64)
    return PureVector(re + 1j * im, factor_dims=tuple(data["factor_dims"]))


def dump_json(data: dict, path) -> None:
    Path(path).write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")


def load_json(path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def save_density(path, state: DensityOperator) -> None:
    dump_json(operator_to_dict(state), path)


def load_density(path) -> DensityOperator:
    return density_from_dict(load_json(path))


def save_vector(path, vec: PureVector) -> None:
    dump_json(vector_to_dict(vec), path)


def load_vector(path) -> PureVector:
    return vector_from_dict(load_json(path))
