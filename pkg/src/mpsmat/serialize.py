"""Shared file formats: JSON matrices, parameters, designs; CSV export.

Matrix JSON (one object per file, exactly one kind):

  complex     {"n": N, "kind": "complex", "entries": [[[re, im], ...], ...]}
  real-exact  {"n": N, "kind": "real-exact", "d": "num/den",
               "q_entries": [["num/den", ...], ...]}

For the real-exact kind, ``q_entries`` is the scaled matrix
Q = sqrt(d^2 + n - 1) * S with rational entries; parsing and serializing it
round-trips bit for bit.  Hadamard/conference matrices share the real-exact
kind with the ``d`` field absent (a plain exact integer matrix).

Parameter JSON: {"n": N, "m": M, "T": [[[re, im], ...]] or null,
"S_h": [[[re, im], ...]] or null, "P": [one-based images]}; ``S_h`` null
marks a Hermitian-unitary parameter set.

Design JSON: {"v": V, "k": K, "lambda": L, "incidence": [[0/1, ...], ...]}.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

import numpy as np

from .designs import SymmetricDesign
from .exact import IntegerMps, Transform
from .parametrize import HermitianUnitaryParam, UnitaryParam

__all__ = [
    "FormatError",
    "matrix_to_obj",
    "matrix_from_obj",
    "dumps_matrix",
    "loads_matrix",
    "matrix_to_csv",
    "param_to_obj",
    "param_from_obj",
    "design_to_obj",
    "design_from_obj",
    "transform_to_obj",
]

MatrixLike = Union[np.ndarray, IntegerMps]


class FormatError(ValueError):
    """Malformed matrix/parameter/design document."""


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _parse_frac(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {s!r}") from exc


def matrix_to_obj(matrix: MatrixLike) -> dict:
    """JSON-ready dict for a matrix value.

    IntegerMps and exact integer arrays serialize as kind "real-exact"
    (with/without the d field); everything else as kind "complex".
    """
    if isinstance(matrix, IntegerMps):
        q = matrix.two_q
        rows = [[_frac_str(Fraction(int(x), 2)) for x in row] for row in q]
        return {
            "n": matrix.n,
            "kind": "real-exact",
            "d": _frac_str(matrix.d),
            "q_entries": rows,
        }
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise FormatError("matrix must be square")
    n = a.shape[0]
    if not np.iscomplexobj(a) and np.issubdtype(a.dtype, np.integer):
        rows = [[_frac_str(Fraction(int(x))) for x in row] for row in a]
        return {"n": n, "kind": "real-exact", "q_entries": rows}
    c = a.astype(complex)
    entries = [[[float(x.real), float(x.imag)] for x in row] for row in c]
    return {"n": n, "kind": "complex", "entries": entries}


def matrix_from_obj(obj: dict) -> MatrixLike:
    """Parse the shared matrix format; inverse of matrix_to_obj.

    Returns an IntegerMps for real-exact documents carrying d, an int64
    array for real-exact documents without d, and a complex array otherwise.
    """
    if not isinstance(obj, dict):
        raise FormatError("matrix document must be a JSON object")
    kind = obj.get("kind")
    if kind not in ("complex", "real-exact"):
        raise FormatError(f"unknown matrix kind {kind!r}")
    n = obj.get("n")
    if not isinstance(n, int) or n < 1:
        raise FormatError("field n must be a positive integer")
    if kind == "complex":
        if "q_entries" in obj or "d" in obj:
            raise FormatError("complex documents must not carry exact fields")
        entries = obj.get("entries")
        if entries is None:
            raise FormatError("complex documents need an entries field")
        a = np.array([[complex(re, im) for re, im in row] for row in entries])
        if a.shape != (n, n):
            raise FormatError(f"entries must be {n} x {n}")
        return a
    if "entries" in obj:
        raise FormatError("real-exact documents must not carry complex entries")
    rows = obj.get("q_entries")
    if rows is None:
        raise FormatError("real-exact documents need a q_entries field")
    fracs = [[_parse_frac(x) for x in row] for row in rows]
    if len(fracs) != n or any(len(r) != n for r in fracs):
        raise FormatError(f"q_entries must be {n} x {n}")
    if "d" in obj:
        d = _parse_frac(obj["d"])
        two_q = np.empty((n, n), dtype=np.int64)
        for i, row in enumerate(fracs):
            for j, f in enumerate(row):
                doubled = 2 * f
                if doubled.denominator != 1:
                    raise FormatError("exact entries must have denominator 1 or 2")
                two_q[i, j] = int(doubled)
        return IntegerMps(d=d, two_q=two_q)
    out = np.empty((n, n), dtype=np.int64)
    for i, row in enumerate(fracs):
        for j, f in enumerate(row):
            if f.denominator != 1:
                raise FormatError("plain exact matrices must have integer entries")
            out[i, j] = int(f)
    return out


def dumps_matrix(matrix: MatrixLike, indent: int | None = None) -> str:
    return json.dumps(matrix_to_obj(matrix), indent=indent)


def loads_matrix(text: str) -> MatrixLike:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    return matrix_from_obj(obj)


def _complex_csv(x: complex) -> str:
    re, im = float(x.real), float(x.imag)
    sign = "+" if im >= 0 else "-"
    return f"{re!r}{sign}{abs(im)!r}i"


def matrix_to_csv(matrix: MatrixLike) -> str:
    """CSV rows: complex entries as "re+imi" strings, exact ones as rationals."""
    if isinstance(matrix, IntegerMps):
        q = matrix.two_q
        lines = [
            ",".join(_frac_str(Fraction(int(x), 2)) for x in row) for row in q
        ]
        return "\n".join(lines) + "\n"
    a = np.asarray(matrix)
    if not np.iscomplexobj(a) and np.issubdtype(a.dtype, np.integer):
        lines = [",".join(str(int(x)) for x in row) for row in a]
        return "\n".join(lines) + "\n"
    c = a.astype(complex)
    lines = [",".join(_complex_csv(x) for x in row) for row in c]
    return "\n".join(lines) + "\n"


def _complex_rows_to_obj(a: np.ndarray) -> list:
    return [[[float(x.real), float(x.imag)] for x in row] for row in np.atleast_2d(a)]


def _complex_rows_from_obj(rows, shape) -> np.ndarray:
    a = np.array([[complex(re, im) for re, im in row] for row in rows])
    if a.shape != shape:
        raise FormatError(f"block must have shape {shape}")
    return a


def param_to_obj(param: HermitianUnitaryParam | UnitaryParam) -> dict:
    """Parameter JSON; S_h is null for Hermitian-unitary parameter sets."""
    hermitian = isinstance(param, HermitianUnitaryParam)
    t = param.t
    obj = {
        "n": param.n,
        "m": param.m,
        "T": None if t is None else _complex_rows_to_obj(t),
        "S_h": None if hermitian else _complex_rows_to_obj(param.s_h),
        "P": [p + 1 for p in param.perm],
    }
    return obj


def param_from_obj(obj: dict) -> HermitianUnitaryParam | UnitaryParam:
    if not isinstance(obj, dict):
        raise FormatError("parameter document must be a JSON object")
    try:
        n = int(obj["n"])
        m = int(obj["m"])
        perm = tuple(int(x) - 1 for x in obj["P"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad parameter document: {exc}") from exc
    t_obj = obj.get("T")
    s_obj = obj.get("S_h")
    t = None if t_obj is None else _complex_rows_from_obj(t_obj, (m, n - m))
    if s_obj is None:
        if t is None:
            raise FormatError("Hermitian parameters need T")
        return HermitianUnitaryParam(n=n, m=m, t=t, perm=perm)
    s_h = _complex_rows_from_obj(s_obj, (m, m))
    return UnitaryParam(n=n, m=m, t=t, s_h=s_h, perm=perm)


def design_to_obj(design: SymmetricDesign) -> dict:
    return {
        "v": design.v,
        "k": design.k,
        "lambda": design.lam,
        "incidence": design.incidence.astype(int).tolist(),
    }


def design_from_obj(obj: dict) -> SymmetricDesign:
    if not isinstance(obj, dict):
        raise FormatError("design document must be a JSON object")
    try:
        return SymmetricDesign(
            v=int(obj["v"]),
            k=int(obj["k"]),
            lam=int(obj["lambda"]),
            incidence=np.asarray(obj["incidence"], dtype=np.int64),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad design document: {exc}") from exc


def transform_to_obj(t: Transform) -> dict:
    """Equivalence witness as JSON (one-based permutation images)."""
    return {
        "P": [p + 1 for p in t.perm],
        "signs": list(t.signs),
        "global": t.global_sign,
    }
