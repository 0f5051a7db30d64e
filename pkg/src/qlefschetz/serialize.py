"""
Canonical JSON interchange for fibration data.

One wire format for everything: a Laurent polynomial is a sorted array of
[exponent, coefficient] pairs with coefficients as decimal strings (safe
for readers limited to 64-bit integers), a matrix is a row-major nested
array of those with explicit "rows"/"cols" fields, and a fibration file is
an object {"n": ..., "m": ..., "A": ...} or {"n": ..., "m": ..., "B": ...}
with exactly one of the two matrices present ("A" the Seifert matrix, "B"
the intersection matrix) and an optional list of basis labels. Canonical
dumps sort keys and use a fixed layout, so identical data gives identical
bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .laurent import LaurentPoly
from .lefschetz import LefschetzAlgebra
from .matrix import KClass, LaurentMatrix


class FileFormatError(ValueError):
    """Malformed interchange data; the message names the offending field."""


def poly_to_obj(p: LaurentPoly) -> list[list[Any]]:
    return p.to_pairs()


def poly_from_obj(obj: Any, where: str = "polynomial") -> LaurentPoly:
    if not isinstance(obj, list):
        raise FileFormatError(f"{where}: expected an array of [exponent, coefficient]")
    try:
        return LaurentPoly.from_pairs(obj)
    except (ValueError, TypeError) as exc:
        raise FileFormatError(f"{where}: {exc}") from exc


def matrix_to_obj(m: LaurentMatrix) -> dict[str, Any]:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[poly_to_obj(p) for p in m.row(i)] for i in range(m.rows)],
    }


def matrix_from_obj(obj: Any, where: str = "matrix") -> LaurentMatrix:
    if not isinstance(obj, dict):
        raise FileFormatError(f"{where}: expected an object with rows/cols/entries")
    for field in ("rows", "cols", "entries"):
        if field not in obj:
            raise FileFormatError(f"{where}.{field}: missing")
    rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
        raise FileFormatError(f"{where}: rows/cols must be nonnegative integers")
    if not isinstance(entries, list) or len(entries) != rows:
        raise FileFormatError(f"{where}.entries: expected {rows} rows")
    parsed: list[list[LaurentPoly]] = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise FileFormatError(f"{where}.entries[{i}]: expected {cols} columns")
        parsed.append(
            [poly_from_obj(cell, f"{where}.entries[{i}][{j}]") for j, cell in enumerate(row)]
        )
    if rows == 0:
        return LaurentMatrix(0, cols, ())
    return LaurentMatrix.from_rows(parsed)


def kclass_to_obj(k: KClass) -> list[list[Any]]:
    return [poly_to_obj(c) for c in k.coords]


def kclass_from_obj(obj: Any, where: str = "class") -> KClass:
    if not isinstance(obj, list):
        raise FileFormatError(f"{where}: expected an array of polynomials")
    return KClass([poly_from_obj(c, f"{where}[{i}]") for i, c in enumerate(obj)])


def fibration_to_obj(
    alg: LefschetzAlgebra, labels: list[str] | None = None
) -> dict[str, Any]:
    """Canonical file form; always records the intersection matrix."""
    obj: dict[str, Any] = {
        "n": alg.dim,
        "m": alg.size,
        "B": matrix_to_obj(alg.intersection),
    }
    if labels is not None:
        obj["labels"] = list(labels)
    return obj


def fibration_from_obj(
    obj: Any, n_override: int | None = None
) -> tuple[LefschetzAlgebra, list[str] | None]:
    """
    Parse and validate a fibration file object. Either matrix key is
    accepted; validation of the intersection relation runs on load and
    surfaces as ConsistencyError.
    """
    if not isinstance(obj, dict):
        raise FileFormatError("fibration: expected a JSON object")
    if "n" not in obj or not isinstance(obj["n"], int):
        raise FileFormatError("fibration.n: missing or not an integer")
    if "m" not in obj or not isinstance(obj["m"], int) or obj["m"] < 0:
        raise FileFormatError("fibration.m: missing or not a nonnegative integer")
    has_a, has_b = "A" in obj, "B" in obj
    if has_a == has_b:
        raise FileFormatError("fibration: exactly one of 'A' and 'B' must be present")
    n = obj["n"] if n_override is None else n_override
    m = obj["m"]
    key = "A" if has_a else "B"
    matrix = matrix_from_obj(obj[key], f"fibration.{key}")
    if matrix.rows != m or matrix.cols != m:
        raise FileFormatError(
            f"fibration.{key}: shape {matrix.rows}x{matrix.cols} does not match m = {m}"
        )
    labels = obj.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise FileFormatError("fibration.labels: expected an array of strings")
        if len(labels) != m:
            raise FileFormatError(f"fibration.labels: expected {m} entries")
    if has_a:
        alg = LefschetzAlgebra.from_seifert(n, matrix)
    else:
        alg = LefschetzAlgebra.from_intersection(n, matrix)
    return alg, labels


def class_specs_from_obj(obj: Any) -> tuple[list[KClass] | None, list[Any]]:
    """
    Parse a classes file: an optional "generators" array of classes, and a
    "classes" array whose entries are either {"vector": ...} or
    {"word": "t2 t1^-1", "seed": k} with a 1-based generator index.
    Word entries are returned as (word_text, seed_index) for the caller to
    resolve against the fibre.
    """
    if not isinstance(obj, dict):
        raise FileFormatError("classes: expected a JSON object")
    generators = None
    if "generators" in obj:
        if not isinstance(obj["generators"], list):
            raise FileFormatError("classes.generators: expected an array")
        generators = [
            kclass_from_obj(g, f"classes.generators[{i}]")
            for i, g in enumerate(obj["generators"])
        ]
    entries = obj.get("classes", [])
    if not isinstance(entries, list):
        raise FileFormatError("classes.classes: expected an array")
    specs: list[Any] = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise FileFormatError(f"classes.classes[{i}]: expected an object")
        if "vector" in entry:
            specs.append(kclass_from_obj(entry["vector"], f"classes.classes[{i}].vector"))
        elif "word" in entry:
            if not isinstance(entry["word"], str):
                raise FileFormatError(f"classes.classes[{i}].word: expected a string")
            seed = entry.get("seed")
            if not isinstance(seed, int) or seed < 1:
                raise FileFormatError(
                    f"classes.classes[{i}].seed: expected a 1-based generator index"
                )
            specs.append((entry["word"], seed - 1))
        else:
            raise FileFormatError(
                f"classes.classes[{i}]: needs either 'vector' or 'word'"
            )
    return generators, specs


def classes_to_obj(
    generators: list[KClass] | None, classes: list[KClass]
) -> dict[str, Any]:
    obj: dict[str, Any] = {"classes": [{"vector": kclass_to_obj(c)} for c in classes]}
    if generators is not None:
        obj["generators"] = [kclass_to_obj(g) for g in generators]
    return obj


def dumps_canonical(obj: Any) -> str:
    """Deterministic rendering: sorted keys, fixed separators, newline end."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
