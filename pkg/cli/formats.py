"""
Structure files: JSON text with one structure-constant triple per line.

    {
      "name": "sweedler",
      "field": {"conductor": 1},
      "dim": 4,
      "basis": ["1", "x", "g", "gx"],
      "comul": [
        [0, 0, 0, "1"],
        ...
      ],
      "counit": ["1", "0", "1", "0"],
      "mul": [...], "unit": [...], "antipode": [[...], ...]
    }

Scalars are strings ("3/2", "[0,1]@4") so nothing is lost to a JSON float.
"""

import json
import logging
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np

from coalgebra.base import AlgebraSC, Coalgebra
from exactmath.linalg import zeros
from exactmath.scalar import CyclotomicField, Scalar, get_field, parse_scalar
from hopf.base import HopfAlgebra
from utils.exceptions import ParseError, ValidationError

logger = logging.getLogger(__name__)

Structure = Union[Coalgebra, HopfAlgebra]


def json_default(value: Any) -> Any:
    """json.dumps fallback for exact values."""
    if isinstance(value, Scalar):
        return value.to_text()
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (np.integer, np.bool_)):
        return value.item()
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def format_vector(v: np.ndarray, names: List[str]) -> str:
    terms = []
    for value, name in zip(v, names):
        if value == 0:
            continue
        if value == 1:
            terms.append(name)
        elif value == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"({value.to_text()})·{name}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def _triples(constants: np.ndarray) -> List[List[Any]]:
    n = constants.shape[0]
    return [
        [i, j, k, constants[i, j, k].to_text()]
        for i in range(n) for j in range(n) for k in range(n) if constants[i, j, k] != 0
    ]


def dump_structure(obj: Structure, name: Optional[str] = None) -> Dict[str, Any]:
    c = obj.coalgebra if isinstance(obj, HopfAlgebra) else obj
    data: Dict[str, Any] = {
        "name": name or (obj.name if isinstance(obj, HopfAlgebra) else ""),
        "field": {"conductor": c.field.conductor},
        "dim": c.dim,
        "basis": list(c.basis_names),
        "comul": _triples(c.comul),
        "counit": [e.to_text() for e in c.counit],
    }
    if isinstance(obj, HopfAlgebra):
        data["mul"] = _triples(obj.algebra.mul)
        data["unit"] = [e.to_text() for e in obj.algebra.unit]
        if obj.antipode is not None:
            data["antipode"] = [[e.to_text() for e in row] for row in obj.antipode]
    return data


def dumps_structure(obj: Structure, name: Optional[str] = None) -> str:
    data = dump_structure(obj, name)
    lines = ["{"]
    keys = list(data)
    for position, key in enumerate(keys):
        value = data[key]
        comma = "," if position < len(keys) - 1 else ""
        if key in ("comul", "mul", "antipode") and value:
            lines.append(f"  {json.dumps(key)}: [")
            rows = [f"    {json.dumps(row, ensure_ascii=False)}" for row in value]
            lines.append(",\n".join(rows))
            lines.append(f"  ]{comma}")
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value, ensure_ascii=False)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_structure(obj: Structure, path: Union[str, Path], name: Optional[str] = None) -> None:
    Path(path).write_text(dumps_structure(obj, name), encoding="utf-8")
    logger.info(f"wrote structure file {path}")


# -- reading --------------------------------------------------------------------------

def _require(data: Dict[str, Any], key: str) -> Any:
    if key not in data:
        raise ParseError(f"missing field {key!r}", {"field": key})
    return data[key]


def _scalar(text: Any, field: CyclotomicField, where: str) -> Scalar:
    try:
        return parse_scalar(text, field)
    except ParseError as e:
        raise ParseError(f"{where}: {e.message}", {"field": where, **e.details}) from e


def _vector(values: Any, dim: int, field: CyclotomicField, key: str) -> np.ndarray:
    if not isinstance(values, list) or len(values) != dim:
        raise ParseError(f"{key} must list {dim} scalars", {"field": key})
    return np.array([_scalar(v, field, f"{key}[{i}]") for i, v in enumerate(values)], dtype=object)


def _constants(triples: Any, dim: int, field: CyclotomicField, key: str) -> np.ndarray:
    if not isinstance(triples, list):
        raise ParseError(f"{key} must be a list of [i, j, k, scalar] entries", {"field": key})
    out = zeros((dim, dim, dim), field)
    for position, entry in enumerate(triples):
        where = f"{key}[{position}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise ParseError(f"{where} must be [i, j, k, scalar]", {"field": where})
        i, j, k, value = entry
        if not all(isinstance(x, int) and 0 <= x < dim for x in (i, j, k)):
            raise ParseError(f"{where} has an index outside 0..{dim - 1}", {"field": where, "entry": entry[:3]})
        out[i, j, k] = out[i, j, k] + _scalar(value, field, where)
    return out


def load_structure(data: Dict[str, Any]) -> Structure:
    """Coalgebra, or HopfAlgebra when multiplication constants are present."""
    if not isinstance(data, dict):
        raise ParseError("structure file root must be an object")
    conductor = _require(data, "field")
    if not isinstance(conductor, dict) or not isinstance(conductor.get("conductor"), int) or conductor["conductor"] < 1:
        raise ParseError("field.conductor must be a positive integer", {"field": "field.conductor"})
    field = get_field(conductor["conductor"])
    dim = _require(data, "dim")
    if not isinstance(dim, int) or dim < 1:
        raise ParseError("dim must be a positive integer", {"field": "dim"})
    names = data.get("basis") or []
    if names and (len(names) != dim or not all(isinstance(s, str) for s in names)):
        raise ParseError(f"basis must list {dim} names", {"field": "basis"})
    comul = _constants(_require(data, "comul"), dim, field, "comul")
    counit = _vector(_require(data, "counit"), dim, field, "counit")
    try:
        c = Coalgebra(field, comul, counit, list(names))
    except ValidationError as e:
        raise ParseError(e.message, e.details) from e
    if "mul" not in data:
        return c
    mul = _constants(data["mul"], dim, field, "mul")
    unit = _vector(_require(data, "unit"), dim, field, "unit")
    antipode = None
    if data.get("antipode") is not None:
        rows = data["antipode"]
        if not isinstance(rows, list) or len(rows) != dim:
            raise ParseError(f"antipode must be a {dim}×{dim} matrix", {"field": "antipode"})
        antipode = np.array([_vector(row, dim, field, f"antipode[{i}]") for i, row in enumerate(rows)], dtype=object)
    algebra = AlgebraSC(field, mul, unit, list(c.basis_names))
    try:
        return HopfAlgebra(c, algebra, antipode, name=str(data.get("name") or ""))
    except ValidationError as e:
        raise ParseError(e.message, e.details) from e


def loads_structure(text: str) -> Structure:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}",
                         {"line": e.lineno, "column": e.colno}) from e
    return load_structure(data)


def read_structure(path: Union[str, Path]) -> Structure:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read structure file {path}", {"path": str(path)}) from e
    return loads_structure(text)


def parse_vector(text: str, c: Coalgebra) -> np.ndarray:
    """A basis name, or dim scalars separated by semicolons."""
    text = text.strip()
    if text in c.basis_names:
        v = zeros(c.dim, c.field)
        v[c.basis_names.index(text)] = c.field.one
        return v
    parts = text.split(";")
    if len(parts) != c.dim:
        raise ParseError(
            f"vector {text!r} is neither a basis name nor {c.dim} scalars",
            {"field": "vector", "value": text}
        )
    return np.array([_scalar(p.strip(), c.field, "vector") for p in parts], dtype=object)
