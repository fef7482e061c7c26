"""Plain-text, LaTeX, JSON and CSV renderings.

Scalars are always written in the exact grammar of :func:`parse_scalar`;
nothing here ever goes through floating point.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Optional, Sequence

from .field import GaussianRational, I, format_scalar, parse_scalar
from .linalg import ExactMatrix
from .parser import default_variables
from .polynomial import MultiPoly
from .solver import DimensionReport, SolutionSpace

SCHEMA_VERSION = 1

__all__ = [
    "SCHEMA_VERSION",
    "format_poly",
    "latex_poly",
    "exponent_poly",
    "format_space",
    "latex_space",
    "space_to_json",
    "space_from_json",
    "matrix_to_csv",
    "matrix_from_csv",
    "matrix_to_json",
    "matrix_from_json",
    "report_to_json",
]


def _vars(p_dim: int, variables: Optional[Sequence[str]]):
    return tuple(variables) if variables else default_variables(p_dim)


def _coef_parts(c: GaussianRational):
    """(negative, text) for a coefficient written after a sign."""
    if not c.im:
        return c.re < 0, str(abs(c.re))
    if not c.re:
        mag = abs(c.im)
        return c.im < 0, "i" if mag == 1 else f"{mag}i"
    return False, f"({format_scalar(c)})"


def format_poly(p: MultiPoly, variables: Optional[Sequence[str]] = None) -> str:
    """Plain form accepted back by :func:`parse_poly`, e.g. ``-4 - 3*x + 2*x*y - y^2``."""
    names = _vars(p.dimension, variables)
    if p.is_zero():
        return "0"
    parts = []
    for alpha, c in p.sorted_terms():
        neg, text = _coef_parts(c)
        mono = "*".join(
            names[j] if a == 1 else f"{names[j]}^{a}" for j, a in enumerate(alpha) if a
        )
        if mono:
            body = mono if text == "1" else f"{text}*{mono}"
        else:
            body = text
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def _latex_scalar(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def _latex_coef(c: GaussianRational):
    if not c.im:
        return c.re < 0, _latex_scalar(abs(c.re))
    if not c.re:
        mag = abs(c.im)
        return c.im < 0, "i" if mag == 1 else f"{_latex_scalar(mag)} i"
    sign = "+" if c.im > 0 else "-"
    mag = abs(c.im)
    im = "i" if mag == 1 else f"{_latex_scalar(mag)} i"
    re = ("-" if c.re < 0 else "") + _latex_scalar(abs(c.re))
    return False, rf"\left({re} {sign} {im}\right)"


def latex_poly(p: MultiPoly, variables: Optional[Sequence[str]] = None) -> str:
    names = _vars(p.dimension, variables)
    if p.is_zero():
        return "0"
    out = []
    for alpha, c in p.sorted_terms():
        neg, text = _latex_coef(c)
        mono = " ".join(
            names[j] if a == 1 else f"{names[j]}^{{{a}}}" for j, a in enumerate(alpha) if a
        )
        body = (mono if text == "1" else f"{text} {mono}") if mono else text
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def exponent_poly(root: Sequence[GaussianRational]) -> MultiPoly:
    """The linear polynomial ``i * root . x``."""
    d = len(root)
    return MultiPoly(d, {tuple(int(k == j) for k in range(d)): I * c for j, c in enumerate(root)})


def _factor(space: SolutionSpace, names, latex=False) -> str:
    e = exponent_poly(space.root)
    if e.is_zero():
        return ""
    if latex:
        return f"e^{{{latex_poly(e, names)}}}"
    return f"exp({format_poly(e, names)})"


def format_space(space: SolutionSpace, variables: Optional[Sequence[str]] = None) -> str:
    names = _vars(space.d, variables)
    lines = []
    factor = _factor(space, names)
    root = ", ".join(format_scalar(c) for c in space.root)
    lines.append(f"root: ({root})")
    lines.append(f"degree cap: {space.degree_cap}")
    lines.append(f"factor: {factor or '1'}")
    if space.particular is not None:
        tag = " (unique)" if not space.basis else ""
        lines.append(f"particular: {format_poly(space.particular, names)}{tag}")
    lines.append(f"dimension: {space.dimension}")
    if space.basis:
        lines.append("basis:")
        lines.extend(f"  {format_poly(b, names)}" for b in space.basis)
    for note in space.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def latex_space(space: SolutionSpace, variables: Optional[Sequence[str]] = None) -> str:
    names = _vars(space.d, variables)
    factor = _factor(space, names, latex=True)
    body = r"\operatorname{span}\left\{" + ", ".join(latex_poly(b, names) for b in space.basis) + r"\right\}"
    if not space.basis:
        body = r"\{0\}"
    if space.particular is not None:
        body = f"{latex_poly(space.particular, names)} + {body}"
    if factor:
        body = rf"{factor}\left({body}\right)"
    return body


# -- JSON -----------------------------------------------------------------------


def _poly_json(p: MultiPoly):
    return {"monomials": [[list(a), format_scalar(c)] for a, c in p.sorted_terms()]}


def _poly_from_json(obj, d: int) -> MultiPoly:
    return MultiPoly(d, [(tuple(a), parse_scalar(c)) for a, c in obj["monomials"]])


def space_to_json(space: SolutionSpace, variables: Optional[Sequence[str]] = None, indent=2) -> str:
    names = _vars(space.d, variables)
    doc = {
        "version": SCHEMA_VERSION,
        "kind": "solution",
        "d": space.d,
        "vars": list(names),
        "root": [format_scalar(c) for c in space.root],
        "degree_cap": space.degree_cap,
        "basis": [_poly_json(b) for b in space.basis],
        "notes": list(space.notes),
    }
    if space.particular is not None:
        doc["particular"] = _poly_json(space.particular)
    return json.dumps(doc, indent=indent)


def space_from_json(text_or_doc) -> tuple:
    """Inverse of :func:`space_to_json`; returns ``(space, variables)``."""
    doc = json.loads(text_or_doc) if isinstance(text_or_doc, str) else text_or_doc
    if doc.get("version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {doc.get('version')!r}")
    d = int(doc["d"])
    root = tuple(parse_scalar(c) for c in doc["root"])
    if len(root) != d:
        raise ValueError("root arity does not match d")
    basis = [_poly_from_json(b, d) for b in doc["basis"]]
    particular = _poly_from_json(doc["particular"], d) if "particular" in doc else None
    space = SolutionSpace(root, int(doc["degree_cap"]), basis, particular, doc.get("notes", ()))
    return space, tuple(doc.get("vars") or default_variables(d))


# -- matrices -------------------------------------------------------------------


def matrix_to_csv(M: ExactMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for i in range(M.rows):
        writer.writerow(format_scalar(x) for x in M.row(i))
    return buf.getvalue()


def matrix_from_csv(text: str) -> ExactMatrix:
    rows = [[parse_scalar(x) for x in row] for row in csv.reader(io.StringIO(text)) if row]
    return ExactMatrix(rows)


def matrix_to_json(M: ExactMatrix, indent=None, **extra) -> str:
    doc = {
        "version": SCHEMA_VERSION,
        "kind": "matrix",
        "rows": M.rows,
        "cols": M.cols,
        "entries": [[format_scalar(x) for x in M.row(i)] for i in range(M.rows)],
    }
    doc.update(extra)
    return json.dumps(doc, indent=indent)


def matrix_from_json(text: str) -> ExactMatrix:
    doc = json.loads(text)
    return ExactMatrix([[parse_scalar(x) for x in row] for row in doc["entries"]], cols=doc["cols"])


def report_to_json(report: DimensionReport) -> str:
    return json.dumps(
        {
            "version": SCHEMA_VERSION,
            "kind": "dimension",
            "L": report.L,
            "m": report.least_order,
            "predicted": report.predicted,
            "computed": report.computed,
        }
    )
