"""Text formats for matrices, distributions and urn trajectories.

Matrices
    JSON ``{"rows": R, "cols": C, "entries": [[...], ...]}`` with every entry
    a decimal string (``"-12"``; rationals as ``"num/den"``), or CSV with one
    matrix row per line.
Polynomial matrices
    The same JSON object, each entry an array of decimal-string coefficients
    in ascending degree (``[]`` for zero).
Rational vectors and urn distributions
    JSON array of ``{"num": n, "den": d}`` objects.
Site distributions
    ``{"xi": [{"num", "den"}, ...], "p": [...]}``.
Urn trajectories
    CSV with header ``step,state``.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Literal, Union

from .errors import DomainError
from .exact import ExactMatrix, RationalMatrix
from .multivariate import SiteDistribution
from .poly import PolyMatrix
from .walks import FiniteDistribution, UrnTrajectory

Matrix = Union[ExactMatrix, RationalMatrix]


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_token(s) -> Fraction:
    if isinstance(s, bool):
        raise DomainError(f"invalid matrix entry {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise DomainError(f"matrix entries must be decimal strings, got {s!r}")
    try:
        return Fraction(s.strip())
    except ValueError:
        raise DomainError(f"invalid matrix entry {s!r}") from None


def _build(rows: list[list[Fraction]]) -> Matrix:
    if not rows or not rows[0]:
        raise DomainError("empty matrix")
    if all(x.denominator == 1 for r in rows for x in r):
        return ExactMatrix([[int(x) for x in r] for r in rows])
    return RationalMatrix(rows)


def matrix_to_json(m: Matrix) -> str:
    return json.dumps({
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[format_rational(x) for x in r] for r in m.tolist()],
    })


def matrix_from_json(text: str) -> Matrix:
    """Parse a matrix; integral entries give :class:`ExactMatrix`, otherwise :class:`RationalMatrix`."""
    try:
        obj = json.loads(text)
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except (ValueError, KeyError, TypeError) as exc:
        raise DomainError(f"not a matrix JSON object: {exc}") from None
    parsed = [[_parse_token(x) for x in r] for r in entries]
    if len(parsed) != rows or any(len(r) != cols for r in parsed):
        raise DomainError(f"declared shape {rows}x{cols} does not match the entries")
    return _build(parsed)


def matrix_to_csv(m: Matrix) -> str:
    return "".join(",".join(format_rational(x) for x in r) + "\n" for r in m.tolist())


def matrix_from_csv(text: str) -> Matrix:
    rows = [[_parse_token(x) for x in r] for r in csv.reader(io.StringIO(text)) if r]
    if len({len(r) for r in rows}) > 1:
        raise DomainError("ragged CSV rows")
    return _build(rows)


def matrix_to_pretty(m: Matrix) -> str:
    cells = [[format_rational(x) for x in r] for r in m.tolist()]
    width = max(len(c) for r in cells for c in r)
    return "".join(" ".join(c.rjust(width) for c in r) + "\n" for r in cells)


def format_matrix(m: Matrix, format: Literal["json", "csv", "pretty"] = "json") -> str:
    """Serialize ``m``; ``pretty`` is for humans and carries no parsing guarantee."""
    if format == "json":
        return matrix_to_json(m) + "\n"
    if format == "csv":
        return matrix_to_csv(m)
    if format == "pretty":
        return matrix_to_pretty(m)
    raise DomainError(f"unknown format {format!r}")


def parse_matrix(text: str, format: Literal["json", "csv"] | None = None) -> Matrix:
    """Parse JSON or CSV; with ``format=None`` the format is sniffed from the first character."""
    if format is None:
        format = "json" if text.lstrip().startswith("{") else "csv"
    if format == "json":
        return matrix_from_json(text)
    if format == "csv":
        return matrix_from_csv(text)
    raise DomainError(f"unknown format {format!r}")


def polymatrix_to_json(m: PolyMatrix) -> str:
    return json.dumps({
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[[str(c) for c in p] for p in r] for r in m.tolist()],
    })


def polymatrix_from_json(text: str) -> PolyMatrix:
    try:
        obj = json.loads(text)
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        parsed = [[[int(c) for c in p] for p in r] for r in entries]
    except (ValueError, KeyError, TypeError) as exc:
        raise DomainError(f"not a polynomial-matrix JSON object: {exc}") from None
    if len(parsed) != rows or any(len(r) != cols for r in parsed):
        raise DomainError(f"declared shape {rows}x{cols} does not match the entries")
    return PolyMatrix(parsed)


def rational_to_obj(x) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def rational_from_obj(obj) -> Fraction:
    try:
        return Fraction(int(obj["num"]), int(obj["den"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"invalid rational {obj!r}: {exc}") from None


def rational_vector_to_json(values: Iterable) -> str:
    return json.dumps([rational_to_obj(v) for v in values])


def rational_vector_from_json(text: str) -> tuple[Fraction, ...]:
    try:
        items = json.loads(text)
    except ValueError as exc:
        raise DomainError(f"invalid JSON: {exc}") from None
    if not isinstance(items, list):
        raise DomainError("expected a JSON array of {num, den} objects")
    return tuple(rational_from_obj(o) for o in items)


def distribution_to_json(d: FiniteDistribution) -> str:
    return rational_vector_to_json(d.probs)


def distribution_from_json(text: str) -> FiniteDistribution:
    probs = rational_vector_from_json(text)
    return FiniteDistribution(len(probs) - 1, probs)


def site_distribution_to_json(dist: SiteDistribution) -> str:
    return json.dumps({"xi": [rational_to_obj(x) for x in dist.xi], "p": [rational_to_obj(x) for x in dist.p]})


def site_distribution_from_json(text: str) -> SiteDistribution:
    try:
        obj = json.loads(text)
        xi, p = obj["xi"], obj["p"]
    except (ValueError, KeyError, TypeError) as exc:
        raise DomainError(f"not a site-distribution JSON object: {exc}") from None
    return SiteDistribution(tuple(rational_from_obj(o) for o in xi), tuple(rational_from_obj(o) for o in p))


def trajectory_to_csv(traj: UrnTrajectory) -> str:
    lines = ["step,state\n"]
    lines.extend(f"{i},{s}\n" for i, s in enumerate(traj.states))
    return "".join(lines)


def trajectory_from_csv(text: str, N: int, seed: int = 0) -> UrnTrajectory:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != ["step", "state"]:
        raise DomainError(f"expected header 'step,state', got {header!r}")
    states = []
    for i, row in enumerate(r for r in reader if r):
        if int(row[0]) != i:
            raise DomainError(f"step column out of sequence at line {i + 2}")
        states.append(int(row[1]))
    return UrnTrajectory(N, seed, tuple(states))
