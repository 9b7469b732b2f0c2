"""Wire formats: exact rationals, polynomials, specs, classes, tracks, tables.

Machine output is always exact: rationals serialize as ``"p/q"`` (or ``"p"``
when the denominator is 1) and polynomials as lists of
``{"exponents": [...], "coeff": "p/q"}``.  A small expression grammar is
accepted wherever a human types a class, e.g. ``t^2*x0 - 3/2*x1^2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .bdc import BdcClass
from .errors import ParseError, SpecValidationError
from .exactcore import ExactMatrix, Monomial, Polynomial, sorted_terms
from .hamspace import ManifoldSpec, make_spec
from .traintrack import Arc, TrainTrack

_RAT_RE = re.compile(r"^-?\d+(/\d+)?$")


def format_fraction(x: Fraction) -> str:
    return str(x)


def parse_fraction(s: str) -> Fraction:
    s = s.strip()
    if not _RAT_RE.match(s):
        raise ParseError(f"not a rational: {s!r}")
    return Fraction(s)


# -- polynomials -------------------------------------------------------------


def poly_to_json(p: Polynomial) -> list[dict]:
    return [
        {"exponents": list(m), "coeff": format_fraction(c)}
        for m, c in sorted_terms(p)
    ]


def poly_from_json(data, nvars: int) -> Polynomial:
    out: Polynomial = {}
    if not isinstance(data, list):
        raise ParseError("polynomial must be a list of terms")
    for term in data:
        try:
            exps = tuple(int(e) for e in term["exponents"])
            coeff = parse_fraction(str(term["coeff"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad polynomial term: {term!r}") from exc
        if len(exps) != nvars:
            raise ParseError(
                f"term has {len(exps)} exponents, ring has {nvars} variables"
            )
        if any(e < 0 for e in exps):
            raise ParseError("negative exponent")
        if coeff:
            out[exps] = out.get(exps, Fraction(0)) + coeff
    return {m: c for m, c in out.items() if c != 0}


_TOKEN_RE = re.compile(r"\s*(\^|\*|[+-]|\d+/\d+|\d+|[A-Za-z_][A-Za-z_0-9]*)")


def parse_poly_expr(expr: str, variables: Sequence[str]) -> Polynomial:
    """Parse ``3/2*t^2*x0 - x1^2 + 4`` over the given variable alphabet.

    For single-factor rings both ``x`` and ``x0`` name the generator.
    """
    names = {v: i for i, v in enumerate(variables)}
    if "x" in names and "x0" not in names:
        names["x0"] = names["x"]
    pos = 0
    tokens: list[str] = []
    while pos < len(expr):
        m = _TOKEN_RE.match(expr, pos)
        if not m:
            raise ParseError(f"bad character in expression at {expr[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    out: Polynomial = {}
    i = 0
    n = len(tokens)
    nvars = len(variables)
    while i < n:
        sign = Fraction(1)
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ParseError("dangling sign")
        coeff = sign
        exps = [0] * nvars
        expect_factor = True
        while i < n:
            tok = tokens[i]
            if tok in "+-":
                break
            if tok == "*":
                if expect_factor:
                    raise ParseError("misplaced '*'")
                i += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise ParseError(f"missing '*' before {tok!r}")
            if re.fullmatch(r"\d+(/\d+)?", tok):
                coeff *= Fraction(tok)
                i += 1
            elif tok in names:
                idx = names[tok]
                power = 1
                i += 1
                if i < n and tokens[i] == "^":
                    if i + 1 >= n or not tokens[i + 1].isdigit():
                        raise ParseError("expected integer exponent after '^'")
                    power = int(tokens[i + 1])
                    i += 2
                exps[idx] += power
            else:
                raise ParseError(f"unknown variable {tok!r}")
            expect_factor = False
        if expect_factor:
            raise ParseError("empty term")
        key = tuple(exps)
        s = out.get(key, Fraction(0)) + coeff
        if s == 0:
            out.pop(key, None)
        else:
            out[key] = s
    return out


def monomial_name(m: Monomial, variables: Sequence[str]) -> str:
    parts = []
    for v, e in zip(variables, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) if parts else "1"


def poly_to_string(p: Polynomial, variables: Sequence[str]) -> str:
    if not p:
        return "0"
    chunks = []
    for m, c in sorted_terms(p):
        name = monomial_name(m, variables)
        if name == "1":
            body = format_fraction(abs(c))
        elif abs(c) == 1:
            body = name
        else:
            body = f"{format_fraction(abs(c))}*{name}"
        chunks.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(chunks)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


# -- manifold specs ----------------------------------------------------------


def spec_to_json(spec: ManifoldSpec) -> dict:
    return {"factors": [{"n": f.n, "weights": list(f.weights)} for f in spec.factors]}


def spec_from_json(data) -> ManifoldSpec:
    if not isinstance(data, dict) or "factors" not in data:
        raise SpecValidationError('spec must be an object with a "factors" list')
    factors = data["factors"]
    if not isinstance(factors, list):
        raise SpecValidationError('"factors" must be a list')
    parsed = []
    for idx, f in enumerate(factors):
        if not isinstance(f, dict) or "n" not in f or "weights" not in f:
            raise SpecValidationError(f'factor {idx}: need keys "n" and "weights"')
        parsed.append((f["n"], list(f["weights"])))
    return make_spec(parsed)


# -- matrices and solution spaces --------------------------------------------


def matrix_to_json(m: ExactMatrix) -> list[list[str]]:
    return [[format_fraction(v) for v in row] for row in m.to_lists()]


def matrix_from_json(data) -> ExactMatrix:
    if not isinstance(data, list) or not data:
        raise ParseError("matrix must be a non-empty list of rows")
    return ExactMatrix([[parse_fraction(str(v)) for v in row] for row in data])


def vector_to_json(v: Sequence[Fraction]) -> list[str]:
    return [format_fraction(x) for x in v]


# -- diagonal-class files ----------------------------------------------------


def bdc_class_to_json(beta: BdcClass) -> dict:
    blocks = []
    for q in sorted(beta.blocks):
        top = 2 * beta.m - 2
        blocks.append(
            {
                "q": q,
                "row_basis": [list(m) for m in beta.bases[q]],
                "col_basis": [list(m) for m in beta.bases[top - q]],
                "entries": matrix_to_json(beta.blocks[q]),
            }
        )
    return {"m": beta.m, "blocks": blocks}


def bdc_class_from_json(data) -> BdcClass:
    try:
        m = int(data["m"])
        blocks_json = data["blocks"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError('class file needs integer "m" and a "blocks" list') from exc
    bases: dict[int, tuple[Monomial, ...]] = {}
    blocks: dict[int, ExactMatrix] = {}
    top = 2 * m - 2
    for b in blocks_json:
        try:
            q = int(b["q"])
            row_basis = tuple(tuple(int(e) for e in mono) for mono in b["row_basis"])
            col_basis = tuple(tuple(int(e) for e in mono) for mono in b["col_basis"])
            entries = matrix_from_json(b["entries"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad block: {b!r}") from exc
        for existing, basis in ((q, row_basis), (top - q, col_basis)):
            if existing in bases and bases[existing] != basis:
                raise ParseError(f"inconsistent bases for degree {existing}")
            bases[existing] = basis
        blocks[q] = entries
    return BdcClass(m=m, bases=bases, blocks=blocks)


# -- train tracks ------------------------------------------------------------


def track_from_json(data) -> tuple[TrainTrack, dict[str, Fraction] | None]:
    try:
        vertices = data["vertices"]
        branches = data["branches"]
    except (KeyError, TypeError) as exc:
        raise ParseError('track file needs "vertices" and "branches"') from exc
    boundary = set()
    branch_points = set()
    for v in vertices:
        name, kind = str(v["name"]), str(v["kind"])
        if kind == "boundary":
            boundary.add(name)
        elif kind == "branch":
            branch_points.add(name)
        else:
            raise ParseError(f'vertex kind must be "boundary" or "branch", got {kind!r}')
    arcs: dict[str, Arc] = {}
    loops = set()
    weights: dict[str, Fraction] = {}
    saw_weight = False
    for b in branches:
        name = str(b["name"])
        if b.get("loop"):
            loops.add(name)
        else:
            arcs[name] = Arc(tail=str(b["tail"]), head=str(b["head"]))
        if "weight" in b:
            weights[name] = parse_fraction(str(b["weight"]))
            saw_weight = True
    try:
        track = TrainTrack(
            boundary=frozenset(boundary),
            branch_points=frozenset(branch_points),
            arcs=arcs,
            loops=frozenset(loops),
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return track, (weights if saw_weight else None)


def track_to_json(track: TrainTrack, weights: dict[str, Fraction] | None = None) -> dict:
    vertices = [{"name": v, "kind": "boundary"} for v in sorted(track.boundary)]
    vertices += [{"name": v, "kind": "branch"} for v in sorted(track.branch_points)]
    branches = []
    for name in sorted(track.arcs):
        arc = track.arcs[name]
        entry = {"name": name, "tail": arc.tail, "head": arc.head}
        if weights and name in weights:
            entry["weight"] = format_fraction(weights[name])
        branches.append(entry)
    for name in sorted(track.loops):
        entry = {"name": name, "loop": True}
        if weights and name in weights:
            entry["weight"] = format_fraction(weights[name])
        branches.append(entry)
    return {"vertices": vertices, "branches": branches}


# -- tables ------------------------------------------------------------------


def table_to_csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    lines = [",".join(header)]
    lines += [",".join(row) for row in rows]
    return "\n".join(lines) + "\n"


def table_to_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    cols = [list(col) for col in zip(header, *rows)]
    widths = [max(len(v) for v in col) for col in cols]
    def fmt(row):
        return "  ".join(v.rjust(w) for v, w in zip(row, widths))
    ruler = "-" * (sum(widths) + 2 * (len(widths) - 1))
    return "\n".join([fmt(header), ruler] + [fmt(r) for r in rows]) + "\n"
