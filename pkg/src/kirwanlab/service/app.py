"""FastAPI service exposing the compute modules.

Every endpoint is stateless and deterministic; all numeric payloads are exact
rational strings.  Domain errors surface as HTTP 400 with a machine-readable
``{"error": {"type", "message"}}`` object.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..bdc import (
    apply_right_inverse,
    bases_for,
    global_bdc,
    is_bdc,
    pairing_matrix,
)
from ..diagonal import (
    BUNDLE_VARS,
    TENSOR_RING,
    bundle_class,
    compose_product_lambda,
    graham_matrix,
    shriek,
    square_ring,
    truncate,
)
from ..errors import KirwanLabError, ParseError
from ..exactcore import const, zero
from ..goldens import paper_check
from ..hamspace import ManifoldSpec, chambers, fixed_points, ring_for
from ..kalkman import tables_for
from ..serialization import (
    bdc_class_from_json,
    bdc_class_to_json,
    format_fraction,
    monomial_name,
    parse_fraction,
    parse_poly_expr,
    poly_from_json,
    poly_to_json,
    poly_to_string,
    spec_from_json,
    table_to_csv,
    table_to_text,
    track_from_json,
)
from ..traintrack import boundary_balance, line_weight, validate_weighting
from . import models as m

F = Fraction


def _spec(model: m.SpecModel) -> ManifoldSpec:
    return spec_from_json(model.model_dump())


def _poly(data: m.PolyInput, spec: ManifoldSpec):
    names = spec.variable_names
    if isinstance(data, str):
        return parse_poly_expr(data, names)
    return poly_from_json([t.model_dump() for t in data], len(names))


def _chamber(spec: ManifoldSpec, sel: m.ChamberSelector):
    chs = chambers(spec)
    if (sel.index is None) == (sel.rep is None):
        raise ParseError("select a chamber by index or by representative, not both")
    if sel.index is not None:
        if not 1 <= sel.index <= len(chs):
            raise ParseError(f"chamber index must be in 1..{len(chs)}")
        return chs[sel.index - 1]
    rep = parse_fraction(sel.rep)
    for ch in chs:
        if ch.lower < rep < ch.upper:
            return ch
    raise ParseError(f"{sel.rep} lies in no bounded chamber")


def _chamber_model(ch) -> m.ChamberModel:
    return m.ChamberModel(
        lower=format_fraction(ch.lower),
        upper=format_fraction(ch.upper),
        representative=format_fraction(ch.representative),
    )


def _terms(p) -> list[m.TermModel]:
    return [m.TermModel(**t) for t in poly_to_json(p)]


def _class_file_model(beta) -> m.ClassFileModel:
    return m.ClassFileModel(**bdc_class_to_json(beta))


def _pretty_class(beta, spec: ManifoldSpec) -> str:
    names = spec.variable_names
    top = 2 * spec.m - 2
    chunks = []
    for q in sorted(beta.blocks):
        block = beta.blocks[q]
        for i, left in enumerate(beta.bases[q]):
            for j, right in enumerate(beta.bases[top - q]):
                c = block.entry(i, j)
                if c == 0:
                    continue
                label = f"{monomial_name(left, names)}(x){monomial_name(right, names)}"
                coeff = format_fraction(c)
                chunks.append(f"{coeff}*{label}")
    return " + ".join(chunks).replace("+ -", "- ") if chunks else "0"


def create_app() -> FastAPI:
    app = FastAPI(
        title="kirwanlab",
        version=__version__,
        description=(
            "Exact equivariant-cohomology computations for circle actions on "
            "products of complex projective spaces."
        ),
    )

    @app.exception_handler(KirwanLabError)
    async def _domain_error(_request: Request, exc: KirwanLabError):
        return JSONResponse(status_code=400, content={"error": exc.payload()})

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/ring", response_model=m.RingResponse)
    def ring(req: m.SpecRequest):
        spec = _spec(req.spec)
        ring = ring_for(spec)
        dims = {q: len(ring.standard_basis(q)) for q in range(0, 2 * spec.m + 1, 2)}
        return m.RingResponse(
            variables=list(ring.variables),
            relations=[_terms(ring.relations[i]) for i in sorted(ring.relations)],
            graded_dimensions=dims,
        )

    @app.post("/fixed-points", response_model=m.FixedPointsResponse)
    def fixed_points_route(req: m.SpecRequest):
        spec = _spec(req.spec)
        return m.FixedPointsResponse(
            points=[
                m.FixedPointModel(
                    choice=list(p.choice),
                    mu=format_fraction(p.mu),
                    weight_product=format_fraction(p.weight_product),
                    per_factor_mu=[format_fraction(v) for v in p.per_factor_mu],
                )
                for p in fixed_points(spec)
            ]
        )

    @app.post("/chambers", response_model=m.ChambersResponse)
    def chambers_route(req: m.SpecRequest):
        spec = _spec(req.spec)
        return m.ChambersResponse(chambers=[_chamber_model(c) for c in chambers(spec)])

    @app.post("/integrate", response_model=m.ValueResponse)
    def integrate_route(req: m.IntegrateRequest):
        from ..kalkman import integrate

        spec = _spec(req.spec)
        alpha = ring_for(spec).normal_form(_poly(req.alpha, spec))
        return m.ValueResponse(
            value=format_fraction(integrate(alpha, parse_fraction(req.c), spec))
        )

    @app.post("/basis", response_model=m.BasisResponse)
    def basis_route(req: m.BasisRequest):
        spec = _spec(req.spec)
        ring = ring_for(spec)
        custom = [tuple(mo) for mo in req.custom] if req.custom is not None else None
        monos = ring.graded_basis(req.degree, custom)
        return m.BasisResponse(
            degree=req.degree,
            monomials=[list(mo) for mo in monos],
            names=[monomial_name(mo, spec.variable_names) for mo in monos],
        )

    @app.post("/tables", response_model=m.TablesResponse)
    def tables_route(req: m.TablesRequest):
        spec = _spec(req.spec)
        ring = ring_for(spec)
        top = 2 * spec.m - 2
        basis = ring.graded_basis(
            top, [tuple(mo) for mo in req.basis] if req.basis is not None else None
        )
        t1, t2 = tables_for(spec, basis)
        names = [monomial_name(mo, spec.variable_names) for mo in basis]
        contribution = m.TableModel(
            row_labels=[format_fraction(p.mu) for p in t1.points],
            columns=names,
            rows=[[format_fraction(v) for v in row] for row in t1.rows],
        )
        chamber = m.TableModel(
            row_labels=[str(j) for j in range(1, len(t2.rows) + 1)],
            columns=names,
            rows=[[format_fraction(v) for v in row] for row in t2.rows],
        )
        rendered = None
        if req.format in ("csv", "text"):
            render = table_to_csv if req.format == "csv" else table_to_text
            rendered = {
                "contribution": render(
                    ["mu"] + names,
                    [[lab] + list(row) for lab, row in zip(contribution.row_labels, contribution.rows)],
                ),
                "chamber": render(
                    ["chamber"] + names,
                    [[lab] + list(row) for lab, row in zip(chamber.row_labels, chamber.rows)],
                ),
            }
        return m.TablesResponse(
            basis=[list(mo) for mo in basis],
            contribution=contribution,
            chamber=chamber,
            rendered=rendered,
        )

    def _custom_bases(req_bases):
        if req_bases is None:
            return None
        return {int(q): [tuple(mo) for mo in monos] for q, monos in req_bases.items()}

    @app.post("/pairing", response_model=m.PairingResponse)
    def pairing_route(req: m.PairingRequest):
        spec = _spec(req.spec)
        ch = _chamber(spec, req.chamber)
        bases = bases_for(spec, _custom_bases(req.custom_bases))
        pm = pairing_matrix(spec, req.q, ch, bases)
        return m.PairingResponse(
            q=req.q,
            chamber=_chamber_model(ch),
            row_basis=[list(mo) for mo in pm.row_basis],
            col_basis=[list(mo) for mo in pm.col_basis],
            entries=[[format_fraction(v) for v in row] for row in pm.matrix.to_lists()],
        )

    @app.post("/bdc", response_model=m.BdcResponse)
    def bdc_route(req: m.BdcRequest):
        spec = _spec(req.spec)
        all_chambers = chambers(spec)
        if req.chambers == "all":
            subset = None
        else:
            if not isinstance(req.chambers, list) or not req.chambers:
                raise ParseError('"chambers" must be "all" or a list of 1-based indices')
            for j in req.chambers:
                if not 1 <= j <= len(all_chambers):
                    raise ParseError(f"chamber index {j} out of range 1..{len(all_chambers)}")
            subset = [all_chambers[j - 1] for j in req.chambers]
        family = global_bdc(
            spec, custom_bases=_custom_bases(req.custom_bases), chamber_subset=subset
        )
        spaces = {
            q: m.SolutionSpaceModel(
                ambient_dim=s.ambient_dim,
                dimension=s.dimension,
                particular=[format_fraction(v) for v in s.particular],
                nullspace=[[format_fraction(v) for v in vec] for vec in s.nullspace_basis],
            )
            for q, s in family.spaces.items()
        }
        beta = family.representative()
        return m.BdcResponse(
            per_degree=spaces,
            per_degree_dimension=family.per_degree_dimension,
            total_dimension=family.total_dimension,
            representative=_class_file_model(beta),
            pretty=_pretty_class(beta, spec),
        )

    @app.post("/verify", response_model=m.VerifyResponse)
    def verify_route(req: m.VerifyRequest):
        spec = _spec(req.spec)
        beta = bdc_class_from_json(req.class_file.model_dump())
        ch = _chamber(spec, req.chamber)
        return m.VerifyResponse(is_bdc=is_bdc(beta, spec, ch))

    @app.post("/rinv", response_model=m.PolyResponse)
    def rinv_route(req: m.RinvRequest):
        spec = _spec(req.spec)
        beta = bdc_class_from_json(req.class_file.model_dump())
        ch = _chamber(spec, req.chamber)
        alpha = ring_for(spec).normal_form(_poly(req.alpha, spec))
        result = apply_right_inverse(beta, alpha, spec, ch)
        return m.PolyResponse(
            terms=_terms(result), pretty=poly_to_string(result, spec.variable_names)
        )

    @app.get("/diagonal-cp1", response_model=m.DiagonalResponse)
    def diagonal_route(truncation: int | None = None):
        z = graham_matrix()
        one = bundle_class(const(2, 1), zero())
        u = bundle_class(zero(), const(2, 1))
        t1 = bundle_class({(1, 0): F(1)}, zero())
        t2 = bundle_class({(0, 1): F(1)}, zero())
        images = {
            "image_of_one": shriek(one),
            "image_of_u": shriek(u),
            "image_of_t1": shriek(t1),
            "image_of_t2": shriek(t2),
        }
        if truncation is not None:
            images = {k: truncate(v, truncation) for k, v in images.items()}
        names = TENSOR_RING.variables
        pretty = {k: poly_to_string(v, names) for k, v in images.items()}
        pretty["fiber_integral_matrix"] = "; ".join(
            " , ".join(poly_to_string(e, BUNDLE_VARS[:2]) for e in row) for row in z
        )
        return m.DiagonalResponse(
            variables=list(names),
            fiber_integral_matrix=[[_terms(e) for e in row] for row in z],
            **{k: _terms(v) for k, v in images.items()},
            pretty=pretty,
        )

    @app.post("/compose", response_model=m.ComposeResponse)
    def compose_route(req: m.ComposeRequest):
        spec_m = _spec(req.spec_m)
        spec_n = _spec(req.spec_n)
        ring_m = square_ring(spec_m)
        ring_n = square_ring(spec_n)

        def load(terms, ring):
            return poly_from_json([t.model_dump() for t in terms], ring.nvars)

        out1, out2 = compose_product_lambda(
            spec_m,
            spec_n,
            load(req.lm1, ring_m),
            load(req.lmu, ring_m),
            load(req.ln1, ring_n),
            load(req.lnu, ring_n),
        )
        product_spec = ManifoldSpec(factors=spec_m.factors + spec_n.factors)
        ring_out = square_ring(product_spec)
        return m.ComposeResponse(
            variables=list(ring_out.variables),
            out1=_terms(out1),
            out2=_terms(out2),
        )

    @app.post("/traintrack/verify", response_model=m.TrackVerifyResponse)
    def track_route(req: m.TrackVerifyRequest):
        track, weights = track_from_json(req.model_dump())
        if weights is None:
            raise ParseError("branches carry no weights to verify")
        valid = validate_weighting(track, weights)
        balance = None
        if valid:
            plus, minus = boundary_balance(track, weights)
            balance = [format_fraction(plus), format_fraction(minus)]
        return m.TrackVerifyResponse(valid_weighting=valid, boundary_balance=balance)

    @app.post("/traintrack/line-weight", response_model=m.ValueResponse)
    def line_weight_route(req: m.LineWeightRequest):
        try:
            value = line_weight(req.orders)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        return m.ValueResponse(value=format_fraction(value))

    @app.post("/paper-check", response_model=m.PaperCheckResponse)
    def paper_check_route():
        return m.PaperCheckResponse(**paper_check())

    return app


app = create_app()
