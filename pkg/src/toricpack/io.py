"""JSON documents.  Rationals are always the strings ``"p/q"`` or ``"p"``."""

from __future__ import annotations

import json
from fractions import Fraction

from .delzant import ClassificationResult, DelzantReport, Other
from .errors import InputError
from .lattice import format_rational, to_rational
from .packing import CoherentFamily, OneParameterFamily, PackingReport, PerfectPackingDecision
from .polytope import Polytope

fmt = format_rational


def vec(v) -> list[str]:
    return [fmt(x) for x in v]


def polytope_to_json(p: Polytope, **extra) -> dict:
    doc = {"dim": p.dim, "vertices": [vec(v) for v in p.vertices]}
    doc.update(extra)
    return doc


def polytope_from_json(doc) -> Polytope:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise InputError('polytope document needs a "vertices" list')
    verts = doc["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, list) for v in verts):
        raise InputError('"vertices" must be a list of coordinate lists')
    pts = [tuple(to_rational(c) for c in v) for v in verts]
    dim = doc.get("dim")
    if dim is not None and any(len(v) != dim for v in pts):
        raise InputError(f'vertex coordinates do not match "dim": {dim}')
    return Polytope.from_vertices(pts)


def delzant_report_to_json(r: DelzantReport) -> dict:
    return {
        "is_delzant": r.is_delzant,
        "chi": r.euler_characteristic,
        "vertices": [
            {"vertex": vec(d.vertex), "edge_count": d.edge_count, "rational": d.rational, "smooth": d.smooth}
            for d in r.vertices
        ],
    }


def model_to_json(model) -> dict:
    if isinstance(model, Other):
        return {"kind": "other"}
    if model.kind == "product_cp1_cp1":
        return {"kind": model.kind, "lambda": fmt(model.lam)}
    return {"kind": model.kind, "n": model.n, "lambda": fmt(model.lam)}


def classification_to_json(c: ClassificationResult) -> dict:
    t = c.transform
    return {
        "model": model_to_json(c.model),
        "transform": None if t is None else {"A": [list(r) for r in t.A], "w": vec(t.w)},
    }


def family_to_json(f: CoherentFamily) -> list[dict]:
    return [{"anchor": vec(s.anchor), "t": fmt(s.t)} for s in f.simplices]


def packing_report_to_json(r: PackingReport) -> dict:
    return {
        "lower": fmt(r.lower),
        "upper": fmt(r.upper),
        "exact": r.exact,
        "perfect": r.perfect,
        "witness": family_to_json(r.witness),
        "nodes": r.nodes,
    }


def packing_to_json(p) -> dict:
    if isinstance(p, OneParameterFamily):
        lo, hi = p.host.vertices
        lam = fmt(p.lam)
        return {
            "kind": "one_parameter_family",
            "parameter": p.parameter,
            "range": ["0", lam],
            "lambda": lam,
            "balls": [{"anchor": vec(lo), "t": p.parameter}, {"anchor": vec(hi), "t": f"{lam}-{p.parameter}"}],
        }
    return {"kind": "family", "balls": family_to_json(p)}


def decision_to_json(d: PerfectPackingDecision, enumerate_: bool = False) -> dict:
    doc = {"perfect": d.perfect, "model": model_to_json(d.model)}
    if d.omega_check is not None:
        doc["omega"] = {"lower": fmt(d.omega_check.lower), "upper": fmt(d.omega_check.upper)}
    if enumerate_:
        doc["packings"] = [packing_to_json(p) for p in d.packings]
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2)
