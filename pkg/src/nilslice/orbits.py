"""Nilpotent-orbit catalogs, Jacobson-Morozov completion, identification.

Catalogs are ingested from structured JSON (one file per type) and
re-validated computationally at load: the dimension of every orbit is
recomputed from its weighted Dynkin diagram, the ad-h spectrum map is
checked injective (this is what makes identify_orbit sound), and the closure
order is checked acyclic and graded.  Closure covers are ingested data (the
closure order is validated, not derived).
"""

import json
from fractions import Fraction
from importlib import resources

from .liealg import (
    algebra, LieElement, jm_neutral, jm_triple, ad_h_multiplicities,
    cartan_lie_element,
)
from .rootsys import dominantize

SCHEMA = "nilslice-orbit-catalog/1"
ORBIT_COUNTS = {"G2": 5, "F4": 16, "E6": 21, "E7": 45, "E8": 70}


class CatalogError(ValueError):
    pass


class OrbitRecord:
    def __init__(self, d):
        self.label = d["label"]
        self.diagram = tuple(d["diagram"])
        self.dim = d["dim"]
        self.component_group = d["component_group"]
        self.special = d["special"]
        self.cs_type = d.get("cs_type")          # reductive type of c(s)
        self.bc_levi_rank = d.get("bc_levi_rank")
        self.closure_covers = list(d.get("closure_covers", []))
        self.branches = dict(d.get("branches", {}))
        self.representative = [
            (tuple(root), Fraction(coeff))
            for root, coeff in d.get("representative", [])]
        self.provenance = d.get("provenance", "")

    def __repr__(self):
        return f"<orbit {self.label} dim {self.dim}>"


class OrbitCatalog:
    def __init__(self, cartan_type, records):
        self.cartan_type = cartan_type
        self.records = records
        self.by_label = {r.label: r for r in records}
        self.spectrum_index = {}

    def __iter__(self):
        return iter(self.records)

    def __getitem__(self, label):
        return self.by_label[label]


def diagram_spectrum(alg, diagram):
    """ad-h eigenvalue multiplicities for h with the given weighted diagram."""
    mults = {0: alg.rank}
    for rid in range(alg.nroots):
        vec = alg.root_vec(rid)
        w = sum(c * v for c, v in zip(vec, diagram))
        mults[w] = mults.get(w, 0) + 1
    return {k: v for k, v in mults.items() if v}


def diagram_dim(alg, diagram):
    """dim of the orbit attached to the diagram: dim g - dim g0 - dim g1."""
    sp = diagram_spectrum(alg, diagram)
    return alg.dim - sp.get(0, 0) - sp.get(1, 0)


def _data_text(name):
    return resources.files("nilslice.data").joinpath(name).read_text()


def load_catalog(cartan_type, data_source=None):
    """Load and validate the orbit catalog for one exceptional type.

    data_source: optional path or JSON string overriding the packaged data.
    """
    if data_source is None:
        raw = _data_text(f"orbits_{cartan_type.lower()}.json")
    else:
        try:
            raw = open(data_source).read()
        except (OSError, TypeError):
            raw = data_source
    doc = json.loads(raw)
    if doc.get("schema") != SCHEMA:
        raise CatalogError(f"unknown catalog schema {doc.get('schema')!r}")
    if doc.get("cartan_type") != cartan_type:
        raise CatalogError("catalog type mismatch")
    records = [OrbitRecord(d) for d in doc["orbits"]]
    cat = OrbitCatalog(cartan_type, records)
    _validate(cat)
    return cat


def _validate(cat):
    alg = algebra(cat.cartan_type)
    want = ORBIT_COUNTS.get(cat.cartan_type)
    if want is not None and len(cat.records) != want:
        raise CatalogError(
            f"{cat.cartan_type}: {len(cat.records)} orbits, expected {want}")
    seen = {}
    for rec in cat.records:
        if len(rec.diagram) != alg.rank:
            raise CatalogError(f"{rec.label}: diagram has wrong rank")
        if any(v not in (0, 1, 2) for v in rec.diagram) and rec.label != "0":
            raise CatalogError(f"{rec.label}: diagram values outside 0/1/2")
        d = diagram_dim(alg, rec.diagram)
        if d != rec.dim:
            raise CatalogError(
                f"{rec.label}: stored dim {rec.dim} != recomputed {d}")
        key = tuple(sorted(diagram_spectrum(alg, rec.diagram).items()))
        if key in seen:
            raise CatalogError(
                f"spectrum collision: {rec.label} vs {seen[key]}")
        seen[key] = rec.label
        cat.spectrum_index[key] = rec.label
    # closure covers: known labels, graded, acyclic
    for rec in cat.records:
        for low in rec.closure_covers:
            if low not in cat.by_label:
                raise CatalogError(f"{rec.label}: unknown cover {low}")
            lrec = cat.by_label[low]
            codim = rec.dim - lrec.dim
            if codim <= 0 or codim % 2:
                raise CatalogError(
                    f"edge ({rec.label},{low}): codim {codim} not even positive")
        for low, k in rec.branches.items():
            if low not in rec.closure_covers or int(k) < 1:
                raise CatalogError(f"{rec.label}: bad branch data at {low}")
    # acyclicity is implied by the dim grading check above


class DegenerationEdge:
    def __init__(self, upper, lower, codim, branches):
        self.upper, self.lower = upper, lower
        self.codim, self.branches = codim, branches

    def key(self):
        return (self.upper, self.lower)

    def __repr__(self):
        return f"<edge {self.upper} > {self.lower} codim {self.codim}>"


def minimal_degenerations(cat):
    out = []
    for rec in cat.records:
        for low in rec.closure_covers:
            lrec = cat.by_label[low]
            out.append(DegenerationEdge(rec.label, low, rec.dim - lrec.dim,
                                        int(rec.branches.get(low, 1))))
    out.sort(key=lambda e: (-cat.by_label[e.upper].dim, e.upper, e.lower))
    return out


def jacobson_morozov(alg, e):
    """SL2Triple through the nilpotent element e (deterministic)."""
    if not e:
        raise ValueError("zero element")
    return jm_triple(alg, e)


class OrbitIdentity(ValueError):
    pass


def identify_orbit(alg, cat, x):
    """Bala-Carter label of the orbit through the nilpotent element x.

    Computes a JM neutral element h and matches the exact ad-h eigenvalue
    multiplicities against the catalog's diagram spectra (checked injective
    at load time).
    """
    dx = x.coeffs if isinstance(x, LieElement) else x
    if not dx:
        return "0"
    h = jm_neutral(alg, dx)
    mults = ad_h_multiplicities(alg, h)
    key = tuple(sorted(mults.items()))
    label = cat.spectrum_index.get(key)
    if label is None:
        near = [r.label for r in cat.records
                if r.dim == alg.dim - mults.get(0, 0) - mults.get(1, 0)]
        raise OrbitIdentity(
            f"no orbit with ad-h spectrum {dict(mults)}; candidates by "
            f"dimension: {near} (suspect a sign or transcription bug)")
    return label


def pair_diagram(alg, cat, h_coeffs):
    """Dominantize an integral Cartan element and look it up as a diagram."""
    diag = alg.rs.diagram_of_coroot_vec(
        [h_coeffs.get(i, 0) for i in range(alg.rank)])
    dom, _ = dominantize(alg.rs, diag)
    for rec in cat.records:
        if rec.diagram == dom:
            return rec.label
    return None


def representative_element(alg, rec):
    if not rec.representative:
        raise ValueError(f"{rec.label} has no stored representative")
    out = {}
    for root, coeff in rec.representative:
        rid = alg.rid_of_vec(root)
        if rid is None:
            raise CatalogError(f"{rec.label}: representative term {root} "
                               "is not a root")
        out[alg.basis_index_of_root(rid)] = coeff
    return LieElement(alg, out)
