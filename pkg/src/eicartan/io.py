"""JSON documents for triples, graphs with automorphisms and reports.

Triple document::

    {"n": 2, "C": [[2, -1], [-3, 2]], "D": [3, 1], "Omega": [[1, 2]]}

``D`` and ``Omega`` are optional.  Indices are 1-based.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .cartan import CartanMatrix, CartanTriple, ValidationReport, is_symmetrizer, validate_cartan, validate_orientation
from .errors import InputError


def read_document(source):
    if isinstance(source, dict):
        return source
    try:
        return json.loads(Path(source).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: not valid JSON ({exc})") from exc


def parse_matrix(doc):
    if "C" not in doc:
        raise InputError("document has no field 'C'")
    rows = doc["C"]
    n = doc.get("n", len(rows))
    if not isinstance(rows, list) or len(rows) != n or any(
            not isinstance(r, list) or len(r) != n for r in rows):
        raise InputError(f"C must be a {n}x{n} integer array")
    if any(not isinstance(x, int) or isinstance(x, bool) for r in rows for x in r):
        raise InputError("C entries must be integers")
    return CartanMatrix.from_rows(rows, tuple(range(1, n + 1)))


def validate_document(doc):
    """Full validation report; never raises on mathematically invalid input."""
    C = parse_matrix(doc)
    rep = validate_cartan(C)
    if not rep:
        return rep
    if doc.get("D") is not None:
        D = doc["D"]
        ok = isinstance(D, list) and len(D) == C.n and all(isinstance(x, int) and x > 0 for x in D)
        rep.add("symmetrizer", ok and is_symmetrizer(C, tuple(D)),
                "" if ok and is_symmetrizer(C, tuple(D)) else "D C is not symmetric with D positive")
    if doc.get("Omega") is not None:
        omega = frozenset(tuple(pr) for pr in doc["Omega"])
        orep = validate_orientation(C, omega)
        for name, (passed, msg) in orep.checks.items():
            rep.add(name, passed, msg)
    return rep


def load_triple(source):
    doc = read_document(source)
    rep = validate_document(doc)
    if not rep:
        raise InputError("; ".join(f"({k}) {m}" for k, m in rep.failures().items()))
    C = parse_matrix(doc)
    return CartanTriple.create(C, doc.get("D"), doc.get("Omega"))


def triple_to_document(t):
    return {"n": t.n, "C": [list(r) for r in t.C.entries], "D": list(t.D),
            "Omega": [list(pr) for pr in t.omega_sorted()]}


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


def prime_triple_document(pt):
    M = [_jsonable(v) for v in pt.M]
    return {
        "p": pt.p,
        "r": list(pt.factors.r),
        "d": list(pt.factors.d),
        "M": M,
        "C": [list(r) for r in pt.C.entries],
        "D": list(pt.D),
        "Omega": sorted([_jsonable(u), _jsonable(v)] for u, v in pt.Omega),
    }


def graph_document(gs):
    return {
        "vertices": [_jsonable(v) for v in gs.vertices],
        "edges": sorted([_jsonable(a), _jsonable(b), m]
                        for (a, b), m in ((tuple(sorted(e)), m) for e, m in gs.edges.items())),
        "sigma": [[_jsonable(v), _jsonable(gs.sigma[v])] for v in gs.vertices],
    }


def _hashable(v):
    return tuple(_hashable(x) for x in v) if isinstance(v, list) else v


def load_graph(source):
    from .transform.lusztig import GraphWithAutomorphism
    doc = read_document(source)
    try:
        verts = tuple(_hashable(v) for v in doc["vertices"])
        edges = {}
        for a, b, m in doc["edges"]:
            key = frozenset((_hashable(a), _hashable(b)))
            edges[key] = edges.get(key, 0) + m
        sigma = {_hashable(u): _hashable(v) for u, v in doc["sigma"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed graph document: {exc}") from exc
    return GraphWithAutomorphism(verts, edges, sigma)


def fixture_path(name):
    return resources.files("eicartan") / "fixtures" / f"{name}.json"


def fixture_names():
    root = resources.files("eicartan") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name):
    return load_triple(json.loads(fixture_path(name).read_text()))


def dump(doc):
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)
