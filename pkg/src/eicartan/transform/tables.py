"""The non-simply-laced Dynkin and Euclidean rows and their graphs Gamma'."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from ..cartan import (CartanMatrix, CartanTriple, connected_components, find_minimal_symmetrizer,
                      recognize_simply_laced, valued_graph)
from ..errors import TableMismatch
from .lusztig import lusztig_forward
from .prime_triple import construct_prime_triple


def path_edges(n):
    return [(k, k + 1) for k in range(1, n)]


def fork_edges(n):
    """Path 1..n-1 with n-1 joined to both n and n+1 (n + 1 vertices)."""
    return path_edges(n - 1) + [(n - 1, n), (n - 1, n + 1)]


def matrix_from_shape(n_vertices, edges, D):
    """c_ij = -D_j / gcd(D_i, D_j) on edges: valuation forced by the symmetrizer."""
    rows = [[2 if a == b else 0 for b in range(n_vertices)] for a in range(n_vertices)]
    for i, j in edges:
        g = math.gcd(D[i - 1], D[j - 1])
        rows[i - 1][j - 1] = -D[j - 1] // g
        rows[j - 1][i - 1] = -D[i - 1] // g
    return CartanMatrix.from_rows(rows)


@dataclass(frozen=True)
class TableRow:
    table: int
    family: str
    n: int | None
    edges: tuple
    D: tuple
    torsion: int
    expected: str  # simply-laced type of Gamma' away from the torsion prime

    @property
    def name(self):
        return self.family if self.n is None else f"{self.family}_{self.n}"

    def triple(self):
        C = matrix_from_shape(len(self.D), self.edges, self.D)
        return CartanTriple.create(C, self.D)


def _rows():
    rows = []
    for n in (3, 4):
        rows.append(TableRow(1, "B", n, tuple(path_edges(n)), (2,) + (1,) * (n - 1), 2, f"D_{n + 1}"))
    for n in (2, 3):
        rows.append(TableRow(1, "C", n, tuple(path_edges(n)), (1,) + (2,) * (n - 1), 2, f"A_{2 * n - 1}"))
    rows.append(TableRow(1, "F_4", None, tuple(path_edges(4)), (2, 2, 1, 1), 2, "E_6"))
    rows.append(TableRow(1, "G_2", None, tuple(path_edges(2)), (3, 1), 3, "D_4"))
    for n in (2, 3):
        rows.append(TableRow(2, "~B", n, tuple(path_edges(n + 1)), (2,) + (1,) * (n - 1) + (2,), 2,
                             f"~D_{n + 2}"))
    for n in (2, 3):
        rows.append(TableRow(2, "~C", n, tuple(path_edges(n + 1)), (1,) + (2,) * (n - 1) + (1,), 2,
                             f"~A_{2 * n - 1}"))
    rows.append(TableRow(2, "~A_11", None, tuple(path_edges(2)), (4, 1), 2, "~D_4"))
    for n in (2, 3):
        rows.append(TableRow(2, "~BC", n, tuple(path_edges(n + 1)), (4,) + (2,) * (n - 1) + (1,), 2,
                             f"~D_{2 * n + 2}"))
    for n in (3, 4):
        rows.append(TableRow(2, "~BD", n, tuple(fork_edges(n)), (2,) + (1,) * n, 2, f"~D_{n + 1}"))
    for n in (3, 4):
        rows.append(TableRow(2, "~CD", n, tuple(fork_edges(n)), (1,) + (2,) * n, 2, f"~D_{2 * n}"))
    rows.append(TableRow(2, "~F_41", None, tuple(path_edges(5)), (2, 2, 2, 1, 1), 2, "~E_7"))
    rows.append(TableRow(2, "~F_42", None, tuple(path_edges(5)), (1, 1, 1, 2, 2), 2, "~E_6"))
    rows.append(TableRow(2, "~G_21", None, tuple(path_edges(3)), (3, 3, 1), 3, "~E_6"))
    rows.append(TableRow(2, "~G_22", None, tuple(path_edges(3)), (1, 1, 3), 3, "~D_4"))
    return tuple(rows)


TABLE_ROWS = _rows()


def coprime_prime(row):
    return 3 if row.torsion == 2 else 2


@dataclass
class RowResult:
    row: TableRow
    minimal: bool
    torsion_self: bool
    coprime: int
    found: str | None
    orbits: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return self.minimal and self.torsion_self and self.found == self.row.expected


def is_self_reproducing(t, pt):
    if pt.M != tuple((i, 0) for i in t.labels):
        return False
    back = {(i, 0): i for i in t.labels}
    return (pt.C.relabel(back) == t.C and pt.D == t.D
            and frozenset((back[u], back[v]) for u, v in pt.Omega) == t.Omega)


def check_row(row):
    t = row.triple()
    minimal = find_minimal_symmetrizer(t.C) == row.D
    self_ok = is_self_reproducing(t, construct_prime_triple(t, row.torsion))
    q = coprime_prime(row)
    pt = construct_prime_triple(t, q)
    g = valued_graph(pt.C)
    found = None
    if len(connected_components(g)) == 1 and g.is_simply_laced() and all(d == 1 for d in pt.D):
        found = recognize_simply_laced(g).name
    orbits = sorted(len(o) for o in lusztig_forward(t.C, t.D).orbits())
    return RowResult(row, minimal, self_ok, q, found, orbits)


@dataclass
class TableReport:
    results: list

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    def to_document(self):
        return [{"table": r.row.table, "row": r.row.name, "D": list(r.row.D),
                 "torsion_prime": r.row.torsion, "self_reproducing": r.torsion_self,
                 "coprime_prime": r.coprime, "expected": r.row.expected, "found": r.found,
                 "sigma_orbit_sizes": r.orbits, "ok": r.ok} for r in self.results]


def regenerate_tables(raise_on_mismatch=True):
    results = [check_row(row) for row in TABLE_ROWS]
    if raise_on_mismatch:
        for r in results:
            if not r.ok:
                raise TableMismatch(r.row.name, f"expected {r.row.expected}, found {r.found}"
                                    f" (minimal={r.minimal}, self={r.torsion_self})")
    return TableReport(results)


def render_tables(report):
    header = ("table", "row", "D", "p=q", "p≠q (p)", "Γ'", "expected", "match")
    lines = []
    for r in report.results:
        lines.append((str(r.row.table), r.row.name, "diag(" + ",".join(map(str, r.row.D)) + ")",
                      "self" if r.torsion_self else "CHANGED", str(r.coprime), r.found or "?",
                      r.row.expected, "yes" if r.ok else "NO"))
    widths = [max(len(x) for x in col) for col in zip(header, *lines)]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    out = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
    out.extend(fmt.format(*ln) for ln in lines)
    return "\n".join(out)
