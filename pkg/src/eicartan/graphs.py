"""Graph isomorphism for valued graphs and graphs with automorphisms (networkx VF2)."""

from __future__ import annotations

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher, categorical_edge_match, categorical_node_match


def valued_digraph(g):
    """ValuedGraph -> DiGraph carrying (valuation, multiplicity) on both orientations."""
    G = nx.DiGraph()
    G.add_nodes_from(g.vertices)
    for (i, j), val in g.valuation.items():
        G.add_edge(i, j, val=(val, g.multiplicity[frozenset((i, j))]))
    return G


def isomorphic(g1, g2):
    G1, G2 = valued_digraph(g1), valued_digraph(g2)
    return nx.is_isomorphic(G1, G2, edge_match=categorical_edge_match("val", None))


def find_isomorphism(g1, g2):
    G1, G2 = valued_digraph(g1), valued_digraph(g2)
    gm = DiGraphMatcher(G1, G2, edge_match=categorical_edge_match("val", None))
    return next(gm.isomorphisms_iter(), None)


def is_isomorphism(g1, g2, mapping):
    """Literal check that ``mapping`` carries g1 onto g2 with valuations."""
    if sorted(map(repr, mapping.values())) != sorted(map(repr, g2.vertices)):
        return False
    if len(g1.valuation) != len(g2.valuation):
        return False
    for (i, j), val in g1.valuation.items():
        key = (mapping[i], mapping[j])
        if g2.valuation.get(key) != val:
            return False
        if g2.multiplicity[frozenset(key)] != g1.multiplicity[frozenset((i, j))]:
            return False
    return True


def _sigma_graph(gs):
    G = nx.Graph()
    orbit_size = {}
    for orb in gs.orbits():
        for v in orb:
            orbit_size[v] = len(orb)
    for v in gs.vertices:
        G.add_node(v, orbit=orbit_size[v])
    for e, m in gs.edges.items():
        u, v = tuple(e)
        G.add_edge(u, v, mult=m)
    return G


def equivariant_isomorphism(gs1, gs2):
    """An isomorphism phi of the underlying graphs with phi o sigma1 = sigma2 o phi, or None."""
    G1, G2 = _sigma_graph(gs1), _sigma_graph(gs2)
    gm = nx.algorithms.isomorphism.GraphMatcher(
        G1, G2, node_match=categorical_node_match("orbit", None),
        edge_match=categorical_edge_match("mult", None))
    for phi in gm.isomorphisms_iter():
        if all(phi[gs1.sigma[v]] == gs2.sigma[phi[v]] for v in gs1.vertices):
            return phi
    return None
