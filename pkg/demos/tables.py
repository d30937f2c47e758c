"""Regenerate the graphs Gamma' for the non-simply-laced Dynkin and
Euclidean rows at the torsion prime and at a coprime prime."""

from eicartan.transform.tables import regenerate_tables, render_tables

if __name__ == "__main__":
    print(render_tables(regenerate_tables()))
