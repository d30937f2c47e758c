"""Command-line front end: ``eicartan <command> [options]``.

Exit codes: 0 success, 1 invalid input, 2 failed verification or table mismatch.
"""

from __future__ import annotations

import argparse
import math
import sys
import time

from . import io
from .algebra import to_document
from .cartan import classify, recognize_simply_laced, valued_graph
from .ei_category import build_ei_quiver, category_algebra, category_document, enumerate_category
from .errors import EICartanError, InputError, NotCartanType, TableMismatch, TheoremViolation
from .ffield import DEFAULT_SEED, make_field, split_order
from .gls import build_H
from .transform.lusztig import lusztig_forward, lusztig_inverse
from .transform.prime_triple import check_prime, construct_prime_triple
from .transform.tables import regenerate_tables, render_tables
from .transform.theorem import auxiliary_prime, build_main_isomorphism

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2


class Output:
    def __init__(self, fmt, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, doc, text):
        if self.fmt == "json":
            print(io.dump(doc), file=self.stream)
        else:
            print(text, file=self.stream)


def _write(path, doc):
    with open(path, "w") as fh:
        fh.write(io.dump(doc) + "\n")


def cmd_validate(args, out):
    doc = io.read_document(args.input)
    rep = io.validate_document(doc)
    lines = [f"({name}) {'ok' if passed else 'FAILED: ' + msg}" for name, (passed, msg) in rep.checks.items()]
    out.emit({"command": "validate", "ok": rep.ok,
              "checks": {k: {"passed": p, "message": m} for k, (p, m) in rep.checks.items()}},
             "\n".join(lines + ["valid" if rep.ok else "invalid"]))
    return EXIT_OK if rep.ok else EXIT_INPUT


def cmd_construct(args, out):
    t = io.load_triple(args.input)
    pt = construct_prime_triple(t, args.prime)
    doc = {"command": "construct", "input": io.triple_to_document(t),
           "result": io.prime_triple_document(pt)}
    text = [f"p = {pt.p}: c_i = p^r_i d_i with r = {list(pt.factors.r)}, d = {list(pt.factors.d)}",
            f"M = {', '.join(map(str, pt.M))}",
            "C' ="] + ["  " + " ".join(f"{x:3d}" for x in row) for row in pt.C.entries] + [
            f"D' = diag({', '.join(map(str, pt.D))})",
            "Omega' = " + ", ".join(f"{u}->{v}" for u, v in sorted(pt.Omega))]
    out.emit(doc, "\n".join(text))
    return EXIT_OK


def _field_for(t, p, seed):
    fp = p if p else auxiliary_prime(t)
    return make_field(fp, math.lcm(*(split_order(c, fp)[1] for c in t.D)), seed)


def cmd_build(args, out):
    t = io.load_triple(args.input)
    f = _field_for(t, args.prime, args.seed)
    doc = {"command": "build", "input": io.triple_to_document(t), "field": f.describe()}
    text = [f"field F_{f.q} (p = {f.p}, m = {f.m})"]
    if args.which in ("eicat", "both"):
        cat = enumerate_category(build_ei_quiver(t))
        kc = category_algebra(cat, f)
        doc["dim_kC"] = kc.dim
        text.append(f"kC(C, D, Omega): {len(cat)} morphisms, dim {kc.dim}")
        if args.dump_category:
            _write(args.dump_category, category_document(cat))
        if args.dump_algebra:
            _write(args.dump_algebra + ".kC.json" if args.which == "both" else args.dump_algebra,
                   to_document(kc))
    if args.which in ("gls", "both"):
        h = build_H(t, f)
        doc["dim_H"] = h.dim
        text.append(f"H(C, D, Omega): dim {h.dim}")
        if args.dump_algebra:
            _write(args.dump_algebra + ".H.json" if args.which == "both" else args.dump_algebra,
                   to_document(h.algebra))
    out.emit(doc, "\n".join(text))
    return EXIT_OK


def cmd_verify(args, out):
    t = io.load_triple(args.input)
    start = time.perf_counter()
    mi = build_main_isomorphism(t, args.prime, seed=args.seed)
    rep = mi.report
    doc = {"command": "verify", **rep.to_document()}
    if args.timing:
        doc["seconds"] = round(time.perf_counter() - start, 3)
    if args.dump_algebra:
        _write(args.dump_algebra, {"kC": to_document(mi.kc), "H": to_document(mi.h.algebra)})
    text = [f"p = {rep.p} (field F_{rep.field['p']}^{rep.field['m']})",
            f"dim kC(C, D, Omega) = {rep.dim_kC}, dim H(C', D', Omega') = {rep.dim_H}"]
    text += [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in rep.checks.items()]
    if args.timing:
        text.append(f"time: {doc['seconds']} s")
    out.emit(doc, "\n".join(text))
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_classify(args, out):
    t = io.load_triple(args.input)
    comps = []
    for tc in classify(t.C, t.D):
        entry = {"vertices": list(tc.vertices), "type": tc.tag}
        sub = t.C.submatrix(tc.vertices)
        g = valued_graph(sub)
        if g.is_simply_laced():
            entry["name"] = recognize_simply_laced(g).name
        comps.append(entry)
    text = "\n".join(f"{c['vertices']}: {c['type']}" + (f" ({c['name']})" if c.get("name") else "")
                     for c in comps)
    out.emit({"command": "classify", "components": comps}, text)
    return EXIT_OK


def cmd_lusztig(args, out):
    if args.direction == "forward":
        t = io.load_triple(args.input)
        gs = lusztig_forward(t.C, t.D)
        doc = io.graph_document(gs)
        orbits = gs.orbits()
        text = [f"{len(gs.vertices)} vertices, {sum(gs.edges.values())} edges, "
                f"sigma orbits {[len(o) for o in orbits]}"]
        text += [f"  {a} -- {b}" + (f" (x{m})" if m > 1 else "") for a, b, m in doc["edges"]]
    else:
        fold = lusztig_inverse(io.load_graph(args.input))
        doc = {"n": fold.C.n, "C": [list(r) for r in fold.C.entries], "D": list(fold.D),
               "orbits": [[io._jsonable(v) for v in orb] for orb in fold.orbits]}
        text = ["C ="] + ["  " + " ".join(f"{x:3d}" for x in row) for row in fold.C.entries]
        text.append(f"D = diag({', '.join(map(str, fold.D))})")
    out.emit({"command": "lusztig", "direction": args.direction, "result": doc}, "\n".join(text))
    return EXIT_OK


def cmd_tables(args, out):
    rep = regenerate_tables(raise_on_mismatch=False)
    out.emit({"command": "tables", "rows": rep.to_document(), "ok": rep.ok}, render_tables(rep))
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for the field modulus search")
    common.add_argument("--timing", action="store_true",
                        help="include wall-clock time (reports are then no longer byte-identical)")
    ap = argparse.ArgumentParser(prog="eicartan", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, needs_input=True, prime=False, help=None):
        sp = sub.add_parser(name, help=help, parents=[common])
        if needs_input:
            sp.add_argument("--input", "-i", required=True)
        if prime:
            sp.add_argument("--prime", "-p", type=int, required=True,
                            help="characteristic: a prime, or 0")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, help="check (C1)-(C3), the symmetrizer and the orientation")
    add("construct", cmd_construct, prime=True, help="compute (C', D', Omega')")
    sp = add("build", cmd_build, prime=True, help="build kC and/or H for the input triple")
    sp.add_argument("--which", choices=("eicat", "gls", "both"), default="both")
    sp.add_argument("--dump-algebra")
    sp.add_argument("--dump-category")
    sp = add("verify", cmd_verify, prime=True, help="verify kC(C, D, Omega) = H(C', D', Omega')")
    sp.add_argument("--dump-algebra")
    add("classify", cmd_classify, help="Dynkin / Euclidean / indefinite per component")
    sp = add("lusztig", cmd_lusztig, help="graph with automorphism <-> (C, D)")
    sp.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    add("tables", cmd_tables, needs_input=False, help="regenerate the type tables")
    return ap


def main(argv=None, stream=None):
    stream = stream or sys.stdout
    args = build_parser().parse_args(argv)
    out = Output(args.format, stream)
    try:
        if getattr(args, "prime", None) is not None:
            check_prime(args.prime)
        return args.func(args, out)
    except (TheoremViolation, TableMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (InputError, NotCartanType, EICartanError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
