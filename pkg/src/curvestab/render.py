"""Markdown, CSV and ASCII renderings of walls, chambers and reports."""
from __future__ import annotations

import csv
import io
from fractions import Fraction

from .auslander import enumerate_submodule_types
from .curve_model import conductor_lookup
from .genus import genus_value
from .numerical_k import NumClass
from .serialize import rat


def _val(x, g):
    return str(genus_value(x, g))


def term(k, c: NumClass) -> str:
    return f"{k}{c}" if k != 1 else str(c)


def decomposition_text(dec) -> str:
    """``w + u`` with multiplicities, larger length slope first."""
    return f"{term(dec.mw, dec.pw)} + {term(dec.mu, dec.pu)}"


def flip_text(fd, g=None) -> str:
    c1, b1 = fd.locus_dims
    return f"P^{{{_val(c1, g)}}} -> * <- P^{{{_val(b1, g)}}}"


def _md_table(header, rows):
    out = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    out += ["| " + " | ".join(str(x) for x in row) + " |" for row in rows]
    return "\n".join(out) + "\n"


def _csv(header, rows):
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(header)
    wr.writerows(rows)
    return buf.getvalue()


def table(header, rows, fmt="md"):
    return _csv(header, rows) if fmt == "csv" else _md_table(header, rows)


def node_wall_rows(walls, labels, flips, g=None):
    """Rows of the nodal wall table; ``flips`` maps wall labels to flip data."""
    rows = []
    for wl, lab in zip(walls, labels):
        fd = flips.get(lab)
        rows.append([rat(wl.locus), decomposition_text(wl.main),
                     "Yes" if wl.simple else "No",
                     flip_text(fd, g) if fd else "N/A"])
    return rows


NODE_HEADER = ["t", "Decomposition", "Simple?", "Flipped locus"]
PLANE_HEADER = ["Wall", "u", "w", "Equation"]
DIMS_HEADER = ["Wall", "dim M(u)", "dim M(w)", "dim Ext^1(u, w)", "dim Ext^1(w, u)",
               "phi(u)<phi(w)"]


def plane_wall_rows(walls, labels):
    rows = []
    for wl, lab in zip(walls, labels):
        dec = wl.main
        rows.append([lab, term(dec.mu, dec.pu), term(dec.mw, dec.pw), wl.hyperplane.equation()])
    return rows


def dims_rows(rows, g=None):
    def opt(x):
        return "-" if x is None else _val(x, g)
    return [[r.label, opt(r.dim_u), opt(r.dim_w), _val(r.ext_uw, g), _val(r.ext_wu, g),
             ", ".join(r.less_in)] for r in rows]


def ell_table_rows(n, dims, g=None):
    pairs = sorted(enumerate_submodule_types(n))
    return [["l1"] + [p[0] for p in pairs], ["l2"] + [p[1] for p in pairs],
            ["dim Ext^1(E, E)"] + [_val(dims[p], g) for p in pairs]]


def conductor_rows():
    rows = []
    for label, kind in (("Node", "node"), ("Cusp", "cusp"),
                        ("Ordinary n-uple point", "ordinary"), ("A_k", "A")):
        desc = conductor_lookup(kind)
        rows.append([label, desc.equation, desc.conductor_display])
    return rows


def chamber_rows(chambers, labels):
    return [[ch.label, "(" + ", ".join(rat(x) for x in ch.sample) + ")",
             ", ".join(labels[i] for i in ch.bounding) or "-"] for ch in chambers]


def ascii_triangle(chambers, size=24):
    """Character map of the chambers in the triangle; digit k marks chamber Rk."""
    lines = []
    for row in range(size, -1, -1):
        y = Fraction(row, size)
        chars = []
        for col in range(0, size + 1):
            x = Fraction(col, size)
            if x + y >= 1 or x == 0 or y == 0:
                chars.append("." if x + y <= 1 else " ")
                continue
            mark = "+"
            for ch in chambers:
                if _inside(ch.vertices, (x, y)):
                    mark = ch.label[1:] if len(ch.label) == 2 else "#"
                    break
            chars.append(mark)
        lines.append("".join(chars).rstrip())
    return "\n".join(lines) + "\n"


def _inside(poly, p):
    k = len(poly)
    sign = 0
    for i in range(k):
        a, b = poly[i], poly[(i + 1) % k]
        cr = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
        if cr == 0:
            return False
        s = 1 if cr > 0 else -1
        if sign and s != sign:
            return False
        sign = s
    return True


def report_markdown(rep, g=None) -> str:
    out = [f"# Wall-crossing report for v = {rep.v}", ""]
    out.append(f"- curve kind: {rep.kind}")
    out.append(f"- dim M(v) = {_val(rep.dim, g)}")
    out.append(f"- walls: {len(rep.walls)}, chambers: {len(rep.chambers)}")
    out.append("")
    out.append("## Walls")
    out.append("")
    if rep.kind == "node":
        out.append(table(NODE_HEADER,
                         node_wall_rows(rep.walls, rep.wall_labels, dict(rep.flips), g)))
    else:
        out.append(table(PLANE_HEADER, plane_wall_rows(rep.walls, rep.wall_labels)))
    if rep.rows:
        out.append("## Dimensions and chambers")
        out.append("")
        out.append(table(DIMS_HEADER, dims_rows(rep.rows, g)))
    out.append("## Chambers")
    out.append("")
    out.append(table(["Chamber", "Sample", "Bounding walls"],
                     chamber_rows(rep.chambers, rep.wall_labels)))
    if rep.adjacency:
        out.append("## Adjacent chambers")
        out.append("")
        out.append("\n".join(f"- {a} | {b} across {', '.join(w)}" for a, b, w in rep.adjacency))
        out.append("")
    if rep.flips:
        out.append("## Flips at simple walls")
        out.append("")
        out.append(table(["Wall", "u", "w", "b", "c", "base dim", "fibers (phi(u)<phi(w) side first)"],
                         [[lab, fd.u, fd.w, _val(fd.b, g), _val(fd.c, g), _val(fd.base_dim, g),
                           flip_text(fd, g)] for lab, fd in rep.flips]))
    out.append("## Endpoints")
    out.append("")
    for ep in rep.endpoints:
        tgt = f"{ep.target[0]}({ep.target[1]}, {ep.target[2]})"
        dim = "unknown" if ep.fiber_dim is None else ep.fiber_dim
        line = f"- {ep.endpoint}: target {tgt}, fiber {ep.fiber}, fiber dim {dim}"
        if ep.birational:
            line += ", birational"
        out.append(line)
        for note in ep.notes:
            out.append(f"  - {note}")
    out.append("")
    out.append("## Caveats")
    out.append("")
    out.extend(f"- {c}" for c in rep.caveats)
    return "\n".join(out) + "\n"
