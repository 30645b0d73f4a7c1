#!/usr/bin/env python3
"""Transcribe the three E7 curve tables (tikz source) into fixture folders.

Usage: transcribe_tables.py SOURCE.md OUTDIR

Each row becomes OUTDIR/table<t>_row<r>/ with quiver.txt, pi.txt,
diagram.txt and root.txt.  Vertex labels are the E7 labels
(chain 2-3-4-7-5-1, vertex 6 below 7).
"""
import re
import sys
from fractions import Fraction
from pathlib import Path

# tikz node name -> E7 vertex label, fixed by the drawings' node placement
NODE_LABEL = {"7": 2, "1": 3, "2": 4, "3": 7, "4": 5, "5": 1, "6": 6}

# display order 2 3 4 7 5 1 / 6
DISPLAY = [2, 3, 4, 7, 5, 1, 6]
ROOTS = {
    1: "1 2 3 3 2 1 1",
    2: "1 2 3 3 2 1 1",
    3: "1 2 2 3 2 1 1",
}

PT = r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)"


def root_vector(display_values):
    vals = [int(v) for v in display_values.split()]
    beta = [0] * 7
    for label, v in zip(DISPLAY, vals):
        beta[label - 1] = v
    return beta


def parse_quiver(block):
    arrows = []
    for kind, a, b in re.findall(r"\\path\[(<-|->)\]\s*\((\d)\)\s*edge\s*\((\d)\)", block):
        ta, tb = NODE_LABEL[a], NODE_LABEL[b]
        arrows.append((ta, tb) if kind == "->" else (tb, ta))
    if len(arrows) != 6:
        raise ValueError(f"expected 6 arrows, got {arrows}")
    return arrows


def parse_pi(block):
    m = re.search(r"\\begin\{smallmatrix\}(.*?)\\end\{smallmatrix\}", block, re.S)
    rows = [r for r in m.group(1).split("\\\\") if r.strip()]
    second = [int(t) for t in rows[1].replace("&", " ").split()]
    if sorted(second) != list(range(1, 8)):
        raise ValueError(f"bad permutation {second}")
    return second


def parse_curve(block):
    marked = sorted(int(x) for x, _ in re.findall(r"\\node at " + PT, block))
    segs = []
    for line in re.findall(r"\\draw\s*(.*?);", block):
        pts = [(int(x), int(y)) for x, y in re.findall(PT, line)]
        segs.append(pts)
    # each segment is (x1,y0) (x1,h) (x2,h) (x2,y3)
    arcs = []  # (a, b, side, a_is_b, b_is_b)
    for pts in segs:
        (x1, y0), (_, h), (_, _), (x2, y3) = pts
        side = 1 if h > 0 else -1
        arcs.append([x1, y0, x2, y3, side])
    # expand b-verticals: a segment starting or ending at y=-9 with h>0 means
    # the curve crosses the line at that x and drops to b
    # an upper segment drawn from y<0 drops to b, unless that x already
    # carries a lower arc (the vertical then just overlaps it)
    has_lower = set()
    for x1, y0, x2, y3, side in arcs:
        if side < 0:
            has_lower.update(x for x, y in ((x1, y0), (x2, y3)) if y == 0)
    edges = []  # (u, v, side) with u,v in x-values or 'b'
    for x1, y0, x2, y3, side in arcs:
        if side > 0:
            edges.append((x1, x2, 1))
            for x, y in ((x1, y0), (x2, y3)):
                if y < 0 and x not in has_lower:
                    edges.append((x, "b", -1))
        else:
            u = "b" if y0 < 0 else x1
            v = "b" if y3 < 0 else x2
            edges.append((u, v, -1))
    adj = {}
    for u, v, side in edges:
        adj.setdefault(u, []).append((v, side))
        adj.setdefault(v, []).append((u, side))
    starts = [x for x in marked if x in adj]
    if len(starts) != 1 or len(adj[starts[0]]) != 1:
        raise ValueError(f"start ambiguous: {starts}")
    path = [starts[0]]
    prev = None
    cur = starts[0]
    while cur != "b":
        nxt = [e for e in adj[cur] if e[0] != prev or prev is None]
        if prev is not None:
            used = False
            rest = []
            for e in adj[cur]:
                if e[0] == prev and not used:
                    used = True
                    continue
                rest.append(e)
            nxt = rest
        if not nxt and cur not in marked and prev is not None:
            # drawing stops on the line without the final drop; the curve
            # can only continue by the lower arc to b
            print(f"note: curve ends at x={cur} on the line, closing to b",
                  file=sys.stderr)
            nxt = [("b", -1)]
        if len(nxt) != 1:
            raise ValueError(f"branching at {cur}: {adj[cur]}")
        prev, cur = cur, nxt[0][0]
        path.append(cur)
    start_index = marked.index(path[0]) + 1
    xs = path[1:-1]
    top = max(max(marked), max(xs)) + 1
    bottom = min(min(marked), min(xs)) - 1

    def position(x):
        if x < marked[0]:
            return Fraction(x - bottom, marked[0] - bottom)
        for k in range(len(marked) - 1):
            if marked[k] < x < marked[k + 1]:
                return k + 1 + Fraction(x - marked[k], marked[k + 1] - marked[k])
        if x > marked[-1]:
            return len(marked) + Fraction(x - marked[-1], top - marked[-1])
        raise ValueError(f"crossing at a marked point {x}")

    return start_index, [position(x) for x in xs]


def fmt(q):
    return f"{q.numerator}/{q.denominator}"


def main():
    src = Path(sys.argv[1]).read_text()
    out = Path(sys.argv[2])
    tables = re.findall(r"\\begin\{tabular\}\{c\|c\|c\}(.*?)\\end\{tabular\}", src, re.S)
    if len(tables) != 3:
        raise SystemExit(f"expected 3 tables, found {len(tables)}")
    total = 0
    for t, body in enumerate(tables, start=1):
        rows = [r for r in body.split("\\hline") if "rounded corners" in r]
        beta = root_vector(ROOTS[t])
        for r, row in enumerate(rows, start=1):
            pics = re.findall(r"\\begin\{tikzpicture\}(.*?)\\end\{tikzpicture\}", row, re.S)
            quiver_block = next(p for p in pics if "edge" in p)
            curve_block = next(p for p in pics if p.startswith("[rounded corners"))
            arrows = parse_quiver(quiver_block)
            pi = parse_pi(row)
            start, crossings = parse_curve(curve_block)
            d = out / f"table{t}_row{r}"
            d.mkdir(parents=True, exist_ok=True)
            (d / "quiver.txt").write_text(
                "n 7\n" + "".join(f"arrow {a} {b}\n" for a, b in arrows))
            (d / "pi.txt").write_text(" ".join(map(str, pi)) + "\n")
            (d / "diagram.txt").write_text(
                f"start {start}\ncrossings {' '.join(fmt(q) for q in crossings)}\n")
            (d / "root.txt").write_text(" ".join(map(str, beta)) + "\n")
            total += 1
    print(f"wrote {total} rows")


if __name__ == "__main__":
    main()
