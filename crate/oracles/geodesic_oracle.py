"""Brute-force geodesics on a perimeter-halved polygon.

Enumerates every crossing sequence up to a fixed depth, develops the
polygon copies with complex affine maps and keeps the straight segments
that cross exactly those edges while clearing every vertex image.

Usage: geodesic_oracle.py POLYGON_JSON FOLD [DEPTH [BUDGET]]
Prints shortest distances between the four cone points and, for each
pair, all geodesic lengths up to BUDGET (default 2.5).
"""

import json
import sys

CLEAR = 1e-9


def cone_points(n, fold):
    cones = [[fold], [(fold + n // 2) % n]]
    for k in range(1, n // 2):
        cones.append([(fold + k) % n, (fold - k) % n])
    return cones


def partner(n, fold, e):
    return (2 * fold - 1 - e) % n


def cross(a, b):
    return (a.conjugate() * b).imag


def seg_dist(p, a, b):
    d = b - a
    if abs(d) == 0:
        return abs(p - a)
    t = max(0.0, min(1.0, ((p - a) * d.conjugate()).real / abs(d) ** 2))
    return abs(p - (a + d * t))


def transition(v, n, fold, e):
    """Map z -> m z + c sending the copy across edge e into place."""
    p = partner(n, fold, e)
    src0, src1 = v[(p + 1) % n], v[p]
    dst0, dst1 = v[e], v[(e + 1) % n]
    m = (dst1 - dst0) / (src1 - src0)
    c = dst0 - m * src0
    # The neighbour must land on the far side of the edge.
    cen = sum(v) / n
    side = lambda z: cross(dst1 - dst0, z - dst0)
    assert side(cen) * side(m * cen + c) < 0
    return m, c


def compose(f, g):
    # f after g
    return f[0] * g[0], f[0] * g[1] + f[1]


def check(v, n, fold, sv, tv, seq, maps):
    s = v[sv]
    copies = [(1 + 0j, 0j)]
    for e in seq:
        copies.append(compose(copies[-1], maps[e]))
    m, c = copies[-1]
    t = m * v[tv] + c
    d = t - s
    lam = [0.0]
    for k, e in enumerate(seq):
        mk, ck = copies[k]
        a = mk * v[e] + ck
        b = mk * v[(e + 1) % n] + ck
        q = b - a
        den = cross(d, q)
        if abs(den) < 1e-300:
            return None
        w = a - s
        l = cross(w, q) / den
        mu = cross(w, d) / den
        if not (lam[-1] < l < 1.0):
            return None
        if mu * abs(q) < CLEAR or (1 - mu) * abs(q) < CLEAR:
            return None
        lam.append(l)
    lam.append(1.0)
    for k, (mk, ck) in enumerate(copies):
        p0, p1 = s + d * lam[k], s + d * lam[k + 1]
        for w in range(n):
            if (k == 0 and w == sv) or (k == len(copies) - 1 and w == tv):
                continue
            if seg_dist(mk * v[w] + ck, p0, p1) < CLEAR:
                return None
    return abs(d)


def enumerate_all(v, fold, depth, budget):
    n = len(v)
    maps = [transition(v, n, fold, e) for e in range(n)]
    cones = cone_points(n, fold)
    cone_of = {x: i for i, c in enumerate(cones) for x in c}
    found = {}

    def visit(seq, entry):
        for sv in range(n):
            for tv in range(n):
                if cone_of[sv] == cone_of[tv]:
                    continue
                if not seq and (tv == (sv + 1) % n or sv == (tv + 1) % n):
                    # A boundary edge and its glued twin are one geodesic.
                    e = sv if tv == (sv + 1) % n else tv
                    length = check(v, n, fold, sv, tv, seq, maps)
                    key = ("seam", frozenset([e, partner(n, fold, e)]))
                else:
                    length = check(v, n, fold, sv, tv, seq, maps)
                    key = (sv, tuple(seq), tv)
                if length is not None and length <= budget:
                    found.setdefault((cone_of[sv], cone_of[tv]), {})[key] = length
        if len(seq) == depth:
            return
        for e in range(n):
            if e == entry:
                continue
            visit(seq + [e], partner(n, fold, e))

    visit([], None)
    return cones, found


def main():
    pts = json.load(open(sys.argv[1]))
    fold = int(sys.argv[2])
    depth = int(sys.argv[3]) if len(sys.argv) > 3 else 6
    v = [complex(x, y) for x, y in pts]
    budget = float(sys.argv[4]) if len(sys.argv) > 4 else 2.5
    cones, found = enumerate_all(v, fold, depth, budget)
    out = {"shortest": {}, "lengths": {}}
    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            vals = sorted(found.get((i, j), {}).values())
            out["shortest"][f"{i}{j}"] = vals[0] if vals else None
            out["lengths"][f"{i}{j}"] = vals
    json.dump(out, sys.stdout, indent=1)


if __name__ == "__main__":
    main()
