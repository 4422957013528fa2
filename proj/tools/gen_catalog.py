#!/usr/bin/env python3
"""Regenerates the bundled group catalog under data/catalog/.

Every group is written as permutation generators (one-based image lists).
Small groups use the right regular representation of a concrete model;
dihedral groups use the natural action on the vertices of a polygon.
Ids follow the "order.index" numbering of the Small Groups Library.
"""

import itertools
import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent / "data" / "catalog"


# ---------------------------------------------------------------- models

class Model:
    """Finite group given by an element list and a multiplication."""

    def __init__(self, elements, mul, gens):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.mul = mul
        self.gens = gens

    def regular_generators(self):
        out = []
        for g in self.gens:
            out.append([self.index[self.mul(e, g)] + 1 for e in self.elements])
        return out


def abelian(orders):
    elems = list(itertools.product(*[range(n) for n in orders]))

    def mul(a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, orders))

    gens = []
    for i in range(len(orders)):
        g = [0] * len(orders)
        g[i] = 1
        gens.append(tuple(g))
    return Model(elems, mul, gens)


def semidirect(orders, m, act):
    """(Z_orders) x| Z_m where the generator of Z_m acts by the map act."""
    base = list(itertools.product(*[range(n) for n in orders]))

    def power(k, v):
        for _ in range(k):
            v = act(v)
        return v

    def mul(a, b):
        (n1, h1), (n2, h2) = a, b
        moved = power(h1, n2)
        return (tuple((x + y) % n for x, y, n in zip(n1, moved, orders)),
                (h1 + h2) % m)

    elems = [(n, h) for h in range(m) for n in base]
    zero = tuple(0 for _ in orders)
    gens = []
    for i in range(len(orders)):
        g = [0] * len(orders)
        g[i] = 1
        gens.append((tuple(g), 0))
    gens.append((zero, 1))
    for n in base:
        assert power(m, n) == n
    return Model(elems, mul, gens)


def metacyclic(m, s, square):
    """<x, y | x^m, y^2 = x^square, y^-1 x y = x^s> on pairs (a, b)."""

    def mul(u, v):
        (a, b), (c, d) = u, v
        e = a + (c * (s if b else 1)) + (square if (b and d) else 0)
        return (e % m, b ^ d)

    elems = [(a, b) for b in range(2) for a in range(m)]
    return Model(elems, mul, [(1, 0), (0, 1)])


def product(left, right):
    elems = [(a, b) for a in left.elements for b in right.elements]

    def mul(u, v):
        return (left.mul(u[0], v[0]), right.mul(u[1], v[1]))

    e_l, e_r = left.elements[0], right.elements[0]
    gens = [(g, e_r) for g in left.gens] + [(e_l, g) for g in right.gens]
    return Model(elems, mul, gens)


def dihedral_polygon(n):
    """Symmetries of the n-gon: rotation and reflection fixing vertex 1."""
    rot = [(i + 1) % n + 1 for i in range(n)]
    ref = [(-i) % n + 1 for i in range(n)]
    return n, [rot, ref]


# ------------------------------------------------------------- closure

def closure_order(degree, gens):
    ident = tuple(range(1, degree + 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i] - 1] for i in range(degree))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def stats(degree, gens):
    elems = list(closure_order(degree, gens))
    index = {e: i for i, e in enumerate(elems)}
    ident = tuple(range(1, degree + 1))

    def mul(a, b):
        return tuple(b[a[i] - 1] for i in range(degree))

    def order(a):
        k, x = 1, a
        while x != ident:
            x = mul(x, a)
            k += 1
        return k

    orders = sorted(order(e) for e in elems)
    center = sum(1 for a in elems if all(mul(a, b) == mul(b, a) for b in elems))
    del index
    return len(elems), tuple(orders), center


# ------------------------------------------------------------- catalog

def cyc(n):
    return abelian([n])


def order8():
    return [
        ("8.1", "C8", cyc(8)),
        ("8.2", "C4xC2", abelian([4, 2])),
        ("8.3", "D8", semidirect([4], 2, lambda v: ((-v[0]) % 4,))),
        ("8.4", "Q8", metacyclic(4, -1, 2)),
        ("8.5", "C2xC2xC2", abelian([2, 2, 2])),
    ]


def order16():
    d8 = semidirect([4], 2, lambda v: ((-v[0]) % 4,))
    q8 = metacyclic(4, -1, 2)
    return [
        ("16.1", "C16", cyc(16)),
        ("16.2", "C4xC4", abelian([4, 4])),
        ("16.3", "(C4xC2):C2", semidirect([2, 2], 4, lambda v: (v[1], v[0]))),
        ("16.4", "C4:C4", semidirect([4], 4, lambda v: ((-v[0]) % 4,))),
        ("16.5", "C8xC2", abelian([8, 2])),
        ("16.6", "M16", semidirect([8], 2, lambda v: ((5 * v[0]) % 8,))),
        ("16.7", "D16", semidirect([8], 2, lambda v: ((-v[0]) % 8,))),
        ("16.8", "QD16", semidirect([8], 2, lambda v: ((3 * v[0]) % 8,))),
        ("16.9", "Q16", metacyclic(8, -1, 4)),
        ("16.10", "C4xC2xC2", abelian([4, 2, 2])),
        ("16.11", "C2xD8", product(abelian([2]), d8)),
        ("16.12", "C2xQ8", product(abelian([2]), q8)),
        ("16.13", "C4oD8", semidirect([4, 2], 2,
                                      lambda v: ((v[0] + 2 * v[1]) % 4, v[1]))),
        ("16.14", "C2xC2xC2xC2", abelian([2, 2, 2, 2])),
    ]


def order27():
    return [
        ("27.1", "C27", cyc(27)),
        ("27.2", "C9xC3", abelian([9, 3])),
        ("27.3", "He3", semidirect([3, 3], 3,
                                   lambda v: ((v[0] + v[1]) % 3, v[1]))),
        ("27.4", "C9:C3", semidirect([9], 3, lambda v: ((4 * v[0]) % 9,))),
        ("27.5", "C3xC3xC3", abelian([3, 3, 3])),
    ]


def small():
    out = [("1.1", "1", None)]
    for p in (2, 3, 5, 7, 11, 13):
        out.append((f"{p}.1", f"C{p}", cyc(p)))
    out += [
        ("4.1", "C4", cyc(4)),
        ("4.2", "C2xC2", abelian([2, 2])),
        ("9.1", "C9", cyc(9)),
        ("9.2", "C3xC3", abelian([3, 3])),
    ]
    return out


def partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield [k] + rest


def disjoint_cycles(orders):
    """C_{n1} x ... x C_{nk} acting on disjoint cycles."""
    degree = sum(orders)
    gens, start = [], 0
    for n in orders:
        g = list(range(1, degree + 1))
        for i in range(n):
            g[start + i] = start + (i + 1) % n + 1
        gens.append(g)
        start += n
    return degree, gens


def abelian_family():
    out = []
    for p, top in ((2, 6), (3, 4)):
        for e in range(1, top + 1):
            for part in partitions(e):
                inv = sorted(p ** k for k in part)
                label = "x".join(str(q) for q in inv)
                out.append((f"{p ** e}.abelian_{label}", "abelian " + label,
                            disjoint_cycles(inv)))
    out.append(("512.abelian_2x4x4x16", "abelian 2x4x4x16",
                disjoint_cycles([2, 4, 4, 16])))
    return out


def family_groups():
    out = []
    for l in range(3, 9):
        n = 2 ** (l - 1)
        degree, gens = dihedral_polygon(n)
        out.append((f"{2 ** l}.dihedral", f"D{2 ** l}", (degree, gens)))
        out.append((f"{2 ** l}.quaternion", f"Q{2 ** l}",
                    metacyclic(n, -1, n // 2)))
        if l >= 4:
            out.append((f"{2 ** l}.semidihedral", f"SD{2 ** l}",
                        metacyclic(n, n // 2 - 1, 0)))
    return out


def write_catalog(name, entries, extra_tags=()):
    folder = ROOT / name
    folder.mkdir(parents=True, exist_ok=True)
    ids = []
    for gid, label, model in entries:
        if model is None:
            degree, gens = 1, [[1]]
        elif isinstance(model, tuple):
            degree, gens = model
        else:
            degree, gens = len(model.elements), model.regular_generators()
        order = int(gid.split(".")[0])
        got = len(closure_order(degree, gens))
        if got != order:
            sys.exit(f"{gid}: closure has order {got}, expected {order}")
        doc = {"name": gid, "degree": degree, "generators": gens,
               "tags": [label, *extra_tags]}
        (folder / f"{gid}.json").write_text(json.dumps(doc, separators=(",", ":")) + "\n")
        ids.append(gid)
    (folder / "index.json").write_text(json.dumps({"groups": ids}, indent=1) + "\n")


def check_distinct(entries):
    seen = {}
    for gid, _, model in entries:
        key = stats(len(model.elements), model.regular_generators())
        if key in seen:
            # same order statistics and center size; allowed only when the
            # pair is known to differ elsewhere
            print(f"note: {gid} and {seen[key]} share order statistics")
        seen[key] = gid


def main():
    check_distinct(order16())
    check_distinct(order27())
    write_catalog("small", small(), ("bundled",))
    write_catalog("order8", order8(), ("bundled",))
    write_catalog("order16", order16(), ("bundled",))
    write_catalog("order27", order27(), ("bundled",))
    write_catalog("abelian", abelian_family(), ("bundled", "abelian"))
    write_catalog("families", family_groups(), ("bundled", "coclass1"))


if __name__ == "__main__":
    main()
