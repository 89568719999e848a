#!/usr/bin/env python3
"""Regenerates the braid-built fixtures in this directory.

Braid closures use the library's PD convention: sigma_i (positive) at strands
i, i+1 is X[inL, outL, outR, inR], sigma_i^-1 is X[inR, inL, outL, outR].
Ribbon fixtures insert band crossings into a braid whose closure is an
unlink; every band crossing yields one band between the two strands.
"""

import json
import re
from pathlib import Path

HERE = Path(__file__).resolve().parent


def label_key(s):
    return (0, int(s), s) if s.isdigit() else (1, 0, s)


class Closure:
    """Closure of a braid word; letters are (index, sign, is_band)."""

    def __init__(self, strands, letters):
        self.counter = 0
        top = [self.fresh() for _ in range(strands)]
        cur = list(top)
        self.crossings = []
        # band crossing -> (new labels, base labels they stand in for)
        self.band_inputs = []
        for k, (i, sign, is_band) in enumerate(letters):
            l, r = cur[i - 1], cur[i]
            if is_band:
                nl, nr = f"g{k}a", f"g{k}b"
                self.band_inputs.append(((l, r), (nl, nr)))
            else:
                nl, nr = self.fresh(), self.fresh()
            if sign > 0:
                self.crossings.append([l, nl, nr, r])
            else:
                self.crossings.append([r, l, nl, nr])
            cur[i - 1], cur[i] = nl, nr
        self.rename = {f: t for f, t in zip(cur, top) if f != t}
        self.crossings = [[self.rename.get(e, e) for e in x] for x in self.crossings]
        used = {e for x in self.crossings for e in x}
        self.loops = [t for t in top if t not in used]

    def fresh(self):
        self.counter += 1
        return str(self.counter)

    def pd(self):
        parts = ["X[" + ",".join(x) + "]" for x in self.crossings]
        parts += [f"O[{l}]" for l in self.loops]
        return " ".join(parts)

    def arcs(self):
        parent = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x in self.crossings:
            for e in x:
                find(e)
            a, b = find(x[1]), find(x[3])
            if a != b:
                parent[a] = b
        for l in self.loops:
            find(l)
        groups = {}
        for e in parent:
            groups.setdefault(find(e), []).append(e)
        return {e: min(g, key=label_key) for g in groups.values() for e in g}


def letters(word, band_positions=()):
    out = []
    for k, g in enumerate(word):
        out.append((abs(g), 1 if g > 0 else -1, k in band_positions))
    return out


def ribbon(strands, word, band_positions):
    """Base: the word with band letters removed. K1: the full word."""
    base_word = [g for k, g in enumerate(word) if k not in band_positions]
    base = Closure(strands, letters(base_word))
    # Label base and K1 alike: K1 renumbers nothing but band outputs.
    k1 = Closure(strands, letters(word, band_positions))
    base_arc = base.arcs()

    def base_label(e):
        return base.rename.get(e, e)

    # The band crossing's outputs continue the base edges that entered it.
    stand_in = {}
    bands = []
    for (l, r), (nl, nr) in k1.band_inputs:
        stand_in[nl] = base_label(l)
        stand_in[nr] = base_label(r)
        bands.append([base_label(l), base_label(r)])
    k1_map = {}
    for arc in sorted(set(k1.arcs().values()), key=label_key):
        src = stand_in.get(arc, arc)
        src = k1.rename.get(src, src)
        k1_map[arc] = base_arc[base_label(src)]
    return base, k1, bands, k1_map


def write(name, text):
    (HERE / name).write_text(text if text.endswith("\n") else text + "\n")


def write_json(name, obj):
    write(name, json.dumps(obj, indent=2))


def main():
    # Torus knots as PD codes, for the braid-versus-PD route checks.
    write("torus_5_2.pd", Closure(2, letters([1] * 5)).pd())
    write("torus_7_2.pd", Closure(2, letters([1] * 7)).pd())
    write("square.pd", Closure(3, letters([1, 1, 1, -2, -2, -2])).pd())
    write("granny.pd", Closure(3, letters([1, 1, 1, 2, 2, 2])).pd())

    # Square knot = closure of s1^3 s2 s1^-3 s2^-1, one band on a 2-component unlink.
    base, k1, bands, k1_map = ribbon(3, [1, 1, 1, 2, -1, -1, -1, -2], {7})
    k0_arc = base.arcs()["1"]
    write_json("ribbon_square.json", {
        "base": base.pd(), "bands": bands, "k1": k1.pd(), "k1_map": k1_map,
        "k0": "O[u]", "k0_map": {"u": k0_arc}})

    # Square # square from a 3-component unlink and two bands.
    word = [1, 1, 1, 2, -1, -1, -1, -2, 3, 4, 4, 4, 5, -4, -4, -4, -5]
    base, k1, bands, k1_map = ribbon(6, word, {7, 16})
    write_json("ribbon_square_pair.json", {
        "base": base.pd(), "bands": bands, "k1": k1.pd(), "k1_map": k1_map,
        "k0": "O[u]", "k0_map": {"u": base.arcs()["1"]}})

    # Negative corpus derived from the square fixture.
    good = json.loads((HERE / "ribbon_square.json").read_text())
    bad = dict(good, bands=[])
    write_json("neg_band_count.json", bad)
    bad = dict(good, bands=[[good["bands"][0][0], "999"]])
    write_json("neg_band_unknown.json", bad)
    arcs = sorted(set(good["k1_map"].values()), key=label_key)
    bad_map = dict(good["k1_map"])
    first = next(iter(bad_map))
    bad_map[first] = next(a for a in arcs if a != bad_map[first])
    write_json("neg_map_wrong_arc.json", dict(good, k1_map=bad_map))
    bad_map = dict(good["k1_map"])
    bad_map.pop(first)
    write_json("neg_map_missing.json", dict(good, k1_map=bad_map))

    # Closure of s1^2 with the second crossing replaced by a marker. Both
    # resolutions are one circle, so the surface has Euler characteristic 1.
    twist = Closure(2, letters([1, 1]))
    x = twist.crossings[-1]
    marked = [f"X[{','.join(c)}]" for c in twist.crossings[:-1]]
    marked.append(f"M[{','.join(x)},0]")
    write("ch_projective.ch", " ".join(marked))


if __name__ == "__main__":
    main()
