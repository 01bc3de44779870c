#!/usr/bin/env python3
"""Regenerates the table-driven fixture files under fixtures/.

The hand-written fixtures (DISCRETE2, INTERVAL, PARALLEL_NOCOEQ, SPLITMONO)
are small enough to maintain directly; the modular-arithmetic rings and the
matrix category are emitted here so their composition and addition tables
stay typo-free.
"""

import os

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def ring_file(name, modulus, w_members, comment):
    lines = [f"# {comment}"]
    lines.append("object •")
    for k in range(modulus):
        lines.append(f"morphism {k} : • -> •")
    lines.append("identity • = 1")
    for g in range(modulus):
        for f in range(modulus):
            lines.append(f"compose {g} . {f} = {(g * f) % modulus}")
    for w in w_members:
        lines.append(f"w {w}")
    lines.append("zero • • = 0")
    for f in range(modulus):
        for g in range(modulus):
            lines.append(f"add {f} + {g} = {(f + g) % modulus}")
    for f in range(modulus):
        lines.append(f"neg {f} = {(-f) % modulus}")
    write(name, lines)


def mat_f2_file():
    """Matrices over the two-element field between ranks 0, 1 and 2.

    A morphism rA -> rB is a B x A matrix acting on column vectors;
    composition is matrix multiplication. Addition is entrywise xor.
    """
    ranks = [0, 1, 2]

    def matrices(rows, cols):
        cells = rows * cols
        for bits in range(1 << cells):
            yield tuple((bits >> k) & 1 for k in range(cells))

    def mat_name(a, b, entries):
        if not entries:
            return f"m{a}to{b}"
        return f"m{a}to{b}_" + "".join(str(e) for e in entries)

    morphisms = []  # (name, a, b, entries) with entries row-major, b rows x a cols
    for a in ranks:
        for b in ranks:
            for entries in matrices(b, a):
                morphisms.append((mat_name(a, b, entries), a, b, entries))

    def multiply(gb, gc, g_entries, fa, fb, f_entries):
        # g: fb -> gc (gc x gb matrix), f: fa -> fb; result gc x fa
        assert gb == fb
        out = []
        for row in range(gc):
            for col in range(fa):
                acc = 0
                for k in range(gb):
                    acc ^= g_entries[row * gb + k] & f_entries[k * fa + col]
                out.append(acc)
        return tuple(out)

    lines = ["# matrices over the field with two elements, ranks 0..2"]
    for r in ranks:
        lines.append(f"object r{r}")
    for name, a, b, _ in morphisms:
        lines.append(f"morphism {name} : r{a} -> r{b}")
    for r in ranks:
        ident = tuple(1 if i == j else 0 for i in range(r) for j in range(r))
        lines.append(f"identity r{r} = {mat_name(r, r, ident)}")
    for gname, ga, gb, ge in morphisms:
        for fname, fa, fb, fe in morphisms:
            if fb != ga:
                continue
            h = multiply(ga, gb, ge, fa, fb, fe)
            lines.append(f"compose {gname} . {fname} = {mat_name(fa, gb, h)}")
    for r in ranks:
        ident = tuple(1 if i == j else 0 for i in range(r) for j in range(r))
        lines.append(f"w {mat_name(r, r, ident)}")
    for a in ranks:
        for b in ranks:
            zero = tuple(0 for _ in range(a * b))
            lines.append(f"zero r{a} r{b} = {mat_name(a, b, zero)}")
    for fname, fa, fb, fe in morphisms:
        for gname, ga, gb, ge in morphisms:
            if (fa, fb) != (ga, gb):
                continue
            s = tuple(x ^ y for x, y in zip(fe, ge))
            lines.append(f"add {fname} + {gname} = {mat_name(fa, fb, s)}")
    for fname, fa, fb, fe in morphisms:
        lines.append(f"neg {fname} = {fname}")
    write("MAT_F2.cat", lines)


def write(name, lines):
    path = os.path.join(OUT_DIR, name)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(lines)} lines)")


def main():
    ring_file("RING_Z2.cat", 2, [1], "integers mod 2 as a one-object category")
    ring_file("RING_Z6.cat", 6, [1, 3], "integers mod 6 as a one-object category")
    ring_file("RING_Z8.cat", 8, [0, 1, 2, 4], "integers mod 8 as a one-object category")
    mat_f2_file()


if __name__ == "__main__":
    main()
