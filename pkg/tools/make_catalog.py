"""Regenerate the bundled group catalog (src/indepgen/data/catalog/*.grp).

Each entry lists generators in cycle notation; the expected order is checked
by closure before a file is written.
"""

from __future__ import annotations

from pathlib import Path

from indepgen.perm import Permutation, group_closure

OUT = Path(__file__).resolve().parents[1] / "src" / "indepgen" / "data" / "catalog"


def cyc(text, degree):
    from indepgen.perm import parse_permutation
    return parse_permutation(text, degree)


def from_map(points, f):
    """Permutation of 1..len(points) induced by f on the listed points."""
    pos = {p: i for i, p in enumerate(points)}
    return Permutation.from_zero_based([pos[f(p)] for p in points])


def gf8():
    # F_8 = F_2[t]/(t^3 + t + 1), elements as 3-bit ints
    def mul(a, b):
        r = 0
        for i in range(3):
            if b >> i & 1:
                r ^= a << i
        for i in (4, 3):
            if r >> i & 1:
                r ^= 0b1011 << (i - 3)
        return r
    return list(range(8)), mul


def gf9():
    # F_9 = F_3[i]/(i^2 + 1), element (a, b) = a + b i
    pts = [(a, b) for a in range(3) for b in range(3)]

    def mul(x, y):
        return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)

    def add(x, y):
        return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)
    return pts, mul, add


def affine_f8(frobenius=False):
    pts, mul = gf8()
    gens = [from_map(pts, lambda x: x ^ 1), from_map(pts, lambda x: mul(x, 2))]
    if frobenius:
        gens.append(from_map(pts, lambda x: mul(x, x)))
    return gens


def affine_f9():
    pts, mul, add = gf9()
    return [from_map(pts, lambda x: add(x, (1, 0))), from_map(pts, lambda x: mul(x, (1, 1)))]


def vectors_f3():
    return [(a, b) for a in range(3) for b in range(3)]


def linear_f3(mats, affine):
    pts = vectors_f3() if affine else [v for v in vectors_f3() if v != (0, 0)]

    def act(m):
        return lambda v: ((m[0][0] * v[0] + m[0][1] * v[1]) % 3, (m[1][0] * v[0] + m[1][1] * v[1]) % 3)
    gens = [from_map(pts, act(m)) for m in mats]
    if affine:
        gens.append(from_map(pts, lambda v: ((v[0] + 1) % 3, v[1])))
    return gens


def heisenberg():
    pts = vectors_f3()
    return [from_map(pts, lambda v: ((v[0] + v[1]) % 3, v[1])),
            from_map(pts, lambda v: (v[0], (v[1] + 1) % 3))]


def projective_line(q):
    """PSL(2, q) on the q + 1 points of the projective line, q prime."""
    inf = q
    pts = list(range(q + 1))

    def shift(x):
        return inf if x == inf else (x + 1) % q

    def flip(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return (-pow(x, -1, q)) % q
    return [from_map(pts, shift), from_map(pts, flip)]


A5 = ["(1 2 3 4 5)", "(1 2 3)"]

# label: (description, degree, generators, order)
ENTRIES = {
    "trivial": ("trivial group", 1, [], 1),
    "c2": ("cyclic of order 2", 2, ["(1 2)"], 2),
    "c3": ("cyclic of order 3", 3, ["(1 2 3)"], 3),
    "c4": ("cyclic of order 4", 4, ["(1 2 3 4)"], 4),
    "c5": ("cyclic of order 5", 5, ["(1 2 3 4 5)"], 5),
    "c6": ("cyclic of order 6", 6, ["(1 2 3 4 5 6)"], 6),
    "c7": ("cyclic of order 7", 7, ["(1 2 3 4 5 6 7)"], 7),
    "c8": ("cyclic of order 8", 8, ["(1 2 3 4 5 6 7 8)"], 8),
    "c9": ("cyclic of order 9", 9, ["(1 2 3 4 5 6 7 8 9)"], 9),
    "c15": ("cyclic of order 15", 8, ["(1 2 3)(4 5 6 7 8)"], 15),
    "c2xc2": ("Klein four group, regular", 4, ["(1 2)(3 4)", "(1 3)(2 4)"], 4),
    "c2xc4": ("C2 x C4", 6, ["(1 2)", "(3 4 5 6)"], 8),
    "c2xc6": ("C2 x C2 x C3", 7, ["(1 2)", "(3 4)", "(5 6 7)"], 12),
    "c2^3": ("elementary abelian of order 8", 6, ["(1 2)", "(3 4)", "(5 6)"], 8),
    "c2^4": ("elementary abelian of order 16", 8, ["(1 2)", "(3 4)", "(5 6)", "(7 8)"], 16),
    "c3xc3": ("elementary abelian of order 9", 6, ["(1 2 3)", "(4 5 6)"], 9),
    "c3^3": ("elementary abelian of order 27", 9, ["(1 2 3)", "(4 5 6)", "(7 8 9)"], 27),
    "c4xc4": ("C4 x C4", 8, ["(1 2 3 4)", "(5 6 7 8)"], 16),
    "s3": ("symmetric of degree 3", 3, ["(1 2 3)", "(1 2)"], 6),
    "d8": ("dihedral of order 8", 4, ["(1 2 3 4)", "(1 3)"], 8),
    "d10": ("dihedral of order 10", 5, ["(1 2 3 4 5)", "(2 5)(3 4)"], 10),
    "d12": ("dihedral of order 12", 6, ["(1 2 3 4 5 6)", "(2 6)(3 5)"], 12),
    "d14": ("dihedral of order 14", 7, ["(1 2 3 4 5 6 7)", "(2 7)(3 6)(4 5)"], 14),
    "d16": ("dihedral of order 16", 8, ["(1 2 3 4 5 6 7 8)", "(2 8)(3 7)(4 6)"], 16),
    "sd16": ("semidihedral of order 16", 8, ["(1 2 3 4 5 6 7 8)", "(2 4)(3 7)(6 8)"], 16),
    "q8": ("quaternion, regular", 8, ["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], 8),
    "q8xc2": ("quaternion times C2", 10, ["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)", "(9 10)"], 16),
    "d8xc2": ("dihedral of order 8 times C2", 6, ["(1 2 3 4)", "(1 3)", "(5 6)"], 16),
    "dic12": ("dicyclic of order 12", 7, ["(1 2 3)", "(2 3)(4 5 6 7)"], 12),
    "heis27": ("extraspecial of order 27, exponent 3", 9, heisenberg, 27),
    "a4": ("alternating of degree 4", 4, ["(1 2 3)", "(1 2)(3 4)"], 12),
    "s4": ("symmetric of degree 4", 4, ["(1 2 3 4)", "(1 2)"], 24),
    "a4xc2": ("A4 x C2", 6, ["(1 2 3)", "(1 2)(3 4)", "(5 6)"], 24),
    "a4xc3": ("A4 x C3", 7, ["(1 2 3)", "(1 2)(3 4)", "(5 6 7)"], 36),
    "s4xc2": ("S4 x C2", 6, ["(1 2 3 4)", "(1 2)", "(5 6)"], 48),
    "s4xs3": ("S4 x S3", 7, ["(1 2 3 4)", "(1 2)", "(5 6 7)", "(5 6)"], 144),
    "s3xs3": ("S3 x S3", 6, ["(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"], 36),
    "s3xc3": ("S3 x C3", 6, ["(1 2 3)", "(1 2)", "(4 5 6)"], 18),
    "d8xs3": ("D8 x S3", 7, ["(1 2 3 4)", "(1 3)", "(5 6 7)", "(5 6)"], 48),
    "c3wrc2": ("C3 wr C2", 6, ["(1 2 3)", "(1 4)(2 5)(3 6)"], 18),
    "c2wrc3": ("C2 wr C3", 6, ["(1 2)", "(1 3 5)(2 4 6)"], 24),
    "s3wrc2": ("S3 wr C2", 6, ["(1 2 3)", "(1 2)", "(1 4)(2 5)(3 6)"], 72),
    "a4wrc2": ("A4 wr C2", 8, ["(1 2 3)", "(1 2)(3 4)", "(1 5)(2 6)(3 7)(4 8)"], 288),
    "f20": ("Frobenius of order 20, AGL(1,5)", 5, ["(1 2 3 4 5)", "(2 3 5 4)"], 20),
    "f21": ("Frobenius of order 21", 7, ["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"], 21),
    "agl1_7": ("AGL(1,7)", 7, ["(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"], 42),
    "agl1_8": ("AGL(1,8)", 8, lambda: affine_f8(False), 56),
    "agaml1_8": ("affine semilinear group of F_8", 8, lambda: affine_f8(True), 168),
    "agl1_9": ("AGL(1,9)", 9, affine_f9, 72),
    "sl2_3": ("SL(2,3) on nonzero vectors", 8, lambda: linear_f3([((1, 1), (0, 1)), ((1, 0), (1, 1))], False), 24),
    "gl2_3": ("GL(2,3) on nonzero vectors", 8, lambda: linear_f3([((1, 1), (0, 1)), ((1, 0), (1, 1)), ((2, 0), (0, 1))], False), 48),
    "asl2_3": ("ASL(2,3)", 9, lambda: linear_f3([((1, 1), (0, 1)), ((1, 0), (1, 1))], True), 216),
    # non-soluble
    "a5": ("alternating of degree 5", 5, A5, 60),
    "s5": ("symmetric of degree 5", 5, ["(1 2 3 4 5)", "(1 2)"], 120),
    "psl2_5": ("PSL(2,5) on the projective line, degree 6", 6, lambda: projective_line(5), 60),
    "psl2_7": ("PSL(2,7) on the projective line, degree 8", 8, lambda: projective_line(7), 168),
    "a5xc2": ("A5 x C2", 7, A5 + ["(6 7)"], 120),
    "a5xc3": ("A5 x C3", 8, A5 + ["(6 7 8)"], 180),
}


def generators(degree, gens):
    if callable(gens):
        return gens()
    return [cyc(g, degree) for g in gens]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for label, (desc, degree, gens, order) in ENTRIES.items():
        perms = generators(degree, gens)
        group = group_closure(perms, degree)
        if group.order != order:
            raise SystemExit(f"{label}: closure gives {group.order}, expected {order}")
        lines = [f"degree {degree}", f"# {desc}, order {order}"]
        lines += [str(p) for p in perms] or ["()"]
        (OUT / f"{label}.grp").write_text("\n".join(lines) + "\n")
    print(f"wrote {len(ENTRIES)} groups to {OUT}")


if __name__ == "__main__":
    main()
