#!/usr/bin/env python3
"""Brute-force cohomology dimensions over the raw value-tensor space.

Cochains are full tensors f[x_1..x_p][l]. Z^p is the kernel of the stacked
matrix [constraints; delta^p] and B^p is the span of delta^(p-2) applied to
every raw cochain satisfying the constraints. Nothing here is shared with
the C++ library; all arithmetic is fractions.Fraction.

Usage: cohomology_oracle.py [--quick] [output.json]
       cohomology_oracle.py [--quick] --check golden.json
"""

import itertools
import json
import sys
from fractions import Fraction


def rank(rows, ncols):
    rows = [list(r) for r in rows if any(r)]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r, rows[:r]


def nullspace(rows, ncols):
    r, red = rank(rows, ncols)
    pivots = []
    for row in red:
        pivots.append(next(c for c in range(ncols) if row[c] != 0))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


class Pair:
    """Bracket c[i][j][k] -> list over l, theta[(i, j)] -> matrix m x m."""

    def __init__(self, n, m, bracket, theta):
        self.n, self.m = n, m
        self.c = bracket
        self.theta = theta

    def D(self, i, j):
        a, b = self.theta[(j, i)], self.theta[(i, j)]
        return [[a[r][s] - b[r][s] for s in range(self.m)] for r in range(self.m)]


def zeros(*shape):
    if len(shape) == 1:
        return [Fraction(0)] * shape[0]
    return [zeros(*shape[1:]) for _ in range(shape[0])]


def lts_from_table(n, table):
    c = zeros(n, n, n, n)
    for (i, j, k), val in table.items():
        for l, v in val.items():
            c[i][j][k][l] = Fraction(v)
            c[j][i][k][l] = -Fraction(v)
    return c


def adjoint_pair(n, c):
    theta = {}
    for i, j in itertools.product(range(n), repeat=2):
        # theta(x, y) z = [z, x, y]
        theta[(i, j)] = [[c[k][i][j][l] for k in range(n)] for l in range(n)]
    return Pair(n, n, c, theta)


def matvec(a, v):
    return [sum((a[r][s] * v[s] for s in range(len(v))), Fraction(0)) for r in range(len(a))]


def induced_pair(pair, T):
    """Structures on V from an O-operator T (n x m): bracket and theta_T on L."""
    n, m = pair.n, pair.m

    def col(j):
        return [T[i][j] for i in range(n)]

    def brk(x, y, z):
        out = [Fraction(0)] * n
        for i, j, k in itertools.product(range(n), repeat=3):
            s = x[i] * y[j] * z[k]
            if s:
                for l in range(n):
                    out[l] += s * pair.c[i][j][k][l]
        return out

    def theta_app(x, y, u):
        out = [Fraction(0)] * m
        for i, j in itertools.product(range(n), repeat=2):
            s = x[i] * y[j]
            if s:
                w = matvec(pair.theta[(i, j)], u)
                out = [a + s * b for a, b in zip(out, w)]
        return out

    def D_app(x, y, u):
        return [a - b for a, b in zip(theta_app(y, x, u), theta_app(x, y, u))]

    def unit(k, d):
        return [Fraction(1 if i == k else 0) for i in range(d)]

    def apply_T(u):
        return [sum((T[i][j] * u[j] for j in range(m)), Fraction(0)) for i in range(n)]

    cb = zeros(m, m, m, m)
    for a, b, c3 in itertools.product(range(m), repeat=3):
        ta, tb, tc = col(a), col(b), col(c3)
        ua, ub, uc = unit(a, m), unit(b, m), unit(c3, m)
        v = [p + q - r for p, q, r in zip(D_app(ta, tb, uc), theta_app(tb, tc, ua), theta_app(ta, tc, ub))]
        cb[a][b][c3] = v
    theta = {}
    for a, b in itertools.product(range(m), repeat=2):
        ta, tb = col(a), col(b)
        ua, ub = unit(a, m), unit(b, m)
        mat = zeros(n, n)
        for x in range(n):
            ex = unit(x, n)
            v = brk(ex, ta, tb)
            w = apply_T([p - q for p, q in zip(theta_app(ex, tb, ua), D_app(ex, ta, ub))])
            for r in range(n):
                mat[r][x] = v[r] + w[r]
        theta[(a, b)] = mat
    induced = Pair(m, n, cb, theta)

    # partial_T(e_i ^ e_j)(v) = T D(e_i, e_j) v - [e_i, e_j, T v]
    partial = []
    for i in range(n):
        for j in range(i + 1, n):
            img = []
            for v in range(m):
                dv = [pair.D(i, j)[r][v] for r in range(m)]
                left = apply_T(dv)
                right = brk(unit(i, n), unit(j, n), col(v))
                img.append([p - q for p, q in zip(left, right)])
            partial.append(img)  # img[v][l]
    return induced, partial


def delta_raw(pair, f, p):
    """f: dict tuple -> list (len m) over all p-tuples; returns the same for p+2."""
    n, m = pair.n, pair.m
    nn = (p + 1) // 2
    q = p + 2
    out = {}
    for xs in itertools.product(range(n), repeat=q):
        acc = [Fraction(0)] * m

        def add(mat, vec, s):
            for r in range(m):
                t = sum((mat[r][k] * vec[k] for k in range(m)), Fraction(0))
                acc[r] += s * t

        add(pair.theta[(xs[q - 2], xs[q - 1])], f[xs[:q - 2]], 1)
        add(pair.theta[(xs[q - 3], xs[q - 1])], f[xs[:q - 3] + (xs[q - 2],)], -1)
        for k in range(1, nn + 1):
            a, b = 2 * k - 2, 2 * k - 1
            rest = xs[:a] + xs[b + 1:]
            add(pair.D(xs[a], xs[b]), f[rest], (-1) ** (nn + k))
            for j in range(2 * k, q):
                for l in range(n):
                    cv = pair.c[xs[a]][xs[b]][xs[j]][l]
                    if cv:
                        r = list(rest)
                        r[j - 2] = l
                        val = f[tuple(r)]
                        s = (-1) ** (nn + k + 1) * cv
                        for t in range(m):
                            acc[t] += s * val[t]
        out[xs] = acc
    return out


def raw_index(n, m, p):
    keys = list(itertools.product(range(n), repeat=p))
    return keys, len(keys) * m


def constraint_rows(n, m, p):
    rows = []
    keys, N = raw_index(n, m, p)
    pos = {k: i for i, k in enumerate(keys)}
    if p == 1:
        return rows, N
    for xs in keys:
        pre = xs[:p - 3]
        x, y, z = xs[p - 3:]
        for t in range(m):
            r = [Fraction(0)] * N
            r[pos[pre + (x, y, z)] * m + t] += 1
            r[pos[pre + (y, x, z)] * m + t] += 1
            rows.append(r)
            r = [Fraction(0)] * N
            r[pos[pre + (x, y, z)] * m + t] += 1
            r[pos[pre + (y, z, x)] * m + t] += 1
            r[pos[pre + (z, x, y)] * m + t] += 1
            rows.append(r)
    return rows, N


def vector_to_cochain(vec, n, m, p):
    keys, _ = raw_index(n, m, p)
    return {k: vec[i * m:(i + 1) * m] for i, k in enumerate(keys)}


def cochain_to_vector(f, n, m, p):
    keys, _ = raw_index(n, m, p)
    out = []
    for k in keys:
        out.extend(f[k])
    return out


def delta_matrix_rows(pair, p):
    """Rows of the raw delta^p matrix (one row per output coordinate)."""
    n, m = pair.n, pair.m
    _, N = raw_index(n, m, p)
    cols = []
    for c in range(N):
        e = [Fraction(0)] * N
        e[c] = Fraction(1)
        cols.append(cochain_to_vector(delta_raw(pair, vector_to_cochain(e, n, m, p), p), n, m, p + 2))
    return [[cols[c][r] for c in range(N)] for r in range(len(cols[0]))]


def cohomology(pair, p, partial=None):
    n, m = pair.n, pair.m
    cons, N = constraint_rows(n, m, p)
    dim_c = N - rank(cons, N)[0]
    dim_z = N - rank(cons + delta_matrix_rows(pair, p), N)[0]
    if p == 1:
        if partial is None:
            dim_b = 0
        else:
            vecs = [[img[v][l] for v in range(m) for l in range(n)] for img in partial]
            dim_b = rank(vecs, N)[0]
    else:
        lower_cons, M = constraint_rows(n, m, p - 2)
        space = nullspace(lower_cons, M) if lower_cons else [
            [Fraction(1 if i == j else 0) for i in range(M)] for j in range(M)]
        images = [cochain_to_vector(delta_raw(pair, vector_to_cochain(v, n, m, p - 2), p - 2), n, m, p) for v in space]
        dim_b = rank(images, N)[0]
    return {"dim_cochains": dim_c, "dim_cocycles": dim_z, "dim_coboundaries": dim_b, "dim_H": dim_z - dim_b}


def fixtures():
    dim2 = lts_from_table(2, {(0, 1, 1): {0: 1}})
    dim4 = lts_from_table(4, {(0, 1, 0): {3: 1}})
    T2 = [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(2)]]
    T4 = [[0, 1, 0, 0], [0, 0, 0, 0], [2, -1, Fraction(1, 2), 3], [1, -2, Fraction(1, 3), 1]]
    T4 = [[Fraction(v) for v in row] for row in T4]
    return {"paper/dim2": (2, dim2, T2), "paper/dim4": (4, dim4, T4)}


def check(result, path):
    with open(path) as fh:
        golden = json.load(fh)
    bad = 0
    for name, flavors in result.items():
        for flavor, degrees in flavors.items():
            for p, dims in degrees.items():
                want = golden.get(name, {}).get(flavor, {}).get(p)
                ok = want == dims
                bad += not ok
                print(f"{'ok  ' if ok else 'FAIL'} {name} {flavor} H^{p}: {dims} vs {want}")
    return 1 if bad else 0


def main(argv):
    quick = "--quick" in argv
    golden = argv[argv.index("--check") + 1] if "--check" in argv else None
    args = [a for a in argv if not a.startswith("--") and a != golden]
    result = {}
    for name, (n, c, T) in fixtures().items():
        pair = adjoint_pair(n, c)
        induced, partial = induced_pair(pair, T)
        degrees = [1, 3] if n <= 2 or not quick else [1]
        result[name] = {
            "yamaguti": {str(p): cohomology(pair, p) for p in degrees},
            "o-operator": {str(p): cohomology(induced, p, partial if p == 1 else None) for p in degrees},
        }
    if golden:
        return check(result, golden)
    text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    if args:
        with open(args[0], "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
