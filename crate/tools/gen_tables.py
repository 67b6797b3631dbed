"""Generate ordinary character tables for the group fixtures by the
Dixon-Schneider method: compute class-algebra structure constants, split a
common eigenbasis of the class matrices over GF(l) for a prime
l = 1 (mod exp G) with l > |G|, read off central characters, recover
degrees and character residues, and lift values to cyclotomic integers by
a discrete Fourier transform over the residues of the power classes.

The lift uses one fixed primitive root of GF(l) everywhere, which makes
all values Galois-consistent across classes. Exact re-validation
(orthogonality over Q(zeta), power maps, integrality) happens on the Rust
side when fixtures are loaded; this script checks orthogonality mod l,
degree sums, and multiplicity sanity before writing anything.
"""

import json
import math
import os
import sys

import numpy as np

from common import (
    closure, conj_classes, fixtures_root, pinv, pmul, porder, ppow, read_group,
)

GROUPS = [
    "A5", "S5", "A6", "S6",
    "PSL(2,7)", "PGL(2,7)", "PSL(2,8)", "PGammaL(2,8)",
    "PSL(2,17)", "PGL(2,17)",
    "PGL(2,9)", "M10", "PGammaL(2,9)",
    "PSL(3,3)", "PSL(3,3).2",
    "U3(3)", "U3(3).2",
    "U4(2)", "U4(2).2",
]


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def find_modulus(exponent, group_order):
    l = ((group_order // exponent) + 1) * exponent + 1
    while not is_prime(l):
        l += exponent
    return l


def primitive_root(l):
    fac = []
    m = l - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for g in range(2, l):
        if all(pow(g, (l - 1) // q, l) != 1 for q in fac):
            return g
    raise AssertionError


def sqrt_mod(a, l):
    """Tonelli-Shanks; l odd prime, a a quadratic residue."""
    a %= l
    if a == 0:
        return 0
    assert pow(a, (l - 1) // 2, l) == 1, "not a residue"
    if l % 4 == 3:
        return pow(a, (l + 1) // 4, l)
    q, s = l - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = next(z for z in range(2, l) if pow(z, (l - 1) // 2, l) == l - 1)
    m, c, t, r = s, pow(z, q, l), pow(a, q, l), pow(a, (q + 1) // 2, l)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % l
            i += 1
        b = pow(c, 1 << (m - i - 1), l)
        m, c, t, r = i, b * b % l, t * b * b % l, r * b % l
    return r


# ------------------------------------------------ GF(l) linear algebra


def rref(M, l):
    """Row-reduce M (int64 array, entries mod l). Returns (R, pivots)."""
    R = M.copy() % l
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        p = r + nz[0]
        R[[r, p]] = R[[p, r]]
        R[r] = R[r] * pow(int(R[r, c]), l - 2, l) % l
        for rr in range(rows):
            if rr != r and R[rr, c]:
                R[rr] = (R[rr] - R[rr, c] * R[r]) % l
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def nullspace(M, l):
    """Columns spanning ker M over GF(l)."""
    R, pivots = rref(M, l)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[fc, i] = 1
        for r, pc in enumerate(pivots):
            basis[pc, i] = (-R[r, fc]) % l
    return basis


def charpoly(M, l):
    """Faddeev-LeVerrier mod l (valid since l > dim). Coefficients of
    x^n + c[n-1] x^(n-1) + ... + c[0], returned ascending."""
    n = M.shape[0]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    I = np.eye(n, dtype=np.int64)
    Ak = M.copy() % l
    for i in range(1, n + 1):
        tr = int(np.trace(Ak)) % l
        c = (-tr * pow(i, l - 2, l)) % l
        coeffs[n - i] = c
        Ak = M @ ((Ak + c * I) % l) % l
    return coeffs


def poly_roots(coeffs, l):
    xs = np.arange(l, dtype=np.int64)
    acc = np.zeros(l, dtype=np.int64)
    for c in reversed(coeffs):
        acc = (acc * xs + c) % l
    return [int(x) for x in np.nonzero(acc == 0)[0]]


# --------------------------------------------------------- Dixon core


class GroupData:
    def __init__(self, name):
        gens = read_group(name)
        self.name = name
        elems, index = closure(gens)
        self.elems = elems
        self.order = len(elems)
        class_of, classes = conj_classes(elems, index, gens)
        self.class_of = class_of
        # canonical order: (element_order, size, discovery)
        decorated = sorted(
            (porder(elems[rep]), size, i, rep)
            for i, (rep, size) in enumerate(classes)
        )
        self.reps = [rep for (_, _, _, rep) in decorated]
        self.sizes = [size for (_, size, _, _) in decorated]
        self.orders = [o for (o, _, _, _) in decorated]
        self.k = len(self.reps)
        # renumber class_of (discovery order) to canonical positions
        renumber = {old: new for new, (_, _, old, _) in enumerate(decorated)}
        self.class_index = [renumber[c] for c in class_of]
        self.ELEM = np.array(elems, dtype=np.int64)
        self.class_of_bytes = {
            self.ELEM[i].tobytes(): self.class_index[i] for i in range(self.order)
        }
        self.exponent = 1
        for o in self.orders:
            self.exponent = self.exponent * o // math.gcd(self.exponent, o)

    def class_of_perm(self, p):
        return self.class_of_bytes[np.array(p, dtype=np.int64).tobytes()]

    def power_class(self, ci, t):
        return self.class_of_perm(ppow(self.elems[self.reps[ci]], t))

    def class_matrix(self, i):
        """B[j, k] = #{x in C_i : class(x^-1 z_k) = j}."""
        ids = [e for e in range(self.order) if self.class_index[e] == i]
        X = self.ELEM[ids]
        Xinv = np.argsort(X, axis=1)
        B = np.zeros((self.k, self.k), dtype=np.int64)
        for k in range(self.k):
            zk = self.ELEM[self.reps[k]]
            comp = zk[Xinv]
            js = np.fromiter(
                (self.class_of_bytes[comp[r].tobytes()] for r in range(comp.shape[0])),
                dtype=np.int64,
                count=comp.shape[0],
            )
            np.add.at(B[:, k], js, 1)
        return B


def central_characters(gd, l):
    """All k common eigenvectors of the class matrices, normalized so the
    identity-class entry is 1. Returns a (k, k) array: row = one omega."""
    k = gd.k
    spaces = [np.eye(k, dtype=np.int64)]  # column-basis matrices
    by_cost = sorted(range(1, k), key=lambda i: gd.sizes[i])
    for i in by_cost:
        if all(V.shape[1] == 1 for V in spaces):
            break
        B = gd.class_matrix(i)
        new_spaces = []
        for V in spaces:
            r = V.shape[1]
            if r == 1:
                new_spaces.append(V)
                continue
            # restriction R with B V = V R, via row reduction of [V | BV]
            W = B @ V % l
            aug = np.concatenate([V, W], axis=1)
            Raug, pivots = rref(aug, l)
            assert pivots[:r] == list(range(r)), "basis not independent"
            R = Raug[:r, r:]
            for lam in poly_roots(charpoly(R, l), l):
                N = nullspace((R - lam * np.eye(r, dtype=np.int64)) % l, l)
                if N.shape[1] > 0:
                    new_spaces.append(V @ N % l)
        assert sum(V.shape[1] for V in new_spaces) == k
        spaces = new_spaces
    assert all(V.shape[1] == 1 for V in spaces), "class matrices failed to separate"
    omegas = []
    for V in spaces:
        v = V[:, 0] % l
        assert v[0] != 0, "eigenvector vanishes at the identity class"
        omegas.append(v * pow(int(v[0]), l - 2, l) % l)
    return np.array(sorted(omegas, key=lambda w: w.tolist()), dtype=np.int64)


def character_residues(gd, omegas, l):
    """Degrees and residue rows chi(C_k) mod l."""
    k = gd.k
    kbar = [gd.power_class(i, -1) for i in range(k)]
    inv_sizes = np.array([pow(s, l - 2, l) for s in gd.sizes], dtype=np.int64)
    degrees = []
    rows = []
    for w in omegas:
        s = int(sum(int(w[i]) * int(w[kbar[i]]) % l * int(inv_sizes[i]) % l for i in range(k)) % l)
        d2 = gd.order * pow(s, l - 2, l) % l
        d = sqrt_mod(d2, l)
        d = min(d, l - d)
        assert 1 <= d <= int(math.isqrt(gd.order)) + 1, f"degree {d} out of range"
        degrees.append(d)
        rows.append([d * int(w[i]) % l * int(inv_sizes[i]) % l for i in range(k)])
    return degrees, np.array(rows, dtype=np.int64)


def lift_values(gd, degrees, rows, l, xi):
    """Cyclotomic values: list (per char) of lists (per class) of
    {"n": m, "terms": [[j, mult] ...]}."""
    k = gd.k
    power_classes = []
    for i in range(k):
        m = gd.orders[i]
        power_classes.append([gd.power_class(i, t) for t in range(m)])
    out = []
    for chi, d in zip(rows, degrees):
        vals = []
        for i in range(k):
            m = gd.orders[i]
            z = pow(xi, (l - 1) // m, l)
            zinv = pow(z, l - 2, l)
            minv = pow(m, l - 2, l)
            terms = []
            total = 0
            for j in range(m):
                acc = 0
                for t in range(m):
                    acc = (acc + int(chi[power_classes[i][t]]) * pow(zinv, j * t, l)) % l
                mu = acc * minv % l
                assert mu <= d, f"multiplicity {mu} exceeds degree {d}"
                total += mu
                if mu:
                    terms.append([j, mu])
            assert total == d, "multiplicities must sum to the degree"
            vals.append({"n": m, "terms": terms})
        out.append(vals)
    return out


def verify_mod_l(gd, rows, degrees, l):
    k = gd.k
    kbar = [gd.power_class(i, -1) for i in range(k)]
    sizes = np.array(gd.sizes, dtype=np.int64)
    X = rows % l
    Xbar = X[:, kbar]
    gram = ((X * sizes) % l) @ Xbar.T % l
    want = np.diag(np.full(k, gd.order % l, dtype=np.int64))
    assert np.array_equal(gram % l, want % l), "row orthogonality mod l fails"
    assert sum(d * d for d in degrees) == gd.order, "degree squares"


def class_names(orders, sizes):
    names = []
    seen = {}
    for o in orders:
        idx = seen.get(o, 0)
        seen[o] = idx + 1
        names.append(f"{o}{chr(ord('a') + idx)}")
    return names


def build_table(name):
    gd = GroupData(name)
    l = find_modulus(gd.exponent, gd.order)
    xi = primitive_root(l)
    omegas = central_characters(gd, l)
    degrees, rows = character_residues(gd, omegas, l)
    verify_mod_l(gd, rows, degrees, l)
    values = lift_values(gd, degrees, rows, l, xi)
    # deterministic character order: by (degree, residue row)
    order = sorted(range(gd.k), key=lambda i: (degrees[i], rows[i].tolist()))
    width = len(str(gd.k))
    names = class_names(gd.orders, gd.sizes)
    table = {
        "group": name,
        "kind": "ordinary",
        "order": gd.order,
        "classes": [
            {
                "name": names[i],
                "size": gd.sizes[i],
                "element_order": gd.orders[i],
                "rep": list(gd.elems[gd.reps[i]]),
            }
            for i in range(gd.k)
        ],
        "irreducibles": [
            {
                "name": f"X{str(pos + 1).zfill(width)}",
                "degree": degrees[order[pos]],
                "values": values[order[pos]],
            }
            for pos in range(gd.k)
        ],
    }
    return gd, l, table


def main():
    only = sys.argv[1:] or GROUPS
    for name in only:
        gd, l, table = build_table(name)
        path = os.path.join(fixtures_root(), "tables", f"{name}.json")
        with open(path, "w") as fh:
            json.dump(table, fh)
        degs = [x["degree"] for x in table["irreducibles"]]
        print(f"{name:<14} classes {gd.k:>2}  mod {l:>7}  degrees {degs}")


if __name__ == "__main__":
    main()
