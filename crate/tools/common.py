"""Shared helpers for fixture generation: tiny finite fields, permutation
closure, conjugacy classes, and the group fixture JSON format.

Conventions (must match the Rust side):
  * permutations are tuples of images of 0..deg-1
  * composition is apply-left-first: (a * b)(x) = b(a(x))
  * matrix groups act on ROW vectors, v -> v @ M, so that the map
    matrix -> permutation is a homomorphism for that composition order
"""

import json
import math
import os
from collections import deque

# ---------------------------------------------------------------- fields


class GF:
    """GF(p^k) with table arithmetic. Elements are ints 0..p^k-1 encoding
    polynomials in the generator w: e = sum a_i p^i  <->  sum a_i w^i."""

    def __init__(self, p, k=1, modulus=None):
        self.p, self.k, self.q = p, k, p**k
        if k == 1:
            self.mul_table = None
            return
        # modulus: coefficients of the monic minimal polynomial of w,
        # low degree first, without the leading 1 (length k)
        assert modulus is not None and len(modulus) == k
        self.modulus = modulus
        self.mul_table = [[0] * self.q for _ in range(self.q)]
        for a in range(self.q):
            for b in range(self.q):
                self.mul_table[a][b] = self._polymul(a, b)

    def _digits(self, e):
        out = []
        for _ in range(self.k):
            out.append(e % self.p)
            e //= self.p
        return out

    def _undigits(self, ds):
        e = 0
        for d in reversed(ds):
            e = e * self.p + d
        return e

    def _polymul(self, a, b):
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce by w^k = -modulus
        for i in range(2 * self.k - 2, self.k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, m in enumerate(self.modulus):
                    prod[i - self.k + j] = (prod[i - self.k + j] - c * m) % self.p
        return self._undigits(prod[: self.k])

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        return self.mul_table[a][b]

    def inv(self, a):
        assert a != 0
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise AssertionError("not a field")

    def pow(self, a, e):
        if a == 0:
            return 0 if e else 1
        out, b = 1, a
        e %= self.q - 1
        while e:
            if e & 1:
                out = self.mul(out, b)
            b = self.mul(b, b)
            e >>= 1
        return out

    def frob(self, a):
        """x -> x^p."""
        return self.pow(a, self.p)


F3 = GF(3)
F7 = GF(7)
# F8 = F2[w]/(w^3 = w + 1)
F8 = GF(2, 3, modulus=[1, 1, 0])
# F9 = F3[w]/(w^2 = w + 1)
F9 = GF(3, 2, modulus=[2, 2])


def _check_f9():
    w = 3  # the generator element
    assert F9.mul(w, w) == F9.add(w, 1), "w^2 = w + 1"
    orders = {a: next(i for i in range(1, 9) if F9.pow(a, i) == 1) for a in range(1, 9)}
    assert sorted(orders.values()).count(8) == 4  # phi(8) generators


_check_f9()

# ---------------------------------------------------------- permutations


def pmul(a, b):
    """(a * b)(x) = b(a(x)): apply a first."""
    return tuple(b[x] for x in a)


def pinv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def ppow(a, e):
    deg = len(a)
    out = tuple(range(deg))
    b = a if e >= 0 else pinv(a)
    e = abs(e)
    while e:
        if e & 1:
            out = pmul(out, b)
        b = pmul(b, b)
        e >>= 1
    return out


def porder(a):
    seen = [False] * len(a)
    ord_ = 1
    for s in range(len(a)):
        if seen[s]:
            continue
        ln, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = a[x]
            ln += 1
        ord_ = ord_ * ln // math.gcd(ord_, ln)
    return ord_


def closure(gens):
    """All elements generated, BFS order (identity first)."""
    deg = len(gens[0])
    ident = tuple(range(deg))
    elems = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        e = queue.popleft()
        for g in gens:
            f = pmul(e, g)
            if f not in index:
                index[f] = len(elems)
                elems.append(f)
                queue.append(f)
    return elems, index


def conj_classes(elems, index, gens):
    """Class id per element, plus per class (rep index, size).
    Classes are numbered in BFS discovery order."""
    n = len(elems)
    class_of = [-1] * n
    classes = []
    inv_gens = [pinv(g) for g in gens]
    for start in range(n):
        if class_of[start] != -1:
            continue
        cid = len(classes)
        class_of[start] = cid
        size = 1
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for g, gi in zip(gens, inv_gens):
                j = index[pmul(pmul(gi, elems[i]), g)]
                if class_of[j] == -1:
                    class_of[j] = cid
                    size += 1
                    queue.append(j)
        classes.append((start, size))
    return class_of, classes


def spectrum(elems):
    return sorted({porder(e) for e in elems})


# ------------------------------------------------------------- fixtures


def fixtures_root():
    here = os.path.dirname(os.path.abspath(__file__))
    return os.path.join(os.path.dirname(here), "fixtures")


def write_group(name, gens):
    deg = len(gens[0])
    path = os.path.join(fixtures_root(), "groups", f"{name}.json")
    data = {"name": name, "degree": deg, "generators": [list(g) for g in gens]}
    with open(path, "w") as fh:
        json.dump(data, fh)
    return path


def read_group(name):
    path = os.path.join(fixtures_root(), "groups", f"{name}.json")
    with open(path) as fh:
        data = json.load(fh)
    return [tuple(g) for g in data["generators"]]


# ------------------------------------------------- matrix group helpers


def mat_mul(F, A, B):
    n, m, r = len(A), len(B), len(B[0])
    assert len(A[0]) == m
    return tuple(
        tuple(
            _dot(F, A[i], [B[k][j] for k in range(m)])
            for j in range(r)
        )
        for i in range(n)
    )


def _dot(F, xs, ys):
    acc = 0
    for x, y in zip(xs, ys):
        acc = F.add(acc, F.mul(x, y))
    return acc


def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def row_action(F, v, M):
    return tuple(_dot(F, v, [M[k][j] for k in range(len(v))]) for j in range(len(M[0])))


def normalize_point(F, v):
    for x in v:
        if x:
            inv = F.inv(x)
            return tuple(F.mul(inv, y) for y in v)
    raise AssertionError("zero vector")


def projective_points(F, dim, predicate=None):
    """All projective points of F^dim (as normalized row tuples), optionally
    filtered. Deterministic order."""
    pts = []
    seen = set()
    for code in range(1, F.q**dim):
        v = []
        c = code
        for _ in range(dim):
            v.append(c % F.q)
            c //= F.q
        v = normalize_point(F, tuple(v))
        if v in seen:
            continue
        seen.add(v)
        if predicate is None or predicate(v):
            pts.append(v)
    return pts


def matrix_to_perm(F, M, points, point_index):
    return tuple(point_index[normalize_point(F, row_action(F, v, M))] for v in points)
