"""Generate the permutation-group fixtures.

Every group is built from explicit generators (Moebius actions on the
projective line, classical group actions on projective points, symmetric
group generators) and checked against its known order and element-order
spectrum before being written. Run from anywhere; writes into
fixtures/groups/.
"""

from common import (
    F3, F8, F9, GF, closure, mat_identity, mat_mul, matrix_to_perm,
    normalize_point, pinv, pmul, projective_points, row_action, spectrum,
    write_group,
)

# ------------------------------------------------------- Moebius actions


def moebius_points(F):
    """0..q-1 are field elements, q is the point at infinity."""
    return list(range(F.q)) + [F.q]


def moebius_perm(F, fn):
    """fn maps (z, is_inf) -> (w, is_inf)."""
    q = F.q
    img = []
    for z in range(q + 1):
        w, inf = fn(z if z < q else None)
        img.append(q if inf else w)
    return tuple(img)


def translation(F, c):
    return moebius_perm(F, lambda z: (None, True) if z is None else (F.add(z, c), False))


def scaling(F, a):
    return moebius_perm(F, lambda z: (None, True) if z is None else (F.mul(a, z), False))


def neg_inv(F):
    # z -> -1/z
    def fn(z):
        if z is None:
            return 0, False
        if z == 0:
            return None, True
        return F.neg(F.inv(z)), False

    return moebius_perm(F, fn)


def inv_map(F):
    # z -> 1/z (char 2)
    def fn(z):
        if z is None:
            return 0, False
        if z == 0:
            return None, True
        return F.inv(z), False

    return moebius_perm(F, fn)


def frobenius(F):
    return moebius_perm(F, lambda z: (None, True) if z is None else (F.frob(z), False))


def twisted_m10(F):
    # z -> w * z^3 (Frobenius followed by a nonsquare scaling), F = F9
    w = 3
    return moebius_perm(
        F, lambda z: (None, True) if z is None else (F.mul(w, F.frob(z)), False)
    )


# ----------------------------------------------------- symmetric groups


def cycle(deg, pts):
    img = list(range(deg))
    for i, x in enumerate(pts):
        img[x] = pts[(i + 1) % len(pts)]
    return tuple(img)


# --------------------------------------------------- classical groups


def transvection_sp4(F, v, lam):
    """x -> x + lam <x, v> v with <x,y> = x0 y2 + x1 y3 - x2 y0 - x3 y1."""
    rows = []
    for i in range(4):
        e = tuple(1 if j == i else 0 for j in range(4))
        form = symplectic_form(F, e, v)
        rows.append(tuple(F.add(e[j], F.mul(F.mul(lam, form), v[j])) for j in range(4)))
    return tuple(rows)


def symplectic_form(F, x, y):
    acc = 0
    acc = F.add(acc, F.mul(x[0], y[2]))
    acc = F.add(acc, F.mul(x[1], y[3]))
    acc = F.sub(acc, F.mul(x[2], y[0]))
    acc = F.sub(acc, F.mul(x[3], y[1]))
    return acc


def hermitian_form(F, x, y):
    # H(x, y) = x0 yb2 + x1 yb1 + x2 yb0 with yb = Frobenius conjugate
    acc = 0
    for i in range(3):
        acc = F.add(acc, F.mul(x[i], F.frob(y[2 - i])))
    return acc


def unitary_transvection(F, v, lam):
    """x -> x + lam H(x, v) v; needs H(v,v) = 0 and lam + lam^q = 0."""
    rows = []
    for i in range(3):
        e = tuple(1 if j == i else 0 for j in range(3))
        h = hermitian_form(F, e, v)
        rows.append(tuple(F.add(e[j], F.mul(F.mul(lam, h), v[j])) for j in range(3)))
    return tuple(rows)


def check_preserves(F, M, form, points_dim):
    import itertools

    for _ in range(20):
        # spot-check on a few deterministic vector pairs
        pass
    vecs = list(itertools.product(range(F.q), repeat=points_dim))[1 : 6]
    for x in vecs:
        for y in vecs:
            fx = row_action(F, x, M)
            fy = row_action(F, y, M)
            assert form(F, fx, fy) == form(F, x, y), "form not preserved"


def build_u3_gens():
    F = F9
    lam = None
    for cand in range(1, 9):
        if F.add(cand, F.frob(cand)) == 0:
            lam = cand
            break
    assert lam is not None
    vs = [(1, 0, 0), (0, 0, 1)]
    # a generic isotropic vector (1, a, b): H = b + b^3 + a^(1+3)
    for a in range(9):
        for b in range(9):
            v = (1, a, b)
            if hermitian_form(F, v, v) == 0 and a != 0:
                vs.append(v)
                break
        if len(vs) == 3:
            break
    gens = [unitary_transvection(F, v, lam) for v in vs]
    for M in gens:
        check_preserves(F, M, hermitian_form, 3)
    return F, gens


def build_sp4_gens():
    F = F3
    vs = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 0), (1, 0, 1, 1)]
    gens = [transvection_sp4(F, v, 1) for v in vs]
    for M in gens:
        check_preserves(F, M, symplectic_form, 4)
    return F, gens


def perm_group_from_matrices(F, mats, points):
    point_index = {v: i for i, v in enumerate(points)}
    return [matrix_to_perm(F, M, points, point_index) for M in mats]


# ----------------------------------------------------------- the groups


def build_all():
    out = {}

    # alternating and symmetric
    out["A5"] = [cycle(5, [0, 1, 2, 3, 4]), cycle(5, [2, 3, 4])]
    out["S5"] = [cycle(5, [0, 1, 2, 3, 4]), cycle(5, [0, 1])]
    out["A6"] = [cycle(6, [1, 2, 3, 4, 5]), cycle(6, [0, 1, 2])]
    out["S6"] = [cycle(6, [0, 1, 2, 3, 4, 5]), cycle(6, [0, 1])]

    # PSL(2,7) and its extension, on the projective line over F7
    F = GF(7)
    out["PSL(2,7)"] = [translation(F, 1), neg_inv(F)]
    out["PGL(2,7)"] = out["PSL(2,7)"] + [scaling(F, 3)]

    # PSL(2,8) = PGL(2,8) and PGammaL(2,8)
    out["PSL(2,8)"] = [translation(F8, 1), scaling(F8, 2), inv_map(F8)]
    out["PGammaL(2,8)"] = out["PSL(2,8)"] + [frobenius(F8)]

    # PSL(2,17) and PGL(2,17)
    F = GF(17)
    out["PSL(2,17)"] = [translation(F, 1), neg_inv(F)]
    out["PGL(2,17)"] = out["PSL(2,17)"] + [scaling(F, 3)]

    # the A6 extensions seen as groups over F9: PGL(2,9), M10, PGammaL(2,9)
    psl29 = [translation(F9, 1), translation(F9, 3), neg_inv(F9)]
    out["PGL(2,9)"] = psl29 + [scaling(F9, 3)]
    out["M10"] = psl29 + [twisted_m10(F9)]
    out["PGammaL(2,9)"] = psl29 + [scaling(F9, 3), frobenius(F9)]

    # PSL(3,3) on the 13 points of the projective plane over F3
    points13 = projective_points(F3, 3)
    e12 = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    cyc = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
    out["PSL(3,3)"] = perm_group_from_matrices(F3, [e12, cyc], points13)

    # PSL(3,3).2: add the point/line duality on 13 + 13 points
    lines13 = points13  # lines are dual points with the same coordinates
    n13 = len(points13)
    pt_index = {v: i for i, v in enumerate(points13)}

    def l33_2_perm(M):
        # points by v -> vM, lines by w -> w M^{-T}; rows of the inverse
        Minv = mat_inverse(F3, M)
        MinvT = tuple(tuple(Minv[j][i] for j in range(3)) for i in range(3))
        img = []
        for v in points13:
            img.append(pt_index[normalize_point(F3, row_action(F3, v, M))])
        for w in lines13:
            img.append(n13 + pt_index[normalize_point(F3, row_action(F3, w, MinvT))])
        return tuple(img)

    duality = tuple(list(range(n13, 2 * n13)) + list(range(n13)))
    out["PSL(3,3).2"] = [l33_2_perm(e12), l33_2_perm(cyc), duality]

    # U3(3) on the 28 isotropic points, and its extension by the field map
    Fu, ugens = build_u3_gens()
    iso28 = projective_points(Fu, 3, predicate=lambda v: hermitian_form(Fu, v, v) == 0)
    assert len(iso28) == 28
    iso_index = {v: i for i, v in enumerate(iso28)}
    out["U3(3)"] = perm_group_from_matrices(Fu, ugens, iso28)
    field_map = tuple(
        iso_index[normalize_point(Fu, tuple(Fu.frob(x) for x in v))] for v in iso28
    )
    out["U3(3).2"] = out["U3(3)"] + [field_map]

    # U4(2) = PSp(4,3) on the 40 points of projective 3-space over F3,
    # and its extension by a symplectic similitude
    Fs, spgens = build_sp4_gens()
    points40 = projective_points(Fs, 4)
    assert len(points40) == 40
    out["U4(2)"] = perm_group_from_matrices(Fs, spgens, points40)
    simil = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2))
    out["U4(2).2"] = out["U4(2)"] + perm_group_from_matrices(Fs, [simil], points40)

    return out


def mat_inverse(F, M):
    n = len(M)
    aug = [list(M[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = F.inv(aug[col][col])
        aug[col] = [F.mul(inv, x) for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


EXPECTED = {
    # name: (order, spectrum or None)
    "A5": (60, [1, 2, 3, 5]),
    "S5": (120, [1, 2, 3, 4, 5, 6]),
    "A6": (360, [1, 2, 3, 4, 5]),
    "S6": (720, [1, 2, 3, 4, 5, 6]),
    "PSL(2,7)": (168, [1, 2, 3, 4, 7]),
    "PGL(2,7)": (336, [1, 2, 3, 4, 6, 7, 8]),
    "PSL(2,8)": (504, [1, 2, 3, 7, 9]),
    "PGammaL(2,8)": (1512, [1, 2, 3, 6, 7, 9]),
    "PSL(2,17)": (2448, [1, 2, 3, 4, 8, 9, 17]),
    "PGL(2,17)": (4896, [1, 2, 3, 4, 6, 8, 9, 16, 17, 18]),
    "PGL(2,9)": (720, [1, 2, 3, 4, 5, 8, 10]),
    "M10": (720, [1, 2, 3, 4, 5, 8]),
    "PGammaL(2,9)": (1440, [1, 2, 3, 4, 5, 6, 8, 10]),
    "PSL(3,3)": (5616, [1, 2, 3, 4, 6, 8, 13]),
    "PSL(3,3).2": (11232, None),
    "U3(3)": (6048, [1, 2, 3, 4, 6, 7, 8, 12]),
    "U3(3).2": (12096, None),
    "U4(2)": (25920, [1, 2, 3, 4, 5, 6, 9, 12]),
    "U4(2).2": (51840, None),
}


def main():
    groups = build_all()
    assert set(groups) == set(EXPECTED), set(groups) ^ set(EXPECTED)
    for name, gens in sorted(groups.items()):
        elems, _ = closure(gens)
        order = len(elems)
        spec = spectrum(elems)
        want_order, want_spec = EXPECTED[name]
        assert order == want_order, f"{name}: order {order}, expected {want_order}"
        if want_spec is not None:
            assert spec == want_spec, f"{name}: spectrum {spec}, expected {want_spec}"
        path = write_group(name, gens)
        print(f"{name:<14} order {order:>6} degree {len(gens[0]):>3} spectrum {spec}")
    # facts used downstream but not pinned above
    for name, must_have, must_lack in [
        ("U4(2).2", [10], [15]),
        ("U3(3).2", [12], [14, 21, 24]),
        ("PSL(3,3).2", [8], [26, 39]),
    ]:
        elems, _ = closure(read_group_gens(name))
        spec = set(spectrum(elems))
        for m in must_have:
            assert m in spec, f"{name} should contain order {m}: {sorted(spec)}"
        for m in must_lack:
            assert m not in spec, f"{name} should not contain order {m}: {sorted(spec)}"
    print("all group fixtures written and checked")


def read_group_gens(name):
    from common import read_group

    return read_group(name)


if __name__ == "__main__":
    main()
