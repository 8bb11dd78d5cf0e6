"""Brute-force counts for the quaternion-triple criterion input.

Everything here runs on a tiny hand-rolled Q(sqrt(2)) arithmetic so the
numbers are produced without touching the package under test.  Run it once
and copy the printed constants into the test files.
"""

from fractions import Fraction
from itertools import product

# elements of Q(sqrt(2)) stored as (a, b) meaning a + b*sqrt(2)

ZERO = (Fraction(0), Fraction(0))
ONE = (Fraction(1), Fraction(0))
HALF_SQRT2 = (Fraction(0), Fraction(1, 2))


def fadd(u, v):
    return (u[0] + v[0], u[1] + v[1])


def fsub(u, v):
    return (u[0] - v[0], u[1] - v[1])


def fmul(u, v):
    return (u[0] * v[0] + 2 * u[1] * v[1], u[0] * v[1] + u[1] * v[0])


def fneg(u):
    return (-u[0], -u[1])


def finv(u):
    d = u[0] * u[0] - 2 * u[1] * u[1]
    return (u[0] / d, -u[1] / d)


# quaternions: 4-tuples (a, b, c, d) of Q(sqrt(2)) scalars


def qmul(x, y):
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (
        fsub(fsub(fsub(fmul(a1, a2), fmul(b1, b2)), fmul(c1, c2)), fmul(d1, d2)),
        fsub(fadd(fadd(fmul(a1, b2), fmul(b1, a2)), fmul(c1, d2)), fmul(d1, c2)),
        fadd(fadd(fsub(fmul(a1, c2), fmul(b1, d2)), fmul(c1, a2)), fmul(d1, b2)),
        fadd(fsub(fadd(fmul(a1, d2), fmul(b1, c2)), fmul(c1, b2)), fmul(d1, a2)),
    )


def qconj(x):
    return (x[0], fneg(x[1]), fneg(x[2]), fneg(x[3]))


def qneg(x):
    return tuple(fneg(c) for c in x)


Q_ONE = (ONE, ZERO, ZERO, ZERO)
Q_I = (ZERO, ONE, ZERO, ZERO)
Q_J = (ZERO, ZERO, ONE, ZERO)
Q_ETA = (HALF_SQRT2, HALF_SQRT2, ZERO, ZERO)  # (1 + i)/sqrt(2)


def tmul(x, y):
    return tuple(qmul(a, b) for a, b in zip(x, y))


def tinv(x):
    return tuple(qconj(a) for a in x)


def closure(gens):
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tmul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


GAMMA_1 = (Q_J, Q_ETA, Q_ETA)
GAMMA_2 = (Q_ETA, Q_J, Q_ETA)
GAMMA_3 = (Q_ETA, Q_ETA, Q_J)
GAMMA_0 = (Q_I, Q_I, Q_I)

SIGNS = [tuple(Q_ONE if s == 0 else qneg(Q_ONE) for s in p) for p in product((0, 1), repeat=3)]
Z_GENS = [SIGNS[0b011], SIGNS[0b101]]  # (1,-1,-1) and (-1,1,-1)


def sign_class(x):
    """The orbit of x under per-component sign flips, as a frozenset."""
    out = set()
    for pattern in product((0, 1), repeat=3):
        out.add(tuple(qneg(c) if s else c for c, s in zip(x, pattern)))
    return frozenset(out)


def class_closure(classes):
    reps = {c: min(c) for c in classes}
    seen = set(classes)
    frontier = list(classes)
    while frontier:
        nxt = []
        for c in frontier:
            for g in classes:
                d = sign_class(tmul(reps[c], reps[g]))
                if d not in seen:
                    seen.add(d)
                    reps[d] = min(d)
                    nxt.append(d)
        frontier = nxt
    return seen


def is_real_free(cls):
    """True when no component of the class is purely imaginary."""
    x = min(cls)
    return all(c[0] != ZERO for c in x)


def rotation(q):
    """3x3 rotation matrix of Ad(q) acting on the imaginary quaternions."""
    a, b, c, d = q
    two = (Fraction(2), Fraction(0))
    aa, bb, cc, dd = fmul(a, a), fmul(b, b), fmul(c, c), fmul(d, d)
    return (
        (
            fsub(fsub(fadd(aa, bb), cc), dd),
            fmul(two, fsub(fmul(b, c), fmul(a, d))),
            fmul(two, fadd(fmul(b, d), fmul(a, c))),
        ),
        (
            fmul(two, fadd(fmul(b, c), fmul(a, d))),
            fsub(fadd(fsub(aa, bb), cc), dd),
            fmul(two, fsub(fmul(c, d), fmul(a, b))),
        ),
        (
            fmul(two, fsub(fmul(b, d), fmul(a, c))),
            fmul(two, fadd(fmul(c, d), fmul(a, b))),
            fadd(fsub(fsub(aa, bb), cc), dd),
        ),
    )


def mat_mul(m, n):
    return tuple(
        tuple(
            fadd(fadd(fmul(m[i][0], n[0][j]), fmul(m[i][1], n[1][j])), fmul(m[i][2], n[2][j]))
        for j in range(3))
    for i in range(3))


def so3_centralizer_order(quats):
    """Finite centralizer, in SO(3), of the rotation group generated by quats.

    Solves the 9-variable commutant system over Q(sqrt(2)) by Gaussian
    elimination, then enumerates +-1 combinations of the basis matrices and
    keeps exact rotations.  Returns (commutant_dim, n_rotations).
    """
    grp = closure([(q,) for q in quats])
    mats = [rotation(t[0]) for t in grp]
    rows = []
    for m in mats:
        # X*m - m*X = 0, X flattened row-major
        for i in range(3):
            for j in range(3):
                row = [ZERO] * 9
                for k in range(3):
                    row[3 * i + k] = fadd(row[3 * i + k], m[k][j])
                    row[3 * k + j] = fsub(row[3 * k + j], m[i][k])
                rows.append(row)
    # gaussian elimination over the field
    pivots = []
    reduced = []
    for row in rows:
        row = list(row)
        for prow, pcol in zip(reduced, pivots):
            if row[pcol] != ZERO:
                f = row[pcol]
                row = [fsub(r, fmul(f, p)) for r, p in zip(row, prow)]
        lead = next((k for k, v in enumerate(row) if v != ZERO), None)
        if lead is None:
            continue
        inv = finv(row[lead])
        row = [fmul(inv, v) for v in row]
        reduced.append(row)
        pivots.append(lead)
    dim = 9 - len(reduced)
    # nullspace basis by back substitution on free columns
    free = [k for k in range(9) if k not in pivots]
    basis = []
    for fcol in free:
        vec = [ZERO] * 9
        vec[fcol] = ONE
        for prow, pcol in sorted(zip(reduced, pivots), key=lambda t: -t[1]):
            s = ZERO
            for k in range(pcol + 1, 9):
                s = fadd(s, fmul(prow[k], vec[k]))
            vec[pcol] = fneg(s)
        basis.append(vec)
    count = 0
    for signs in product((1, -1), repeat=len(basis)):
        flat = [ZERO] * 9
        for s, vec in zip(signs, basis):
            for k in range(9):
                flat[k] = fadd(flat[k], vec[k]) if s == 1 else fsub(flat[k], vec[k])
        cand = tuple(tuple(flat[3 * i + j] for j in range(3)) for i in range(3))
        # orthogonal with determinant 1?
        ct = tuple(tuple(cand[j][i] for j in range(3)) for i in range(3))
        prod_ = mat_mul(cand, ct)
        ident = tuple(tuple(ONE if i == j else ZERO for j in range(3)) for i in range(3))
        if prod_ != ident:
            continue
        det = ZERO
        det = fadd(det, fmul(cand[0][0], fsub(fmul(cand[1][1], cand[2][2]), fmul(cand[1][2], cand[2][1]))))
        det = fsub(det, fmul(cand[0][1], fsub(fmul(cand[1][0], cand[2][2]), fmul(cand[1][2], cand[2][0]))))
        det = fadd(det, fmul(cand[0][2], fsub(fmul(cand[1][0], cand[2][1]), fmul(cand[1][1], cand[2][0]))))
        if det != ONE:
            continue
        if all(mat_mul(cand, m) == mat_mul(m, cand) for m in mats):
            count += 1
    return dim, count


def main():
    gens = [GAMMA_1, GAMMA_2, GAMMA_3, GAMMA_0]

    lam_plain = closure(gens)
    lam_z = closure(gens + Z_GENS)
    lam_full = closure(gens + SIGNS)
    print("closure(gens)                 =", len(lam_plain))
    print("closure(gens + Z)             =", len(lam_z))
    print("closure(gens + all signs)     =", len(lam_full))
    print("preimage order in the quotient =", len(lam_full) // 4)

    gbar = {sign_class(x) for x in lam_full}
    print("image group order mod signs   =", len(gbar))

    # subgroup generated by sign-free classes and all squares
    reps = {c: min(c) for c in gbar}
    seed = [c for c in gbar if is_real_free(c)]
    seed += [sign_class(tmul(reps[c], reps[c])) for c in gbar]
    prime = class_closure(set(seed))
    print("derived-style subgroup order  =", len(prime))
    print("quotient order                =", len(gbar) // len(prime))

    # elementary abelian 2 quotient? square of every class lands in the subgroup
    assert all(sign_class(tmul(reps[c], reps[c])) in prime for c in gbar)
    print("quotient is elementary abelian 2: True")
    print("hom count to {+-1}            =", 2 ** 4 if len(gbar) // len(prime) == 16 else "?")

    # factorwise rotation centralizers
    for pos in range(3):
        comps = [g[pos] for g in gens]
        grp = closure([(q,) for q in comps])
        dim, cnt = so3_centralizer_order(comps)
        print("factor %d: subgroup order %d, commutant dim %d, rotation centralizer order %d"
              % (pos, len(grp), dim, cnt))
        ri = rotation(Q_I)
        assert all(mat_mul(ri, rotation(t[0])) == mat_mul(rotation(t[0]), ri) for t in grp)
    print("half-turn about the first axis centralizes every factor: True")

    # which of the 8 centralizer triples admit a lift commuting with the
    # generators up to the 4-element central subgroup
    z_set = {SIGNS[0b000], SIGNS[0b011], SIGNS[0b101], SIGNS[0b110]}
    lift_choices = [Q_ONE, Q_I]
    good = 0
    for triple in product(lift_choices, repeat=3):
        g = tuple(triple)
        ok = True
        for x in gens:
            comm = tmul(tmul(g, x), tinv(tmul(x, g)))
            if comm not in z_set:
                ok = False
                break
        if ok:
            good += 1
    print("centralizer classes lifting to the quotient =", good)
    print("criterion quotient size        =", 8 // good)


if __name__ == "__main__":
    main()
