"""Characteristic polynomials and elementwise-conjugacy tables via sympy.

Independent reference values for the matrix pairs used by the certificate
suite.  Coefficients are printed in descending degree as exact rational
combinations of roots of unity, already expanded and simplified by sympy.
"""

import sympy
from sympy import I, Matrix, Rational, exp, pi, symbols

x = symbols("x")


def charpoly_expr(m):
    n = m.rows
    return sympy.expand((x * sympy.eye(n) - m).det(method="berkowitz"))


def charpoly_coeffs(m):
    p = charpoly_expr(m)
    n = m.rows
    return [sympy.simplify(p.coeff(x, k)) for k in range(n, -1, -1)]


def cyclic_shift(n):
    rows = []
    for i in range(n):
        rows.append([1 if j == (i + 1) % n else 0 for j in range(n)])
    return Matrix(rows)


def root_diag(n):
    w = exp(2 * pi * I / n)
    return sympy.diag(*[w**k for k in range(n)])


def diag_i_pair():
    a = sympy.diag(1, 1, I, -I)
    b = sympy.diag(1, I, 1, -I)
    return a, b


def conj_in_quotient(m1, m2, center_scalars):
    """Is m2 = z * (unitary conjugate of m1) for some central scalar z?

    For normal matrices equality of characteristic polynomials decides
    unitary conjugacy, so compare charpolys of z**-1 * m2 against m1.
    """
    target = charpoly_expr(m1)
    for z in center_scalars:
        cand = charpoly_expr(m2 / z)
        if sympy.simplify(cand - target) == 0:
            return True
    return False


def print_pair_table(name, f1, f2, order, center_scalars):
    results = []
    for a in range(order):
        for b in range(order):
            m1 = f1(a, b)
            m2 = f2(a, b)
            results.append(conj_in_quotient(m1, m2, center_scalars))
    print("%s: all %d pairs conjugate in the quotient: %s"
          % (name, len(results), all(results)))


def main():
    a4, b4 = diag_i_pair()

    print("charpoly diag(1,1,i,-i):", charpoly_coeffs(a4))
    print("charpoly diag(1,i,1,-i):", charpoly_coeffs(b4))
    print("charpoly product      :", charpoly_coeffs(a4 * b4))

    for p in (3, 5):
        ap = cyclic_shift(p)
        bp = root_diag(p)
        print("charpoly shift(%d)      :" % p, charpoly_coeffs(ap))
        print("charpoly shift*diag(%d) :" % p, charpoly_coeffs(ap * bp))

    # pair one: diagonal vs entrywise conjugate, center {1, -1}
    print_pair_table(
        "unit-i diagonal pair",
        lambda a, b: a4**a * b4**b,
        lambda a, b: (a4**a * b4**b).conjugate(),
        4,
        [1, -1],
    )

    # pair two: shift with diag vs squared diag, center = p-th roots of 1
    for p in (3, 5):
        ap = cyclic_shift(p)
        bp = root_diag(p)
        w = exp(2 * pi * I / p)
        print_pair_table(
            "shift/diag pair p=%d" % p,
            lambda a, b, ap=ap, bp=bp: ap**a * bp**b,
            lambda a, b, ap=ap, bp=bp: ap**a * bp**(2 * b),
            p,
            [w**k for k in range(p)],
        )

    # rotation by a quarter turn about the first axis
    r = Matrix([[1, 0, 0], [0, 0, -1], [0, 1, 0]])
    print("charpoly quarter-turn  :", charpoly_coeffs(r))

    # scalar relation used by the square-root constructor
    s2 = exp(2 * pi * I / 8) + exp(-2 * pi * I / 8)
    print("zeta_8 + zeta_8^-1 squared =", sympy.simplify(s2**2))


if __name__ == "__main__":
    main()
