"""Counts for the order-32 group with two order-4 generators and central
commutator, realized on triples (a, b, c) in C2 x C4 x C4 with
(a,b,c)*(a',b',c') = (a + a' + c*b' mod 2, b + b' mod 4, c + c' mod 4).

Run once; the printed structure constants go into the finite-group tests.
"""

from itertools import product


def mul(x, y):
    return ((x[0] + y[0] + x[2] * y[1]) % 2, (x[1] + y[1]) % 4, (x[2] + y[2]) % 4)


def inv(x):
    return ((x[0] + x[1] * x[2]) % 2, (-x[1]) % 4, (-x[2]) % 4)


def main():
    elems = [(a, b, c) for a in range(2) for b in range(4) for c in range(4)]
    ident = (0, 0, 0)

    assert all(mul(x, inv(x)) == ident for x in elems)
    assert all(
        mul(mul(x, y), z) == mul(x, mul(y, z))
        for x, y, z in product(elems[:8], elems[:8], elems[:8])
    )
    print("order                =", len(elems))

    g0, g1, g2 = (1, 0, 0), (0, 1, 0), (0, 0, 1)

    def power(x, k):
        acc = ident
        for _ in range(k):
            acc = mul(acc, x)
        return acc

    print("generator orders     =",
          [min(k for k in range(1, 33) if power(g, k) == ident) for g in (g0, g1, g2)])
    comm = mul(mul(g2, g1), inv(mul(g1, g2)))
    print("[g2, g1]             =", comm, "equals g0:", comm == g0)

    commutators = {mul(mul(x, y), inv(mul(y, x))) for x in elems for y in elems}
    derived = {ident}
    frontier = list(commutators)
    while frontier:
        nxt = []
        for x in frontier:
            for y in commutators:
                z = mul(x, y)
                if z not in derived:
                    derived.add(z)
                    nxt.append(z)
        frontier = nxt
    print("derived subgroup     =", sorted(derived))
    print("abelianization order =", len(elems) // len(derived))

    center = [x for x in elems if all(mul(x, y) == mul(y, x) for y in elems)]
    print("center order         =", len(center))

    # homomorphisms to {+-1}: kernels of index <= 2, counted directly
    count = 0
    for chi_bits in product((0, 1), repeat=2):
        # a hom is determined on g1, g2 and must kill g0 = [g2, g1]
        images = {g1: chi_bits[0], g2: chi_bits[1]}
        ok = True
        seen = {ident: 0}
        frontier = [(ident, 0)]
        while frontier and ok:
            nxt = []
            for x, v in frontier:
                for g, w in images.items():
                    y = mul(x, g)
                    u = (v + w) % 2
                    if y not in seen:
                        seen[y] = u
                        nxt.append((y, u))
                    elif seen[y] != u:
                        ok = False
            frontier = nxt
        if ok and len(seen) in (16, 32):
            # extend by g0 -> 0 when g0 not reached
            count += 1
    print("homs to {+-1}        =", count)


if __name__ == "__main__":
    main()
