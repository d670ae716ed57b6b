"""A short tour of the cyclotomic layer.

Run:  python3 demos/cyclotomic_tour.py
"""

from qcongruence.bigpoly import IntPoly
from qcongruence.cyclotomic import divisors, euler_phi, phi, phi_at_one, q_int


def main():
    print("Cyclotomic polynomials Phi_d, exactly, for any d:")
    for d in (1, 2, 3, 4, 6, 12, 105):
        p = phi(d)
        print(f"  Phi_{d} (degree {p.degree} = euler_phi({d}) "
              f"= {euler_phi(d)})")
        if p.degree <= 8:
            print(f"         = {p!r}")
    print()
    print("Phi_105 is the first with a coefficient outside -1..1:")
    print(f"  min coefficient = {min(phi(105).coeffs)}")
    print()

    n = 12
    print(f"q^{n} - 1 factors as the product of Phi_d over d | {n}:")
    prod = IntPoly(1)
    for d in divisors(n):
        prod = prod * phi(d)
    print(f"  divisors: {divisors(n)}")
    print(f"  product : {prod!r}")
    print()

    print(f"And the q-integer [{n}]_q = 1 + q + ... + q^{n-1} is the same")
    print("product with Phi_1 left out:")
    prod = IntPoly(1)
    for d in divisors(n):
        if d >= 2:
            prod = prod * phi(d)
    assert prod == q_int(n).base
    print(f"  {prod!r}")
    print()

    print("At q = 1 a cyclotomic knows whether d is a prime power:")
    for d in (2, 4, 9, 97, 6, 12, 30):
        print(f"  Phi_{d}(1) = {phi_at_one(d)}")
    print()
    print("Phi_d(1) is p exactly when d is a power of the prime p, and 1")
    print("otherwise. That single fact drives every divisibility bound in")
    print("this package: products of cyclotomics evaluated at 1 become")
    print("ordinary integers whose prime factorizations are read off the")
    print("indices, with nothing to cancel and nothing to estimate.")


if __name__ == "__main__":
    main()
