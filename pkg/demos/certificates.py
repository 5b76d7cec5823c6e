"""Verify the transcribed polynomial certificates behind the k=3 family.

The twist coefficients p0..p3 of a pairing determinant generate an ideal;
the certificate expresses a target product polynomial as an explicit
combination.  Checking is pure arithmetic: expand and compare, then an
independent Groebner-basis membership run confirms the same containment.
"""

from mdskit import (
    pairing_ideal,
    verify_char2_membership,
    verify_claim_q_identity,
    verify_groebner_claim,
)


def main():
    p0, p1, p2, p3 = pairing_ideal(7, power=2)
    print("ideal generators over GF(7):")
    for name, poly in (("p0", p0), ("p1", p1), ("p2", p2), ("p3", p3)):
        print(f"  {name}: {len(poly.terms)} terms, degree {poly.degree()}")

    for p in (7, 11):
        print(f"combiner identity at characteristic {p}:", verify_claim_q_identity(p))

    print("Groebner membership over GF(7):", verify_groebner_claim())
    print("characteristic-2 membership:", verify_char2_membership())


if __name__ == "__main__":
    main()
