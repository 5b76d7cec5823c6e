"""List-decoding checks and the duality with order-3 intersections.

The extended Reed-Solomon [6,3] code over GF(5) is MDS, yet its dual fails
the average-radius list bound at list size 2, matching the failure of the
order-3 intersection property on the primal side.  The worst-case bound at
the matched radius fails along with it, and the duality check confirms the
two verdicts agree.
"""

from mdskit import (
    duality_test,
    explicit_code,
    field_make,
    is_mds,
    is_mds_ell,
    ld_mds_check,
    dual_code,
    worst_case_ld_check,
)


def extended_rs_63():
    f5 = field_make(5, [])
    rows = []
    for power in range(3):
        row = [f5.from_int(x) ** power for x in range(5)]
        row.append(f5.one if power == 2 else f5.zero)
        rows.append(row)
    return explicit_code(f5, rows)


def main():
    code = extended_rs_63()
    print("extended RS [6,3] over GF(5):")
    print(" ", is_mds(code).to_line())
    print(" ", is_mds_ell(code, 3).to_line())

    dual = dual_code(code)
    rep = ld_mds_check(dual, 2)
    print("dual, average-radius list bound at L=2:")
    print(" ", rep.to_line())
    print("  detail:", rep.detail)

    print("dual, worst-case at rho = 2(n-k)/(3n) = 1/3:")
    print(" ", worst_case_ld_check(dual, 2, 1, 3).to_line())

    print("duality check, order 2 on the primal:")
    print(" ", duality_test(code, 2).to_line())


if __name__ == "__main__":
    main()
