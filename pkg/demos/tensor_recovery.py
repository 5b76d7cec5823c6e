"""Maximal recoverability of a parity-column tensor code.

A single parity check column code crossed with a row code corrects an
erasure pattern exactly when generic component codes would; whether that
holds for every pattern depends only on the row code.  A Reed-Solomon row
passes, a row with a zero parity position does not, and the failure report
names the cheapest pattern that separates the two.
"""

from mdskit import (
    ErasurePattern,
    TensorCodeSpec,
    explicit_code,
    field_make,
    mr_check,
    rs_code,
    single_parity_code,
    tensor_parity,
)
from mdskit.linalg import rank


def main():
    f7 = field_make(7, [])
    col = single_parity_code(f7, 3)
    row = rs_code(f7, [f7.from_int(i) for i in range(5)], 3)
    spec = TensorCodeSpec(col, row)
    print("RS row code:")
    print(" ", mr_check(spec).to_line())

    # same shape, but two equal columns keep the row code from being MDS
    bad_row = explicit_code(
        f7, [[1, 0, 0, 1, 0], [0, 1, 0, 0, 1], [0, 0, 1, 0, 1]]
    )
    bad = TensorCodeSpec(col, bad_row)
    rep = mr_check(bad)
    print("degenerate row code:")
    print(" ", rep.to_line())
    print("  detail:", rep.detail)

    # single-pattern query: erase one full grid column plus a stray cell
    pattern = ErasurePattern.from_indices(3, 5, [0, 5, 10, 7])
    h = tensor_parity(spec)
    cols = pattern.indices()
    ok = rank(h.submatrix(range(h.nrows), cols)) == len(cols)
    print(f"pattern {pattern.format()}: correctable={ok}")


if __name__ == "__main__":
    main()
