"""Shared constants and independent oracles for the test suite.

The oracles here deliberately avoid the library's optimized code paths:
rank by explicit span enumeration, kernel by trying every word of F^n,
search by running the reference constructor on the whole 2^4t space.
"""

from __future__ import annotations

from itertools import combinations

from hfpc.families import Reject, assemble, assemble_quaternion_variants
from hfpc.gf2 import BitVector
from hfpc.propelinear import PropelinearElement, star_elem

# Known order-16 circulant complex Hadamard rows and the generators of the
# corresponding length-32 codes, with their (rank, kernel dimension).
ORDER16_ROW_A = "1,1,i,-i,i,1,1,i,-1,1,-i,-i,-i,1,-1,i"
ORDER16_ROW_B = "i,i,i,i,1,i,-i,-1,-i,i,i,-i,-1,i,-i,1"
GENERATOR_A = "00011000111001111011110101000010"
GENERATOR_B = "00000010010101111000111111011010"
PROFILE_A = (11, 2)
PROFILE_B = (13, 1)

# Expected reproduction table: {(family, t): cell}, where a cell is either
# the string "analytic" / "na", or a tuple of (rank, kernel) profiles
# (empty tuple = searched, nothing found).
EXPECTED_CELLS = {
    ("4tu2", 1): ((3, 3),),
    ("2t22u", 1): ((3, 3),),
    ("2t4u", 1): ((3, 3),),
    ("tqu", 1): (),
    ("4tu2", 2): ((4, 4),),
    ("2t22u", 2): "analytic",
    ("2t4u", 2): ((4, 4),),
    ("tqu", 2): "na",
    ("4tu2", 3): "analytic",
    ("2t22u", 3): "analytic",
    ("2t4u", 3): "analytic",
    ("tqu", 3): ((11, 1),),
    ("4tu2", 4): (),
    ("2t22u", 4): ((5, 5), (6, 3)),
    ("2t4u", 4): ((7, 2),),
    ("tqu", 4): "na",
    ("4tu2", 5): "analytic",
    ("2t22u", 5): "analytic",
    ("2t4u", 5): "analytic",
    ("tqu", 5): ((19, 1),),
    ("4tu2", 6): (),
    ("2t22u", 6): "analytic",
    ("2t4u", 6): (),
    ("tqu", 6): "na",
    ("4tu2", 7): "analytic",
    ("2t22u", 7): "analytic",
    ("2t4u", 7): "analytic",
    ("tqu", 7): ((27, 1),),
}


def span_of(values: list[int]) -> set[int]:
    """All GF(2) combinations of the given words."""
    span = {0}
    for v in values:
        span |= {s ^ v for s in span}
    return span


def rank_by_span(vectors) -> int:
    size = len(span_of([v.value for v in vectors]))
    return size.bit_length() - 1


def kernel_all_words(vectors) -> set[int]:
    """K(C) computed from the definition, over every word of F^n (n <= 16)."""
    vals = {v.value for v in vectors}
    n = next(iter(vectors)).n
    assert n <= 16, "exhaustive kernel oracle is for short lengths only"
    return {z for z in range(1 << n) if all(x ^ z in vals for x in vals)}


def iterated_star_power(x: PropelinearElement, i: int) -> BitVector:
    """x^i by i-1 star multiplications, independent of element_power."""
    acc = x
    for _ in range(i - 1):
        acc = star_elem(x, acc)
    return acc.vector


def element_order(x: PropelinearElement, limit: int) -> int:
    acc = x
    for i in range(1, limit + 1):
        if acc.vector.value == 0 and acc.perm.images == tuple(
            range(1, x.perm.degree + 1)
        ):
            return i
        acc = star_elem(x, acc)
    raise AssertionError("order above limit")


def brute_force_accepted(tag: str, t: int):
    """Accepted candidates and code sets over the whole unfiltered space."""
    n = 4 * t
    out = []
    for raw in range(1 << n):
        v = BitVector(n, raw)
        if tag == "tqu":
            codes, _ = assemble_quaternion_variants(t, v)
            for c in codes:
                out.append((raw, c))
        else:
            c = assemble(tag, t, v)
            if not isinstance(c, Reject):
                out.append((raw, c))
    return out


def rebuild_code(acc):
    """PropelinearCode behind an AcceptedCode search record."""
    from hfpc.families import assemble_quaternion_explicit

    prof = acc.profile
    n = prof.length
    if acc.family == "tqu":
        code = assemble_quaternion_explicit(
            acc.t,
            BitVector.from_string(prof.generator_d),
            BitVector.from_string(prof.generator_a),
            BitVector.from_string(prof.generator_b),
        )
    else:
        code = assemble(acc.family, acc.t, BitVector.from_string(prof.generator_a))
    assert not isinstance(code, Reject)
    assert code.vector_values == acc.vector_values
    return code


def all_weight_w(n: int, w: int) -> list[int]:
    """Every n-bit word of weight w, ascending (independent of Gosper)."""
    out = []
    for support in combinations(range(n), w):
        x = 0
        for p in support:
            x |= 1 << p
        out.append(x)
    return sorted(out)
