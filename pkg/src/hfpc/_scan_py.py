"""Pure-Python scan kernels for the candidate search.

Candidates are plain ints in the BitVector layout (coordinate 1 = MSB).
The compiled twin in _scan.pyx implements exactly the same pipeline and
counter semantics; hfpc._backend picks whichever is importable.

Family codes: 0 = 4tu2, 1 = 2t22u, 2 = 2t4u.
Counter tuples:
  two-generator: (examined, rejected_power, rejected_hadamard)
  quaternion:    (examined, rejected_power, rejected_no_b,
                  rejected_relation, rejected_hadamard)
"""

from __future__ import annotations

__all__ = ["scan_two_generator", "scan_quaternion", "gosper_next", "least_geq_with_weight"]


def gosper_next(v: int) -> int:
    """Next integer with the same popcount (Gosper's hack)."""
    c = v & -v
    r = v + c
    return r | (((v ^ r) >> 2) // c)


def least_geq_with_weight(lo: int, n: int, w: int) -> int | None:
    """Smallest x >= lo with exactly w bits among the low n, or None."""
    if lo >= (1 << n):
        return None
    if lo < 0:
        lo = 0
    if lo.bit_count() == w:
        return lo
    for i in range(n):
        if (lo >> i) & 1:
            continue
        prefix = lo >> (i + 1)
        need = w - prefix.bit_count() - 1
        if 0 <= need <= i:
            return (prefix << (i + 1)) | (1 << i) | ((1 << need) - 1)
    return None


def _weight_range(lo: int, hi: int, n: int, w: int):
    v = least_geq_with_weight(lo, n, w)
    limit = min(hi, 1 << n)
    while v is not None and v < limit:
        yield v
        v = gosper_next(v)


def scan_two_generator(
    family: int, t: int, lo: int, hi: int, first_only: bool = False
) -> tuple[list[int], tuple[int, int, int]]:
    n = 4 * t
    h = 2 * t
    mh = (1 << h) - 1
    w = 2 * t
    need_odd = 1 if family == 0 else 0
    b_compl = family == 2
    examined = rej_pow = rej_had = 0
    accepted: list[int] = []
    wj = [0] * h  # powers a^0 .. a^(h-1)
    d_tab = [0] * n

    for a in _weight_range(lo, hi, n, w):
        ah_half = a >> h
        if (ah_half.bit_count() & 1) != need_odd:
            continue
        examined += 1

        # companion generator: first half of b is the suffix xor of a + pi_b(a)
        p = ah_half ^ (a & mh)
        k = 1
        while k < h:
            p ^= (p << k) & mh
            k <<= 1
        bh = (p << 1) & mh
        b = (bh << h) | (bh ^ mh if b_compl else bh)

        # incremental powers, rejecting on the first one of wrong weight
        wj[0] = 0
        wj[1] = a
        cur = a
        bad = False
        for j in range(2, h):
            ch = cur >> h
            cl = cur & mh
            ch = (ch >> 1) | ((ch & 1) << (h - 1))
            cl = (cl >> 1) | ((cl & 1) << (h - 1))
            cur = a ^ ((ch << h) | cl)
            if cur.bit_count() != w:
                bad = True
                break
            wj[j] = cur
        if bad:
            rej_pow += 1
            continue

        # full table: a^j and a^j * b, then all pairwise distances must be 2t
        rb = b
        for j in range(h):
            d_tab[j] = wj[j]
            d_tab[h + j] = wj[j] ^ rb
            rh = rb >> h
            rl = rb & mh
            rh = (rh >> 1) | ((rh & 1) << (h - 1))
            rl = (rl >> 1) | ((rl & 1) << (h - 1))
            rb = (rh << h) | rl
        ok = True
        for i in range(n):
            di = d_tab[i]
            for j in range(i + 1, n):
                if (di ^ d_tab[j]).bit_count() != w:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            rej_had += 1
            continue
        accepted.append(a)
        if first_only:
            break
    return accepted, (examined, rej_pow, rej_had)


def scan_quaternion(
    t: int, lo: int, hi: int, first_only: bool = False
) -> tuple[list[tuple[int, int, int]], tuple[int, int, int, int, int]]:
    n = 4 * t
    w = 2 * t
    full = (1 << n) - 1
    m1 = int("1000" * t, 2)
    m2 = m1 >> 1
    m3 = m1 >> 2
    aa = int("10" * (2 * t), 2)  # odd bit positions, for the pair swap
    bb = aa >> 1
    cc = int("1100" * t, 2)  # high bit pairs of each nibble
    dd = cc >> 2

    def rot4(x: int) -> int:
        return (x >> 4) | ((x & 15) << (n - 4))

    def pairswap(x: int) -> int:
        return ((x & aa) >> 1) | ((x & bb) << 1)

    def nibswap(x: int) -> int:
        return ((x & cc) >> 2) | ((x & dd) << 2)

    examined = rej_pow = rej_nob = rej_rel = rej_had = 0
    accepted: list[tuple[int, int, int]] = []
    powers = [0] * t
    t_tab = [0] * n

    for d in _weight_range(lo, hi, n, w):
        if (d & m1).bit_count() & 1 or (d & m2).bit_count() & 1 or (d & m3).bit_count() & 1:
            continue
        examined += 1

        powers[0] = 0
        if t > 1:
            powers[1] = d
        cur = d
        bad = False
        for j in range(2, t):
            cur = d ^ rot4(cur)
            if cur.bit_count() != w:
                bad = True
                break
            powers[j] = cur
        if bad:
            rej_pow += 1
            continue

        what = d ^ pairswap(d)
        wtil = d ^ nibswap(d)
        seen: set[tuple[int, ...]] = set()
        stop = False
        for f1 in (0, 1):
            for f3 in (0, 1):
                # a from d: telescoped class sums, blocks (a1, ~a1, a3, ~a3)
                pre1 = pre3 = 0
                a = 0
                for i in range(t):
                    sh = n - 4 * i - 4
                    pre1 ^= (what >> (sh + 3)) & 1
                    pre3 ^= (what >> (sh + 1)) & 1
                    a1 = f1 ^ pre1
                    a3 = f3 ^ pre3
                    a |= (a1 << (sh + 3)) | ((a1 ^ 1) << (sh + 2))
                    a |= (a3 << (sh + 1)) | ((a3 ^ 1) << sh)
                # b from a, seed 0: the seed-1 twin is b + u and generates
                # the same code, so only one seed is scanned here
                seed2 = 1 ^ ((a >> 3) & 1) ^ ((a >> 1) & 1)
                pre1 = pre2 = 0
                b = 0
                nob = False
                for i in range(t):
                    sh = n - 4 * i - 4
                    pre1 ^= (wtil >> (sh + 3)) & 1
                    pre2 ^= (wtil >> (sh + 2)) & 1
                    b1 = pre1
                    b2 = seed2 ^ pre2
                    if b1 ^ b2 != 1 ^ ((a >> (sh + 3)) & 1) ^ ((a >> (sh + 1)) & 1):
                        nob = True
                        break
                    b |= (b1 << (sh + 3)) | (b2 << (sh + 2))
                    b |= ((b1 ^ 1) << (sh + 1)) | ((b2 ^ 1) << sh)
                if nob:
                    rej_nob += 1
                    continue
                ab = a ^ pairswap(b)
                if (
                    d ^ rot4(a) != a ^ pairswap(d)
                    or d ^ rot4(b) != b ^ nibswap(d)
                    or ab ^ pairswap(nibswap(a)) != b
                ):
                    rej_rel += 1
                    continue
                rqa, rqb, rqab = a, b, ab
                for j in range(t):
                    base = 4 * j
                    pj = powers[j]
                    t_tab[base] = pj
                    t_tab[base + 1] = pj ^ rqa
                    t_tab[base + 2] = pj ^ rqb
                    t_tab[base + 3] = pj ^ rqab
                    rqa = rot4(rqa)
                    rqb = rot4(rqb)
                    rqab = rot4(rqab)
                ok = True
                for i in range(n):
                    ti = t_tab[i]
                    for j in range(i + 1, n):
                        if (ti ^ t_tab[j]).bit_count() != w:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    rej_had += 1
                    continue
                sig = tuple(sorted(min(x, x ^ full) for x in t_tab))
                if sig in seen:
                    continue
                seen.add(sig)
                accepted.append((d, a, b))
                if first_only:
                    stop = True
                    break
            if stop:
                break
        if stop:
            break
    return accepted, (examined, rej_pow, rej_nob, rej_rel, rej_had)
