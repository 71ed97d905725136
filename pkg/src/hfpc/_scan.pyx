# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of hfpc._scan_py: identical pipeline, counters and output
order, with the candidate loop running on C uint64 words (lengths up to 64)."""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #define POPCNT64(x) ((int)__builtin_popcountll((unsigned long long)(x)))
    """
    int POPCNT64(uint64_t x) nogil


cdef inline uint64_t gosper(uint64_t v) nogil:
    cdef uint64_t c = v & (~v + 1)
    cdef uint64_t r = v + c
    return r | (((v ^ r) >> 2) / c)


cdef uint64_t least_geq_weight(uint64_t lo, int n, int w, bint *found) nogil:
    cdef uint64_t prefix
    cdef int i, need
    if lo >= ((<uint64_t>1) << n):
        found[0] = False
        return 0
    if POPCNT64(lo) == w:
        found[0] = True
        return lo
    for i in range(n):
        if (lo >> i) & 1:
            continue
        prefix = lo >> (i + 1)
        need = w - POPCNT64(prefix) - 1
        if 0 <= need <= i:
            found[0] = True
            return (prefix << (i + 1)) | ((<uint64_t>1) << i) | ((((<uint64_t>1) << need)) - 1)
    found[0] = False
    return 0


def gosper_next(v):
    return int(gosper(<uint64_t>v))


def least_geq_with_weight(lo, n, w):
    cdef bint found = False
    cdef uint64_t r = least_geq_weight(<uint64_t>lo, <int>n, <int>w, &found)
    return int(r) if found else None


def scan_two_generator(int family, int t, object lo_obj, object hi_obj,
                       bint first_only=False):
    cdef int n = 4 * t
    cdef int h = 2 * t
    if n > 64:
        raise ValueError("word path supports lengths up to 64")
    cdef uint64_t lo = <uint64_t>lo_obj
    cdef uint64_t hi = <uint64_t>hi_obj
    cdef uint64_t limit = (<uint64_t>1) << n
    if hi < limit:
        limit = hi
    cdef uint64_t mh = ((<uint64_t>1) << h) - 1
    cdef int w = 2 * t
    cdef int need_odd = 1 if family == 0 else 0
    cdef bint b_compl = family == 2
    cdef long long examined = 0, rej_pow = 0, rej_had = 0
    cdef uint64_t wj[64]
    cdef uint64_t d_tab[64]
    cdef uint64_t a, p, bh, b, cur, ch, cl, rb, rh, rl, di
    cdef int k, j, i
    cdef bint bad, ok, found = False
    accepted = []

    a = least_geq_weight(lo, n, w, &found)
    while found and a < limit:
        if (POPCNT64(a >> h) & 1) == need_odd:
            examined += 1
            p = (a >> h) ^ (a & mh)
            k = 1
            while k < h:
                p ^= (p << k) & mh
                k <<= 1
            bh = (p << 1) & mh
            b = (bh << h) | ((bh ^ mh) if b_compl else bh)

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
                if POPCNT64(cur) != w:
                    bad = True
                    break
                wj[j] = cur
            if bad:
                rej_pow += 1
            else:
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
                        if POPCNT64(di ^ d_tab[j]) != w:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    rej_had += 1
                else:
                    accepted.append(int(a))
                    if first_only:
                        break
        a = gosper(a)
        if a >= limit:
            break
    return accepted, (int(examined), int(rej_pow), int(rej_had))


def scan_quaternion(int t, object lo_obj, object hi_obj, bint first_only=False):
    cdef int n = 4 * t
    if n > 64:
        raise ValueError("word path supports lengths up to 64")
    cdef uint64_t lo = <uint64_t>lo_obj
    cdef uint64_t hi = <uint64_t>hi_obj
    cdef uint64_t limit = (<uint64_t>1) << n
    if hi < limit:
        limit = hi
    cdef int w = 2 * t
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t m1 = 0, aa = 0, cc = 0
    cdef int i, j, sh, base
    for i in range(t):
        m1 |= (<uint64_t>8) << (4 * i)
        cc |= (<uint64_t>12) << (4 * i)
    for i in range(n // 2):
        aa |= (<uint64_t>2) << (2 * i)
    cdef uint64_t m2 = m1 >> 1
    cdef uint64_t m3 = m1 >> 2
    cdef uint64_t bb = aa >> 1
    cdef uint64_t dd = cc >> 2

    cdef long long examined = 0, rej_pow = 0, rej_nob = 0, rej_rel = 0, rej_had = 0
    cdef uint64_t powers[16]
    cdef uint64_t t_tab[64]
    cdef uint64_t canon[64]
    cdef uint64_t d, cur, what, wtil, a, b, ab, rqa, rqb, rqab, ti, x
    cdef int f1, f3, pre1, pre3, pre2, a1, a3, b1, b2, seed2
    cdef bint bad, ok, nob, stop, found = False
    accepted = []

    d = least_geq_weight(lo, n, w, &found)
    while found and d < limit:
        if ((POPCNT64(d & m1) | POPCNT64(d & m2) | POPCNT64(d & m3)) & 1) == 0:
            examined += 1
            powers[0] = 0
            if t > 1:
                powers[1] = d
            cur = d
            bad = False
            for j in range(2, t):
                cur = (cur >> 4) | ((cur & 15) << (n - 4))
                cur ^= d
                if POPCNT64(cur) != w:
                    bad = True
                    break
                powers[j] = cur
            if bad:
                rej_pow += 1
            else:
                what = d ^ (((d & aa) >> 1) | ((d & bb) << 1))
                wtil = d ^ (((d & cc) >> 2) | ((d & dd) << 2))
                seen = set()
                stop = False
                for f1 in range(2):
                    if stop:
                        break
                    for f3 in range(2):
                        pre1 = 0
                        pre3 = 0
                        a = 0
                        for i in range(t):
                            sh = n - 4 * i - 4
                            pre1 ^= <int>((what >> (sh + 3)) & 1)
                            pre3 ^= <int>((what >> (sh + 1)) & 1)
                            a1 = f1 ^ pre1
                            a3 = f3 ^ pre3
                            a |= (<uint64_t>a1 << (sh + 3)) | (<uint64_t>(a1 ^ 1) << (sh + 2))
                            a |= (<uint64_t>a3 << (sh + 1)) | (<uint64_t>(a3 ^ 1) << sh)
                        seed2 = 1 ^ <int>((a >> 3) & 1) ^ <int>((a >> 1) & 1)
                        pre1 = 0
                        pre2 = 0
                        b = 0
                        nob = False
                        for i in range(t):
                            sh = n - 4 * i - 4
                            pre1 ^= <int>((wtil >> (sh + 3)) & 1)
                            pre2 ^= <int>((wtil >> (sh + 2)) & 1)
                            b1 = pre1
                            b2 = seed2 ^ pre2
                            if b1 ^ b2 != 1 ^ <int>((a >> (sh + 3)) & 1) ^ <int>((a >> (sh + 1)) & 1):
                                nob = True
                                break
                            b |= (<uint64_t>b1 << (sh + 3)) | (<uint64_t>b2 << (sh + 2))
                            b |= (<uint64_t>(b1 ^ 1) << (sh + 1)) | (<uint64_t>(b2 ^ 1) << sh)
                        if nob:
                            rej_nob += 1
                            continue
                        ab = a ^ (((b & aa) >> 1) | ((b & bb) << 1))
                        x = ((a & cc) >> 2) | ((a & dd) << 2)
                        x = ((x & aa) >> 1) | ((x & bb) << 1)
                        if (d ^ ((a >> 4) | ((a & 15) << (n - 4)))) != (a ^ (((d & aa) >> 1) | ((d & bb) << 1))) \
                           or (d ^ ((b >> 4) | ((b & 15) << (n - 4)))) != (b ^ (((d & cc) >> 2) | ((d & dd) << 2))) \
                           or (ab ^ x) != b:
                            rej_rel += 1
                            continue
                        rqa = a
                        rqb = b
                        rqab = ab
                        for j in range(t):
                            base = 4 * j
                            t_tab[base] = powers[j]
                            t_tab[base + 1] = powers[j] ^ rqa
                            t_tab[base + 2] = powers[j] ^ rqb
                            t_tab[base + 3] = powers[j] ^ rqab
                            rqa = (rqa >> 4) | ((rqa & 15) << (n - 4))
                            rqb = (rqb >> 4) | ((rqb & 15) << (n - 4))
                            rqab = (rqab >> 4) | ((rqab & 15) << (n - 4))
                        ok = True
                        for i in range(n):
                            ti = t_tab[i]
                            for j in range(i + 1, n):
                                if POPCNT64(ti ^ t_tab[j]) != w:
                                    ok = False
                                    break
                            if not ok:
                                break
                        if not ok:
                            rej_had += 1
                            continue
                        for i in range(n):
                            x = t_tab[i]
                            if (x ^ full) < x:
                                x ^= full
                            canon[i] = x
                        sig = tuple(sorted([int(canon[i]) for i in range(n)]))
                        if sig in seen:
                            continue
                        seen.add(sig)
                        accepted.append((int(d), int(a), int(b)))
                        if first_only:
                            stop = True
                            break
                if stop:
                    break
        d = gosper(d)
        if d >= limit:
            break
    return accepted, (int(examined), int(rej_pow), int(rej_nob), int(rej_rel), int(rej_had))
