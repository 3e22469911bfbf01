# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled normal-form kernel; a line-for-line twin of ``_nf_py``.

Indices and codes are 64-bit; overflow is unreachable under any sane step limit.
"""

from libcpp.vector cimport vector

ctypedef long long i64

cdef enum:
    OK = 0
    STEP_LIMIT = 1


cdef i64 push_negative(vector[i64]& N, i64 k):
    cdef i64 steps = 0
    cdef Py_ssize_t pos = <Py_ssize_t>N.size() - 1
    while pos >= 0 and N[pos] < k:
        k += 1
        pos -= 1
        steps += 1
    N.insert(N.begin() + (pos + 1), k)
    return steps + 1


cdef i64 push_negative_left(vector[i64]& N, i64 c):
    cdef i64 steps = 0
    cdef size_t q = 0
    while q < N.size() and c < N[q]:
        N[q] += 1
        q += 1
        steps += 1
    N.insert(N.begin() + q, c)
    return steps + 1


cdef i64 insert_positive(vector[i64]& P, vector[i64]& N, int fam, i64 k):
    cdef i64 steps = 0
    cdef Py_ssize_t pos = <Py_ssize_t>P.size() - 1
    cdef size_t q, tail
    while pos >= 0 and (P[pos] >> 1) > k:
        P[pos] += 2
        pos -= 1
        steps += 1
    if pos >= 0 and P[pos] == 2 * k + 1:
        if fam == 1:
            P[pos] = 2 * k
            P.insert(P.begin() + (pos + 1), 2 * (k + 1))
            return steps + 1
        P.insert(P.begin() + pos, 2 * k)
        P.insert(P.begin() + (pos + 2), 2 * (k + 2))
        tail = pos + 3
        for q in range(tail, P.size()):
            P[q] += 2
        steps += 1 + <i64>(P.size() - tail)
        return steps + push_negative_left(N, k + 1)
    P.insert(P.begin() + (pos + 1), 2 * k + fam)
    return steps + 1


cdef i64 push_positive(vector[i64]& P, vector[i64]& N, vector[i64]& pending, int fam, i64 k):
    cdef i64 steps = 0
    cdef Py_ssize_t pos = <Py_ssize_t>N.size() - 1
    cdef Py_ssize_t q
    cdef i64 i
    cdef vector[i64] rest
    while pos >= 0:
        i = N[pos]
        if i < k:
            k += 1
            pos -= 1
            steps += 1
        elif i > k:
            for q in range(pos + 1):
                N[q] += 1
            steps += pos + 1
            break
        elif fam == 0:
            N.erase(N.begin() + pos)
            return steps + 1
        else:
            rest.assign(N.begin() + (pos + 1), N.end())
            N.resize(pos)
            for q in range(<Py_ssize_t>rest.size() - 1, -1, -1):
                pending.push_back(-(2 * rest[q] + 1))
            pending.push_back(-(2 * k + 1))
            pending.push_back(-(2 * (k + 1) + 1))
            pending.push_back(2 * (k + 2) + 1)
            pending.push_back(2 * k + 2)
            return steps + 1
    return steps + insert_positive(P, N, fam, k)


cdef bint violates_first(vector[i64]& xi, vector[i64]& ey, vector[i64]& xj, size_t k):
    return (xi[k] != 0 and xj[k] != 0 and xi[k + 1] == 0 and xj[k + 1] == 0
            and ey[k] == 0 and ey[k + 1] == 0)


cdef bint violates_second(vector[i64]& xi, vector[i64]& ey, vector[i64]& xj, size_t k):
    return (xi[k] >= 1 and ey[k] == 1 and xi[k + 1] == 0 and ey[k + 1] == 0
            and xi[k + 2] == 1 and ey[k + 2] == 0 and xj[k + 2] == 0
            and xj[k + 1] == 1 and xj[k] >= 1)


cdef list partial(vector[i64]& P, vector[i64]& N, vector[i64]& pending):
    cdef list out = []
    cdef Py_ssize_t q
    for q in range(<Py_ssize_t>P.size()):
        out.append(P[q] + 1)
    for q in range(<Py_ssize_t>N.size()):
        out.append(-(2 * N[q] + 1))
    for q in range(<Py_ssize_t>pending.size() - 1, -1, -1):
        out.append(pending[q])
    return out


cdef list from_exponents(vector[i64]& xi, vector[i64]& ey, vector[i64]& xj):
    cdef list out = []
    cdef Py_ssize_t k
    cdef i64 r
    for k in range(<Py_ssize_t>xi.size()):
        for r in range(xi[k]):
            out.append(2 * k + 1)
        for r in range(ey[k]):
            out.append(2 * k + 2)
    for k in range(<Py_ssize_t>xj.size() - 1, -1, -1):
        for r in range(xj[k]):
            out.append(-(2 * k + 1))
    return out


cdef void erase_at(vector[i64]& v, size_t k, size_t count):
    cdef size_t c
    v.erase(v.begin() + k, v.begin() + (k + count))
    for c in range(count):
        v.push_back(0)


def normalize_tokens(tokens, i64 step_limit):
    """Return ``(status, tokens, steps)``; see ``_nf_py.normalize_tokens``."""
    cdef vector[i64] P, N, pending, xi, ey, xj
    cdef i64 steps = 0
    cdef i64 t, code, k
    cdef int fam
    cdef size_t size, n, kk
    cdef Py_ssize_t q
    cdef bint applied

    seq = list(tokens)
    for q in range(len(seq) - 1, -1, -1):
        pending.push_back(seq[q])

    while pending.size():
        if steps > step_limit:
            return STEP_LIMIT, partial(P, N, pending), steps
        t = pending.back()
        pending.pop_back()
        if t > 0:
            code = t - 1
            fam = code & 1
            k = code >> 1
            steps += push_positive(P, N, pending, fam, k)
        else:
            code = -t - 1
            fam = code & 1
            k = code >> 1
            if fam == 1:
                pending.push_back(-(2 * k + 1))
                pending.push_back(-(2 * (k + 1) + 1))
                pending.push_back(2 * k + 2)
                steps += 1
            else:
                steps += push_negative(N, k)

    if steps > step_limit:
        return STEP_LIMIT, partial(P, N, pending), steps

    size = 1
    if P.size():
        size = max(size, <size_t>((P.back() >> 1) + 1))
    if N.size():
        size = max(size, <size_t>(N[0] + 1))
    xi.assign(size + 3, 0)
    ey.assign(size + 3, 0)
    xj.assign(size + 3, 0)
    for q in range(<Py_ssize_t>P.size()):
        if P[q] & 1:
            ey[P[q] >> 1] += 1
        else:
            xi[P[q] >> 1] += 1
    for q in range(<Py_ssize_t>N.size()):
        xj[N[q]] += 1

    kk = 0
    while True:
        n = xi.size()
        applied = False
        while kk < n - 1:
            if violates_first(xi, ey, xj, kk):
                xi[kk] -= 1
                xj[kk] -= 1
                erase_at(xi, kk + 1, 1)
                erase_at(ey, kk + 1, 1)
                erase_at(xj, kk + 1, 1)
                applied = True
                break
            if kk < n - 2 and violates_second(xi, ey, xj, kk):
                xi[kk] -= 1
                xj[kk] -= 1
                xi[kk + 2] = 0
                xj[kk + 1] = 0
                erase_at(xi, kk + 1, 2)
                erase_at(ey, kk + 1, 2)
                erase_at(xj, kk + 1, 2)
                applied = True
                break
            kk += 1
        if not applied:
            break
        steps += 1
        if steps > step_limit:
            return STEP_LIMIT, from_exponents(xi, ey, xj), steps
        kk = kk - 2 if kk >= 2 else 0

    return OK, from_exponents(xi, ey, xj), steps
