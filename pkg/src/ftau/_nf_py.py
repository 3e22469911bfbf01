"""Pure-Python normal-form kernel.

Letters are integer tokens: ``code = 2 * index + family`` (family 0 = x,
1 = y) and ``token = +(code + 1)`` or ``-(code + 1)`` for the inverse.

The element is carried as ``P * N`` where ``P`` is a positive word already in
shape ``x_0^i0 y_0^e0 x_1^i1 ...`` (list of codes) and ``N`` is the list of
indices of a descending product ``x_m^-1 ... x_0^-1``.  Input letters are
multiplied on the right one at a time; every move is a relation instance.
A second pass removes violations of the two side conditions of the normal
form.  ``normalize_tokens`` must stay in lockstep with ``_nf_ext.pyx``,
including the step count.
"""

OK = 0
STEP_LIMIT = 1


def normalize_tokens(tokens, step_limit):
    """Return ``(status, tokens, steps)``; on STEP_LIMIT the tokens spell the partial rewrite."""
    P = []
    N = []
    pending = list(reversed(tokens))
    steps = 0

    while pending:
        if steps > step_limit:
            return STEP_LIMIT, _partial(P, N, pending), steps
        t = pending.pop()
        if t > 0:
            code = t - 1
            fam = code & 1
            k = code >> 1
            steps += _push_positive(P, N, pending, fam, k)
        else:
            code = -t - 1
            fam = code & 1
            k = code >> 1
            if fam == 1:
                # y_k^-1 = y_k x_{k+1}^-1 x_k^-1
                pending.append(-(2 * k + 1))
                pending.append(-(2 * (k + 1) + 1))
                pending.append(2 * k + 2)
                steps += 1
            else:
                steps += _push_negative(N, k)

    if steps > step_limit:
        return STEP_LIMIT, _partial(P, N, pending), steps

    size = 1
    if P:
        size = max(size, (P[-1] >> 1) + 1)
    if N:
        size = max(size, N[0] + 1)
    xi = [0] * (size + 3)
    ey = [0] * (size + 3)
    xj = [0] * (size + 3)
    for c in P:
        if c & 1:
            ey[c >> 1] += 1
        else:
            xi[c >> 1] += 1
    for i in N:
        xj[i] += 1

    k = 0
    while True:
        n = len(xi)
        while k < n - 1:
            if _violates_first(xi, ey, xj, k):
                xi[k] -= 1
                xj[k] -= 1
                del xi[k + 1], ey[k + 1], xj[k + 1]
                xi.append(0), ey.append(0), xj.append(0)
                break
            if k < n - 2 and _violates_second(xi, ey, xj, k):
                xi[k] -= 1
                xj[k] -= 1
                xi[k + 2] = 0
                xj[k + 1] = 0
                del xi[k + 1 : k + 3], ey[k + 1 : k + 3], xj[k + 1 : k + 3]
                xi.extend((0, 0)), ey.extend((0, 0)), xj.extend((0, 0))
                break
            k += 1
        else:
            break
        steps += 1
        if steps > step_limit:
            return STEP_LIMIT, _from_exponents(xi, ey, xj), steps
        k = k - 2 if k >= 2 else 0

    return OK, _from_exponents(xi, ey, xj), steps


def _violates_first(xi, ey, xj, k):
    return (
        xi[k] != 0
        and xj[k] != 0
        and xi[k + 1] == 0
        and xj[k + 1] == 0
        and ey[k] == 0
        and ey[k + 1] == 0
    )


def _violates_second(xi, ey, xj, k):
    # x_k y_k x_{k+2} u x_{k+1}^-1 x_k^-1 with u free of indices k+1, k+2
    return (
        xi[k] >= 1
        and ey[k] == 1
        and xi[k + 1] == 0
        and ey[k + 1] == 0
        and xi[k + 2] == 1
        and ey[k + 2] == 0
        and xj[k + 2] == 0
        and xj[k + 1] == 1
        and xj[k] >= 1
    )


def _push_negative(N, k):
    # x_i^-1 x_k^-1 = x_{k+1}^-1 x_i^-1 for i < k
    steps = 0
    pos = len(N) - 1
    while pos >= 0 and N[pos] < k:
        k += 1
        pos -= 1
        steps += 1
    N.insert(pos + 1, k)
    return steps + 1


def _push_positive(P, N, pending, fam, k):
    steps = 0
    pos = len(N) - 1
    while pos >= 0:
        i = N[pos]
        if i < k:
            # x_i^-1 a_k = a_{k+1} x_i^-1
            k += 1
            pos -= 1
            steps += 1
        elif i > k:
            # x_i^-1 a_k = a_k x_{i+1}^-1, for every remaining letter
            for q in range(pos + 1):
                N[q] += 1
            steps += pos + 1
            break
        elif fam == 0:
            del N[pos]
            return steps + 1
        else:
            # x_k^-1 y_k = y_k x_{k+2} x_{k+1}^-1 x_k^-1
            rest = N[pos + 1 :]
            del N[pos:]
            for r in reversed(rest):
                pending.append(-(2 * r + 1))
            pending.append(-(2 * k + 1))
            pending.append(-(2 * (k + 1) + 1))
            pending.append(2 * (k + 2) + 1)
            pending.append(2 * k + 2)
            return steps + 1
    return steps + _insert_positive(P, N, fam, k)


def _insert_positive(P, N, fam, k):
    steps = 0
    pos = len(P) - 1
    # b_j a_k = a_k b_{j+1} for j > k
    while pos >= 0 and (P[pos] >> 1) > k:
        P[pos] += 2
        pos -= 1
        steps += 1
    if pos >= 0 and P[pos] == 2 * k + 1:
        if fam == 1:
            # y_k y_k = x_k x_{k+1}
            P[pos] = 2 * k
            P.insert(pos + 1, 2 * (k + 1))
            return steps + 1
        # y_k x_k = x_k y_k x_{k+2} x_{k+1}^-1
        P.insert(pos, 2 * k)
        P.insert(pos + 2, 2 * (k + 2))
        tail = pos + 3
        for q in range(tail, len(P)):
            P[q] += 2
        steps += 1 + len(P) - tail
        return steps + _push_negative_left(N, k + 1)
    P.insert(pos + 1, 2 * k + fam)
    return steps + 1


def _push_negative_left(N, c):
    # x_c^-1 x_n^-1 = x_{n+1}^-1 x_c^-1 for c < n
    steps = 0
    q = 0
    while q < len(N) and c < N[q]:
        N[q] += 1
        q += 1
        steps += 1
    N.insert(q, c)
    return steps + 1


def _partial(P, N, pending):
    return [c + 1 for c in P] + [-(2 * i + 1) for i in N] + list(reversed(pending))


def _from_exponents(xi, ey, xj):
    out = []
    for k in range(len(xi)):
        out.extend([2 * k + 1] * xi[k])
        if ey[k]:
            out.extend([2 * k + 2] * ey[k])
    for k in range(len(xj) - 1, -1, -1):
        out.extend([-(2 * k + 1)] * xj[k])
    return out
