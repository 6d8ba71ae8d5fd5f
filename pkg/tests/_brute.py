"""Small, deliberately naive helpers used to derive expected test values.

Nothing here imports the package under test: straight loops over plain
coefficient lists, so these stay an independent cross-check.
"""


def convolve(a, b, order):
    out = [0] * (order + 1)
    for i in range(min(len(a) - 1, order) + 1):
        if not a[i]:
            continue
        for j in range(min(len(b) - 1, order - i) + 1):
            out[i + j] += a[i] * b[j]
    return out


def power(a, k, order):
    out = [1] + [0] * order
    for _ in range(k):
        out = convolve(out, a, order)
    return out


def invert(a, order):
    assert a[0] in (1, -1)
    out = [0] * (order + 1)
    out[0] = a[0]
    for n in range(1, order + 1):
        s = 0
        for k in range(1, n + 1):
            if k < len(a) and a[k]:
                s += a[k] * out[n - k]
        out[n] = -a[0] * s
    return out


def pochhammer(sign, offset, modulus, order):
    """(sign*q^offset; q^modulus)_inf as a coefficient list, exponent 1."""
    out = [1] + [0] * order
    t = offset
    while t <= order:
        for i in range(order - t, -1, -1):
            if out[i]:
                out[i + t] -= sign * out[i]
        t += modulus
    return out


def qproduct(factors, order):
    """Product of ((sign, offset, modulus, exponent), ...) Pochhammer symbols."""
    out = [1] + [0] * order
    for sign, offset, modulus, exponent in factors:
        base = pochhammer(sign, offset, modulus, order)
        piece = power(base, abs(exponent), order)
        if exponent < 0:
            piece = invert(piece, order)
        out = convolve(out, piece, order)
    return out


def theta_sum(s1, e1, s2, e2, order):
    """Bilateral two-monomial theta sum, with a crudely wide summation window."""
    out = [0] * (order + 1)
    for n in range(-(2 * order + 3), 2 * order + 4):
        t1 = n * (n + 1) // 2
        t2 = n * (n - 1) // 2
        exp = e1 * t1 + e2 * t2
        if 0 <= exp <= order:
            out[exp] += (s1 if t1 % 2 else 1) * (s2 if t2 % 2 else 1)
    return out


def partition_counts(order):
    """p(0..order) by the classic two-variable dynamic program."""
    table = [1] + [0] * order
    for part in range(1, order + 1):
        for n in range(part, order + 1):
            table[n] += table[n - part]
    return table


def distinct_partition_counts(order):
    table = [1] + [0] * order
    for part in range(1, order + 1):
        for n in range(order, part - 1, -1):
            table[n] += table[n - part]
    return table
