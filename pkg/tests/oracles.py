"""Independent oracles for the test suite.

Everything here recomputes results from definitions, sharing no code path
with the library: multiplication is schoolbook polynomial arithmetic with
top-down long division, the Walsh transform is the literal double sum,
and the ANF is the subset-sum Möbius formula.
"""

import numpy as np


def poly_mul_mod(a, b, modulus, n):
    """Schoolbook carry-less product, then long division by the modulus."""
    prod = 0
    bb = b
    shift = 0
    while bb:
        if bb & 1:
            prod ^= a << shift
        bb >>= 1
        shift += 1
    deg = prod.bit_length() - 1
    while deg >= n:
        prod ^= modulus << (deg - n)
        deg = prod.bit_length() - 1
    return prod


def oracle_pow(a, e, modulus, n):
    r = 1
    for _ in range(e):
        r = poly_mul_mod(r, a, modulus, n)
    return r


def oracle_trace(a, modulus, n, m=1):
    t, x = 0, a
    for _ in range(n // m):
        t ^= x
        y = x
        for _ in range(m):
            y = poly_mul_mod(y, y, modulus, n)
        x = y
    return t


def pairing_matrix(modulus, n):
    """P[a, x] = Tr(a x) for all pairs, from the oracle primitives."""
    size = 1 << n
    P = np.zeros((size, size), dtype=np.uint8)
    for a in range(size):
        for x in range(size):
            P[a, x] = oracle_trace(poly_mul_mod(a, x, modulus, n), modulus, n)
    return P


def naive_walsh(table, pairing):
    """The literal double sum W[a] = sum_x (-1)^(f(x) + Tr(ax))."""
    size = len(table)
    mism = (pairing ^ np.asarray(table, dtype=np.uint8)[None, :]).sum(axis=1)
    return (size - 2 * mism).astype(np.int64)


def naive_walsh_batch(tables, pairing):
    """naive_walsh over a batch of truth tables (rows)."""
    size = pairing.shape[0]
    mism = (
        pairing[None, :, :] ^ np.asarray(tables, dtype=np.uint8)[:, None, :]
    ).sum(axis=2)
    return (size - 2 * mism).astype(np.int64)


def naive_anf(table, n):
    """ANF coefficients by the subset-sum formula a_I = xor of f over x <= I."""
    size = 1 << n
    coeffs = np.zeros(size, dtype=np.uint8)
    for mask in range(size):
        acc = 0
        for x in range(size):
            if x & ~mask == 0:
                acc ^= int(table[x])
        coeffs[mask] = acc
    return coeffs


def naive_degree(table, n):
    coeffs = naive_anf(table, n)
    deg = 0
    for mask in range(1 << n):
        if coeffs[mask]:
            deg = max(deg, bin(mask).count("1"))
    return deg
