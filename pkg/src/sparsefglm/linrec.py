"""Linearly recurring sequences: Berlekamp-Massey and Hankel solves."""

from __future__ import annotations

from .field import PrimeField
from .unipoly import UniPoly, trim, uni_monic

LinRecSeq = list[int]


def berlekamp_massey(s: LinRecSeq, F: PrimeField) -> UniPoly:
    """Monic minimal polynomial of the recurrence satisfied by s.

    Ascending coefficients: [c0, ..., c_{d-1}, 1] means
    s_{r+d} = -(c_{d-1} s_{r+d-1} + ... + c_0 s_r).  All-zero input gives 1.
    Only meaningful as *the* minimal polynomial when |s| >= 2 deg.
    """
    p = F.p
    s = [v % p for v in s]
    # C = current connection polynomial, B = copy from the last length change
    C = [1]
    B = [1]
    L = 0
    m = 1
    b = 1
    for i, si in enumerate(s):
        delta = si
        for k in range(1, L + 1):
            delta = (delta + C[k] * s[i - k]) % p
        if delta == 0:
            m += 1
        elif 2 * L <= i:
            T = C[:]
            coef = delta * F.inv(b) % p
            C = C + [0] * (len(B) + m - len(C))
            for k, Bk in enumerate(B):
                C[k + m] = (C[k + m] - coef * Bk) % p
            L = i + 1 - L
            B = T
            b = delta
            m = 1
        else:
            coef = delta * F.inv(b) % p
            C = C + [0] * max(0, len(B) + m - len(C))
            for k, Bk in enumerate(B):
                C[k + m] = (C[k + m] - coef * Bk) % p
            m += 1
    # connection form C(x) = 1 + c1 x + ... -> reverse into a monic polynomial
    C = C[: L + 1] + [0] * (L + 1 - len(C))
    out = list(reversed(C))
    return uni_monic(trim(out), F)


class HankelSystem:
    """H[j][k] = seq[j+k] for a d x d matrix, with right-hand side rhs."""

    __slots__ = ("d", "seq", "rhs")

    def __init__(self, d: int, seq: list[int], rhs: list[int]):
        if len(seq) < 2 * d - 1:
            raise ValueError("sequence too short for Hankel dimension")
        if len(rhs) != d:
            raise ValueError("right-hand side length does not match dimension")
        self.d = d
        self.seq = seq
        self.rhs = rhs

    def row(self, j: int) -> list[int]:
        return self.seq[j : j + self.d]


def hankel_solve(sys: HankelSystem, F: PrimeField) -> list[int]:
    """Solve H c = b by Gaussian elimination with pivot search."""
    p = F.p
    d = sys.d
    M = [sys.row(j) + [sys.rhs[j] % p] for j in range(d)]
    for col in range(d):
        piv = next((r for r in range(col, d) if M[r][col] % p), None)
        if piv is None:
            raise ValueError("singular Hankel system")
        M[col], M[piv] = M[piv], M[col]
        inv = F.inv(M[col][col])
        M[col] = [a * inv % p for a in M[col]]
        for r in range(d):
            if r != col and M[r][col] % p:
                c = M[r][col] % p
                M[r] = [(a - c * b) % p for a, b in zip(M[r], M[col])]
    return [M[r][d] for r in range(d)]


def _rank(rows: list[list[int]], F: PrimeField) -> int:
    p = F.p
    M = [[a % p for a in row] for row in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = F.inv(M[rank][col])
        M[rank] = [a * inv % p for a in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][col]:
                c = M[r][col]
                M[r] = [(a - c * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def minimal_poly_degree_rank_check(s: LinRecSeq, d: int, F: PrimeField) -> bool:
    """True iff rank(H_d) = d, and rank(H_{d+1}) stays d when s allows it."""
    if len(s) < 2 * d:
        raise ValueError("sequence too short for rank check")
    if d == 0:
        return not any(v % F.p for v in s)
    H_d = [s[j : j + d] for j in range(d)]
    if _rank(H_d, F) != d:
        return False
    if len(s) >= 2 * d + 1:
        H_d1 = [s[j : j + d + 1] for j in range(d + 1)]
        if _rank(H_d1, F) != d:
            return False
    return True
