"""Change of ordering for ideals in shape position.

Three entry points:

* shape_prob  — probabilistic Wiedemann: one random probe, one
  Berlekamp-Massey run, n-1 Hankel solves.  Fails (recoverably) when the
  probe sees only a proper factor of the minimal polynomial.
* shape_det   — deterministic variant: unit probes peel the minimal
  polynomial factor by factor; failure certifies the ideal is not in shape
  position.  Always returns a basis of the radical, plus a flag telling
  whether that is the ideal itself.
* incremental_univariate — grows the probe sequence lazily and stops as
  soon as Berlekamp-Massey stabilizes; cheap early estimate of f_1.

All of them touch T_1 only, apart from the single columns NF(x_i).
"""

from __future__ import annotations

import random

from .field import PrimeField
from .linrec import HankelSystem, berlekamp_massey, hankel_solve
from .poly import Fail, GroebnerBasis, MultiPoly, mp_sub
from .quotient import CoordVector, QuotientStructure, apply, apply_transpose
from .unipoly import (
    UniPoly,
    deg,
    squarefree_part,
    trim,
    uni_crt,
    uni_gcd,
    uni_divmod,
    uni_mod,
    uni_mul,
)


class ShapeBasis:
    """[f1, x2 - f2, ..., xn - fn] with deg(fi) < deg(f1)."""

    __slots__ = ("f1", "tails")

    def __init__(self, f1: UniPoly, tails: list[UniPoly]):
        self.f1 = trim(list(f1))
        self.tails = [trim(list(t)) for t in tails]
        assert all(deg(t) < deg(self.f1) for t in self.tails)

    @property
    def n(self) -> int:
        return len(self.tails) + 1

    def to_polys(self, F: PrimeField) -> list[MultiPoly]:
        n = self.n
        out = [MultiPoly.from_uni(n, self.f1)]
        for i, t in enumerate(self.tails, start=2):
            xi = MultiPoly(n, {tuple(1 if k == i - 1 else 0 for k in range(n)): 1})
            out.append(mp_sub(xi, MultiPoly.from_uni(n, t), F))
        return out

    def to_groebner(self, F: PrimeField) -> GroebnerBasis:
        return GroebnerBasis(self.to_polys(F), "lex", reduced=True)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ShapeBasis)
            and other.f1 == self.f1
            and other.tails == self.tails
        )

    def __repr__(self) -> str:
        return f"ShapeBasis(f1={self.f1}, tails={self.tails})"


class WiedemannTrace:
    """What the deterministic loop saw, for reporting and tests."""

    def __init__(self):
        self.factors: list[tuple[UniPoly, list[UniPoly]]] = []
        self.probe_vectors: list[CoordVector] = []
        self.sequences: list[list[int]] = []
        self.b_vectors: list[CoordVector] = []


def matrix_poly_apply(g: UniPoly, T, v: CoordVector, F: PrimeField) -> CoordVector:
    """g(T)·v by Horner."""
    p = F.p
    out = [0] * len(v)
    for c in reversed(g):
        out = apply(T, out)
        if c:
            for k, vk in enumerate(v):
                if vk:
                    out[k] = (out[k] + c * vk) % p
    return out


def matrix_poly_apply_transpose(g: UniPoly, T, v: CoordVector, F: PrimeField) -> CoordVector:
    p = F.p
    out = [0] * len(v)
    for c in reversed(g):
        out = apply_transpose(T, out)
        if c:
            for k, vk in enumerate(v):
                if vk:
                    out[k] = (out[k] + c * vk) % p
    return out


def _tail_rhs(chain: list[CoordVector], v_i: CoordVector, count: int, F: PrimeField) -> list[int]:
    # <(T1^t)^j r, NF(x_i)>: component extraction when NF(x_i) is a unit vector
    nz = [(k, c) for k, c in enumerate(v_i) if c]
    if len(nz) == 1 and nz[0][1] == 1:
        k = nz[0][0]
        return [chain[j][k] for j in range(count)]
    return [F.dot(chain[j], v_i) for j in range(count)]


def shape_prob(
    Q: QuotientStructure, seed, probe: CoordVector | None = None
) -> ShapeBasis | Fail:
    F = Q.F
    D = Q.D
    T1 = Q.matrix(1)
    if probe is None:
        rng = random.Random(seed)
        probe = [rng.randrange(F.p) for _ in range(D)]
    chain = [list(probe)]
    for _ in range(2 * D - 1):
        chain.append(apply_transpose(T1, chain[-1]))
    s = [v[0] for v in chain]
    f1 = berlekamp_massey(s, F)
    d = deg(f1)
    if d < D:
        return Fail(f"minimal polynomial degree {d} < ideal degree {D}")
    tails = []
    for i in range(2, Q.n + 1):
        b = _tail_rhs(chain, Q.nf_of_var(i), D, F)
        tails.append(hankel_solve(HankelSystem(D, s, b), F))
    return ShapeBasis(f1, tails)


def shape_det(
    Q: QuotientStructure,
    probes: str = "unit",
    seed=None,
    trace_out: WiedemannTrace | None = None,
) -> tuple[ShapeBasis, bool] | Fail:
    if probes not in ("unit", "random"):
        raise ValueError(f"unknown probe mode {probes!r}")
    F = Q.F
    D = Q.D
    T1 = Q.matrix(1)
    rng = random.Random(seed) if probes == "random" else None
    trace = trace_out if trace_out is not None else WiedemannTrace()

    f = [1]
    b = Q.e()
    components: list[tuple[UniPoly, list[list[int]]]] = []  # (factor, rhs rows per tail var)
    k = 0
    while any(b):
        assert k < D, "probe loop exceeded D iterations"
        d = deg(f)
        assert d < D
        if rng is None:
            u = [0] * D
            u[k] = 1
        else:
            u = [rng.randrange(F.p) for _ in range(D)]
        # view the current b through probe u: same sequence as <u_adj, T1^i e>
        w = matrix_poly_apply_transpose(f, T1, u, F)
        chain = [w]
        for _ in range(2 * (D - d) - 1):
            chain.append(apply_transpose(T1, chain[-1]))
        s = [v[0] for v in chain]
        g = berlekamp_massey(s, F)
        dk = deg(g)
        if dk > 0:
            rhs_rows = [
                _tail_rhs(chain, Q.nf_of_var(i), dk, F) for i in range(2, Q.n + 1)
            ]
            components.append((g, rhs_rows))
            f = uni_mul(f, g, F)
            trace.factors.append((g, []))
            trace.probe_vectors.append(u)
            trace.sequences.append(s)
        b = matrix_poly_apply(g, T1, b, F)
        trace.b_vectors.append(list(b))
        k += 1

    if deg(f) != D:
        return Fail(
            f"deterministic univariate degree {deg(f)} < D = {D}: "
            "ideal is not in shape position"
        )
    f1 = f

    # per-factor tails from the recorded sequences (Hankel of each factor)
    per_factor_tails: list[list[UniPoly]] = []
    for idx, (g, rhs_rows) in enumerate(components):
        dk = deg(g)
        s = trace.sequences[idx]
        tails = [hankel_solve(HankelSystem(dk, s, rhs), F) for rhs in rhs_rows]
        per_factor_tails.append(tails)
        trace.factors[idx] = (g, tails)

    fbar1 = squarefree_part(f1, F)
    is_radical = fbar1 == f1

    # peel the squarefree part across the recorded factors; the pieces are
    # pairwise coprime, so CRT glues the tails back together
    moduli: list[UniPoly] = []
    residues_per_var: list[list[UniPoly]] = [[] for _ in range(Q.n - 1)]
    remaining = fbar1
    for (g, _), tails in zip(components, per_factor_tails):
        if deg(remaining) == 0:
            break
        piece = uni_gcd(g, remaining, F)
        if deg(piece) == 0:
            continue
        moduli.append(piece)
        for i, t in enumerate(tails):
            residues_per_var[i].append(uni_mod(t, piece, F))
        remaining = uni_divmod(remaining, piece, F)[0]
    assert deg(remaining) == 0

    final_tails = [
        uni_crt(residues_per_var[i], moduli, F) for i in range(Q.n - 1)
    ]
    return ShapeBasis(fbar1, final_tails), is_radical


def incremental_univariate(Q: QuotientStructure, seed, stable: int = 2) -> UniPoly:
    if stable < 1:
        raise ValueError("stability window must be >= 1")
    F = Q.F
    D = Q.D
    T1 = Q.matrix(1)
    rng = random.Random(seed)
    r = [rng.randrange(F.p) for _ in range(D)]
    s: list[int] = []
    cur = r
    history: list[UniPoly] = []
    while len(s) < 2 * D:
        for _ in range(2):
            s.append(cur[0])
            if len(s) >= 2 * D:
                break
            cur = apply_transpose(T1, cur)
        m = berlekamp_massey(s, F)
        history.append(m)
        if len(history) >= stable and all(
            h == m for h in history[-stable:]
        ):
            return m
    return history[-1]
