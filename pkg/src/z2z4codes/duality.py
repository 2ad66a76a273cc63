"""Dual codes under the pairing 2<x,x'> + <y,y'> in Z4."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .codes import (
    DEFAULT_AMBIENT_GUARD,
    AdditiveCode,
    GeneratorMatrix,
    TypeParams,
    check_guard,
    type_params,
)
from .stdform import invert_permutation, permute_vector, standard_form
from .vectors import MixedVector, ambient_vectors, inner_product


@dataclass(frozen=True)
class DualityReport:
    """Dual code together with its parameters and the duality flags."""

    dual: AdditiveCode
    dual_params: TypeParams
    self_orthogonal: bool
    self_dual: bool


def dual_type(p: TypeParams) -> TypeParams:
    """Parameters of the dual code as a function of the original ones."""
    q = TypeParams(
        p.alpha,
        p.beta,
        p.alpha + p.gamma - 2 * p.kappa,
        p.beta - p.gamma - p.delta + p.kappa,
        p.alpha - p.kappa,
    )
    if q.gamma < 0 or q.delta < 0 or q.kappa < 0:
        raise ValueError(f"inconsistent type parameters {p}")
    return q


def _parity_check_rows(sf) -> list[MixedVector]:
    """Rows of the dual generator matrix in the permuted coordinates.

    Layout, with k = kappa, g = gamma-kappa, d = delta, m = beta-g-d:

        [ Tb^t   I_(a-k) | 0    0      2*Sb^t          ]   a-k rows
        [ 0      0       | 0    2*I_g  2*R^t           ]   g rows
        [ T2^t   0       | I_m  T1^t   -(Sq + R*T1)^t  ]   m rows
    """
    p = sf.params
    alpha, beta = p.alpha, p.beta
    k, g, d = p.kappa, p.gamma - p.kappa, p.delta
    m = beta - g - d
    rest = alpha - k
    t_b, t_2, t_1 = sf.t_b, sf.t_2, sf.t_1
    s_b, s_q, r = sf.s_b, sf.s_q, sf.r_block

    rows: list[MixedVector] = []
    for i in range(rest):
        x = [t_b[j][i] for j in range(k)] + [1 if j == i else 0 for j in range(rest)]
        y = [0] * (m + g) + [(2 * s_b[j][i]) % 4 for j in range(d)]
        rows.append(MixedVector.from_parts(x, y))
    for i in range(g):
        x = [0] * alpha
        y = [0] * m + [2 if j == i else 0 for j in range(g)] + [(2 * r[j][i]) % 4 for j in range(d)]
        rows.append(MixedVector.from_parts(x, y))
    for i in range(m):
        x = [t_2[j][i] for j in range(k)] + [0] * rest
        y = [1 if j == i else 0 for j in range(m)]
        y += [t_1[j][i] for j in range(g)]
        y += [(-(s_q[j][i] + sum(r[j][t] * t_1[t][i] for t in range(g)))) % 4 for j in range(d)]
        rows.append(MixedVector.from_parts(x, y))
    return rows


def dual(code: AdditiveCode, *, max_n: int = DEFAULT_AMBIENT_GUARD) -> AdditiveCode:
    """Dual code built from the canonical form's parity-check matrix."""
    sf = standard_form(code.generators)
    inv = invert_permutation(sf.column_permutation)
    rows = tuple(permute_vector(row, inv) for row in _parity_check_rows(sf))
    return AdditiveCode.span(GeneratorMatrix(code.ambient, rows), max_n=max_n)


def brute_force_dual(code: AdditiveCode, *, max_n: int = DEFAULT_AMBIENT_GUARD) -> AdditiveCode:
    """Oracle dual: scan the whole ambient group for annihilating vectors.

    Orthogonality against the generator rows suffices since the pairing
    is bilinear over Z4.  Exponential in alpha + 2*beta, hence guarded.
    """
    check_guard(code.ambient, max_n)
    gens = code.generators.rows
    words = [v for v in ambient_vectors(code.ambient) if all(inner_product(g, v) == 0 for g in gens)]
    return AdditiveCode.from_codewords(code.ambient, words, max_n=max_n, check=False)


def is_self_orthogonal(code: AdditiveCode) -> bool:
    """True when all codeword pairs pair to zero (generator pairs suffice)."""
    gens = code.generators.rows
    return all(inner_product(u, v) == 0 for u, v in combinations_with_replacement(gens, 2))


def is_self_dual(code: AdditiveCode) -> bool:
    """Self-orthogonal and of the full size 2^(alpha+2*beta) squared."""
    n = code.ambient.n
    size = len(code.codewords)
    return size * size == (1 << n) and is_self_orthogonal(code)


def duality_report(code: AdditiveCode, *, max_n: int = DEFAULT_AMBIENT_GUARD) -> DualityReport:
    d = dual(code, max_n=max_n)
    return DualityReport(
        dual=d,
        dual_params=type_params(d),
        self_orthogonal=is_self_orthogonal(code),
        self_dual=is_self_dual(code),
    )
