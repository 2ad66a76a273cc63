"""Reduction of a generator matrix to its canonical block form.

The canonical layout, after permuting columns within the binary block and
within the quaternary block separately, is

    [ I_k   Tb | 2*T2   0      0   ]   k rows of order two
    [ 0     0  | 2*T1   2*I_g  0   ]   g rows of order two
    [ 0     Sb | Sq     R      I_d ]   d rows of order four

with k = kappa, g = gamma - kappa, d = delta; Tb, Sb binary; T1, T2, R
with entries in {0, 1}; Sq arbitrary in Z4.  A matrix already in this
layout is returned unchanged with the identity permutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import GeneratorMatrix, TypeParams
from .vectors import AmbientParams, MixedVector

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class StandardFormMatrix:
    """Canonical generator matrix plus the column permutation reaching it.

    ``column_permutation[i]`` is the original coordinate stored at
    position i of the permuted matrix; binary and quaternary coordinates
    are never exchanged.
    """

    params: TypeParams
    rows: tuple[MixedVector, ...]
    column_permutation: tuple[int, ...]

    @property
    def ambient(self) -> AmbientParams:
        return AmbientParams(self.params.alpha, self.params.beta)

    def generator_matrix(self) -> GeneratorMatrix:
        return GeneratorMatrix(self.ambient, self.rows)

    # Block widths: binary columns split kappa | alpha-kappa, quaternary
    # columns split m | gamma-kappa | delta with m = beta-gamma-delta+kappa.
    def _split(self) -> tuple[int, int, int, int, int]:
        p = self.params
        k, g, d = p.kappa, p.gamma - p.kappa, p.delta
        m = p.beta - g - d
        return k, g, d, m, p.alpha - k

    def block(self, rows: range, cols: range, quaternary: bool) -> Matrix:
        out = []
        for i in rows:
            parts = self.rows[i].quaternary_part if quaternary else self.rows[i].binary_part
            out.append(tuple(parts[c] for c in cols))
        return tuple(out)

    @property
    def t_b(self) -> Matrix:
        k, g, d, m, rest = self._split()
        return self.block(range(0, k), range(k, k + rest), False)

    @property
    def t_2(self) -> Matrix:
        k, g, d, m, _ = self._split()
        return tuple(tuple(v // 2 for v in row) for row in self.block(range(0, k), range(0, m), True))

    @property
    def t_1(self) -> Matrix:
        k, g, d, m, _ = self._split()
        return tuple(
            tuple(v // 2 for v in row) for row in self.block(range(k, k + g), range(0, m), True)
        )

    @property
    def s_b(self) -> Matrix:
        k, g, d, m, rest = self._split()
        return self.block(range(k + g, k + g + d), range(k, k + rest), False)

    @property
    def s_q(self) -> Matrix:
        k, g, d, m, _ = self._split()
        return self.block(range(k + g, k + g + d), range(0, m), True)

    @property
    def r_block(self) -> Matrix:
        k, g, d, m, _ = self._split()
        return self.block(range(k + g, k + g + d), range(m, m + g), True)


def _verify_layout(sf: StandardFormMatrix) -> None:
    k, g, d, m, rest = sf._split()
    rows = [(list(r.binary_part), list(r.quaternary_part)) for r in sf.rows]
    assert len(rows) == k + g + d
    for i in range(k):
        x, y = rows[i]
        assert x[:k] == [1 if j == i else 0 for j in range(k)]
        assert all(v in (0, 2) for v in y[:m]) and y[m:] == [0] * (g + d)
    for i in range(g):
        x, y = rows[k + i]
        assert x == [0] * len(x)
        assert all(v in (0, 2) for v in y[:m])
        assert y[m : m + g] == [2 if j == i else 0 for j in range(g)]
        assert y[m + g :] == [0] * d
    for i in range(d):
        x, y = rows[k + g + i]
        assert x[:k] == [0] * k
        assert all(v in (0, 1) for v in y[m : m + g])
        assert y[m + g :] == [1 if j == i else 0 for j in range(d)]


def standard_form(gen: GeneratorMatrix) -> StandardFormMatrix:
    """Reduce to canonical form, tracking the column permutation.

    Quaternary columns are scanned right to left (units first, then twos)
    and binary columns left to right, so a matrix that is already
    canonical keeps its rows and columns in place.
    """
    alpha, beta = gen.ambient.alpha, gen.ambient.beta
    rows = [[list(r.binary_part), list(r.quaternary_part)] for r in gen.rows]

    def subtract(i: int, p: int, c: int) -> None:
        # rows[i] -= c * rows[p]; the binary part sees c mod 2 only
        if c % 2:
            rows[i][0] = [(a + b) % 2 for a, b in zip(rows[i][0], rows[p][0])]
        rows[i][1] = [(a - c * b) % 4 for a, b in zip(rows[i][1], rows[p][1])]

    used: set[int] = set()
    unit_pivots: list[tuple[int, int]] = []
    for col in reversed(range(beta)):
        pr = next(
            (i for i in range(len(rows)) if i not in used and rows[i][1][col] in (1, 3)), None
        )
        if pr is None:
            continue
        if rows[pr][1][col] == 3:
            # scale by 3 = -1: identity on the binary part mod 2
            rows[pr][1] = [(-v) % 4 for v in rows[pr][1]]
        for i in range(len(rows)):
            if i != pr and rows[i][1][col] != 0:
                subtract(i, pr, rows[i][1][col])
        used.add(pr)
        unit_pivots.append((pr, col))

    # Every remaining row now has quaternary entries in {0, 2}.
    for i in range(len(rows)):
        if i not in used:
            assert all(v in (0, 2) for v in rows[i][1])

    x_pivots: list[tuple[int, int]] = []
    order2 = [i for i in range(len(rows)) if i not in used]
    for col in range(alpha):
        pr = next((i for i in order2 if i not in used and rows[i][0][col] == 1), None)
        if pr is None:
            continue
        for i in range(len(rows)):
            if i != pr and rows[i][0][col] == 1:
                subtract(i, pr, 1)
        used.add(pr)
        x_pivots.append((pr, col))

    unit_cols = {c for _, c in unit_pivots}
    two_pivots: list[tuple[int, int]] = []
    for col in reversed(range(beta)):
        if col in unit_cols:
            continue
        pr = next((i for i in order2 if i not in used and rows[i][1][col] == 2), None)
        if pr is None:
            continue
        for i in order2:
            if i != pr and rows[i][1][col] == 2:
                subtract(i, pr, 1)
        for i, _ in unit_pivots:
            if rows[i][1][col] in (2, 3):
                subtract(i, pr, 1)
        used.add(pr)
        two_pivots.append((pr, col))

    for i in order2:
        if i not in used:
            assert not any(rows[i][0]) and not any(rows[i][1]), "leftover nonzero row"

    x_pivots.sort(key=lambda t: t[1])
    two_pivots.sort(key=lambda t: t[1])
    unit_pivots.sort(key=lambda t: t[1])

    x_cols = [c for _, c in x_pivots]
    x_order = x_cols + [c for c in range(alpha) if c not in set(x_cols)]
    two_cols = [c for _, c in two_pivots]
    plain_cols = [c for c in range(beta) if c not in unit_cols and c not in set(two_cols)]
    y_order = plain_cols + two_cols + sorted(unit_cols)

    def permuted(i: int) -> MixedVector:
        x, y = rows[i]
        return MixedVector.from_parts([x[c] for c in x_order], [y[c] for c in y_order])

    out_rows = (
        [permuted(i) for i, _ in x_pivots]
        + [permuted(i) for i, _ in two_pivots]
        + [permuted(i) for i, _ in unit_pivots]
    )
    kappa, g, delta = len(x_pivots), len(two_pivots), len(unit_pivots)
    params = TypeParams(alpha, beta, kappa + g, delta, kappa)
    perm = tuple(x_order) + tuple(alpha + c for c in y_order)
    sf = StandardFormMatrix(params, tuple(out_rows), perm)
    _verify_layout(sf)
    return sf


def permute_vector(v: MixedVector, perm: tuple[int, ...]) -> MixedVector:
    """Reorder coordinates: output position i takes original coordinate perm[i]."""
    coords = v.binary_part + v.quaternary_part
    alpha = v.alpha
    return MixedVector.from_parts(
        [coords[perm[i]] for i in range(alpha)],
        [coords[perm[i]] for i in range(alpha, alpha + v.beta)],
    )


def invert_permutation(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)
