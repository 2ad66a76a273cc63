"""Exhaustive census of self-dual codes for small ambient shapes.

Candidates are generated directly in the canonical block layout; for a
self-dual code the parameters collapse to kappa = alpha/2 and
gamma = beta + kappa - 2*delta, which caps the search at
sum over delta of 2^(kappa^2 + 2*kappa*delta + 2*delta*beta - 2*delta^2)
candidates.  Row-pairwise orthogonality is checked before spanning.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product
from math import factorial

from .classify import SelfDualClass, classify
from .codes import AdditiveCode, GeneratorMatrix
from .errors import GuardExceeded, PreconditionError
from .vectors import AmbientParams, MixedVector, inner_product

DEFAULT_SEARCH_GUARD = 10
_EQUIV_PERMUTATION_CAP = 100_000


@dataclass(frozen=True)
class SearchEntry:
    code: AdditiveCode
    generators: GeneratorMatrix
    cls: SelfDualClass


@dataclass(frozen=True)
class SearchResult:
    alpha: int
    beta: int
    cls: SelfDualClass | None
    entries: tuple[SearchEntry, ...]
    candidates_checked: int


def _candidate_rows(alpha: int, beta: int, delta: int):
    """Yield the free blocks of one canonical-form candidate at a time."""
    kappa = alpha // 2
    g = beta - 2 * delta  # gamma - kappa
    m = delta
    # free blocks: Tb (kappa x kappa) binary, T2 (kappa x m) {0,1},
    # T1 (g x m) {0,1}, Sb (delta x kappa) binary, R (delta x g) {0,1},
    # Sq (delta x m) in Z4
    for tb in product(range(2), repeat=kappa * kappa):
        for t2 in product(range(2), repeat=kappa * m):
            for t1 in product(range(2), repeat=g * m):
                for sb in product(range(2), repeat=delta * kappa):
                    for r in product(range(2), repeat=delta * g):
                        for sq in product(range(4), repeat=delta * m):
                            yield (tb, t2, t1, sb, r, sq)


def _build_rows(
    alpha: int, beta: int, delta: int, blocks
) -> list[MixedVector]:
    kappa = alpha // 2
    g = beta - 2 * delta
    m = delta
    tb, t2, t1, sb, r, sq = blocks
    rows = []
    for i in range(kappa):
        x = [1 if j == i else 0 for j in range(kappa)]
        x += [tb[i * kappa + j] for j in range(kappa)]
        y = [2 * t2[i * m + j] for j in range(m)]
        y += [0] * (g + delta)
        rows.append(MixedVector.from_parts(x, y))
    for i in range(g):
        y = [2 * t1[i * m + j] for j in range(m)]
        y += [2 if j == i else 0 for j in range(g)]
        y += [0] * delta
        rows.append(MixedVector.from_parts([0] * alpha, y))
    for i in range(delta):
        x = [0] * kappa + [sb[i * kappa + j] for j in range(kappa)]
        y = [sq[i * m + j] for j in range(m)]
        y += [r[i * g + j] for j in range(g)]
        y += [1 if j == i else 0 for j in range(delta)]
        rows.append(MixedVector.from_parts(x, y))
    return rows


def search_self_dual(
    alpha: int,
    beta: int,
    cls: SelfDualClass | None = None,
    *,
    max_n: int = DEFAULT_SEARCH_GUARD,
    dedup_equivalence: bool = False,
) -> SearchResult:
    """Enumerate all self-dual codes spanned by canonical-form matrices.

    Distinct codeword sets are deduplicated; with dedup_equivalence also
    codes related by a column permutation within the binary block and
    within the quaternary block are collapsed to one representative.
    """
    if alpha + 2 * beta > max_n:
        raise GuardExceeded(
            f"search ambient length {alpha + 2 * beta} exceeds the search guard {max_n}"
        )
    if dedup_equivalence and factorial(alpha) * factorial(beta) > _EQUIV_PERMUTATION_CAP:
        raise PreconditionError(
            f"permutation-equivalence dedup infeasible for alpha={alpha}, beta={beta}"
        )
    ambient = AmbientParams(alpha, beta)
    found: dict[frozenset, SearchEntry] = {}
    checked = 0
    if alpha % 2 == 0:
        for delta in range(beta // 2 + 1):
            for blocks in _candidate_rows(alpha, beta, delta):
                checked += 1
                rows = _build_rows(alpha, beta, delta, blocks)
                if any(
                    inner_product(u, v) != 0
                    for u, v in combinations_with_replacement(rows, 2)
                ):
                    continue
                gen = GeneratorMatrix(ambient, tuple(rows))
                # canonical rows are independent, so the span has full
                # self-dual size 2^(kappa + beta) automatically
                code = AdditiveCode.span(gen, max_n=max_n)
                if code.codewords not in found:
                    found[code.codewords] = SearchEntry(code, gen, classify(code))
    entries = [e for e in found.values() if cls is None or e.cls is cls]
    if dedup_equivalence:
        entries = _dedup_by_permutation(entries, alpha, beta)
    entries.sort(key=lambda e: tuple(w.sort_key() for w in e.code.sorted_codewords))
    return SearchResult(alpha, beta, cls, tuple(entries), checked)


def _permutation_key(code: AdditiveCode, alpha: int, beta: int) -> tuple:
    """Minimum codeword listing over column permutations within X and Y."""
    words = [(w.binary_part, w.quaternary_part) for w in code.codewords]
    best = None
    for px in permutations(range(alpha)):
        for py in permutations(range(beta)):
            permuted = sorted(
                (
                    tuple(bx[i] for i in px),
                    tuple(qy[j] for j in py),
                )
                for bx, qy in words
            )
            key = tuple(permuted)
            if best is None or key < best:
                best = key
    return best


def _dedup_by_permutation(
    entries: list[SearchEntry], alpha: int, beta: int
) -> list[SearchEntry]:
    seen: dict[tuple, SearchEntry] = {}
    for entry in entries:
        key = _permutation_key(entry.code, alpha, beta)
        if key not in seen:
            seen[key] = entry
    return list(seen.values())
