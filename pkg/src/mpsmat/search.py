"""Exhaustive search, canonical forms and equivalence for real MPS matrices.

The search enumerates symmetric sign assignments row by row on the doubled
integer matrix 2Q (diagonal +-2d, off-diagonal +-2), pruning every partial
assignment whose latest completed row fails the exact inner-product condition
against any earlier row.  Candidate rows are generated in vectorized blocks,
so the hot loop is a handful of integer matrix products per search level.

``up_to_equivalence`` mode restricts the enumeration to standard-form
matrices (sorted diagonal with p >= n/2, pinned first rows of both diagonal
blocks) -- every equivalence class contains such a representative -- and then
collapses the hits to canonical forms.

The canonical form is the lexicographically minimal matrix over the full
equivalence group (simultaneous permutations x paired sign flips x global
negation) in the fixed row-major encoding +d < +1 < -1 < -d.  Minimality is
found by exploiting the sign gauge: once a global sign and a leading row are
chosen, all sign flips are forced by making the leading row non-negative, so
only (n-1)! orderings remain and they are scanned in vectorized batches.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .exact import IntegerMps, Transform, encode_matrix

__all__ = [
    "TooLargeError",
    "SearchResult",
    "candidate_ratios",
    "exhaustive_search",
    "naive_search",
    "canonical_form",
    "canonical_transform",
    "are_equivalent",
    "DEFAULT_SEARCH_MAX_ORDER",
    "DEFAULT_CANONICAL_MAX_ORDER",
]

DEFAULT_SEARCH_MAX_ORDER = 8
DEFAULT_CANONICAL_MAX_ORDER = 8

#: Cap on the number of rows held in one vectorized search block.
_BLOCK_ROWS = 1 << 16


class TooLargeError(ValueError):
    """Order exceeds the configured exact-enumeration maximum."""


def candidate_ratios(n: int) -> list[Fraction]:
    """The half-integer candidate grid {j/2 : 0 <= j <= n-2} for order n.

    Any real MPS matrix has d on this grid: d <= n/2 - 1 always, and below
    that bound d must be a non-negative integer.
    """
    return [Fraction(j, 2) for j in range(0, n - 1)]


@dataclass
class SearchResult:
    """Search outcome: the hit matrices plus a completeness flag.

    ``complete`` is False when the search stopped early (budget exhausted or
    max_results reached before the tree was fully explored); the listed
    matrices are then a correct but possibly partial set.
    """

    n: int
    d: Fraction
    mode: str
    two_q_stack: np.ndarray
    complete: bool
    elapsed: float

    @property
    def count(self) -> int:
        return int(self.two_q_stack.shape[0])

    def matrices(self) -> list[IntegerMps]:
        return [IntegerMps(d=self.d, two_q=q) for q in self.two_q_stack]


def _tails_for_row(n: int, row: int, diag_choices: tuple[int, ...],
                   fixed_tail: Optional[np.ndarray]) -> np.ndarray:
    """All candidate (diagonal, trailing signs) tuples for one row, int16.

    ``fixed_tail`` pins individual trailing entries to +-2 (0 = free).
    """
    width = n - row
    tail_len = width - 1
    if fixed_tail is None:
        fixed_tail = np.zeros(tail_len, dtype=np.int16)
    free_idx = np.flatnonzero(fixed_tail == 0)
    f = len(free_idx)
    combos = 1 << f
    tails = np.empty((combos, tail_len), dtype=np.int16)
    tails[:] = fixed_tail
    if f:
        bits = (np.arange(combos, dtype=np.int64)[:, None] >> np.arange(f)[None, :]) & 1
        tails[:, free_idx] = np.where(bits == 0, 2, -2).astype(np.int16)
    out = np.empty((combos * len(diag_choices), width), dtype=np.int16)
    for i, dv in enumerate(diag_choices):
        out[i * combos:(i + 1) * combos, 0] = dv
        out[i * combos:(i + 1) * combos, 1:] = tails
    return out


def _row_plans(n: int, two_d: int, mode: str) -> list[list[np.ndarray]]:
    """Candidate-tail tables per row, one plan per explored diagonal layout."""
    plans = []
    if mode == "all":
        diag = (0,) if two_d == 0 else (two_d, -two_d)
        plans.append([_tails_for_row(n, r, diag, None) for r in range(n)])
        return plans
    if mode != "up_to_equivalence":
        raise ValueError(f"unknown mode {mode!r}")
    if two_d == 0:
        rows = []
        for r in range(n):
            fixed = None
            if r == 0:
                fixed = np.full(n - 1, -2, dtype=np.int16)
            rows.append(_tails_for_row(n, r, (0,), fixed))
        plans.append(rows)
        return plans
    for p in range((n + 1) // 2, n + 1):
        rows = []
        for r in range(n):
            diag = (two_d,) if r < p else (-two_d,)
            fixed = None
            if r == 0:
                fixed = np.zeros(n - 1, dtype=np.int16)
                fixed[: p - 1] = -2
            elif r == p and p < n:
                fixed = np.full(n - 1 - r, 2, dtype=np.int16)
            rows.append(_tails_for_row(n, r, diag, fixed))
        plans.append(rows)
    return plans


def _children(block: np.ndarray, tails: np.ndarray) -> np.ndarray:
    """Extend each partial matrix in ``block`` by every tail that keeps all
    completed row pairs exactly orthogonal."""
    nstates, r, n = block.shape
    prev = block.astype(np.int32)
    heads = prev[:, :, r]
    a = np.einsum("sil,sl->si", prev[:, :, :r], heads)
    t32 = tails.astype(np.int32)
    b = prev[:, :, r:] @ t32.T
    feasible = np.all(a[:, :, None] + b == 0, axis=1)
    si, ti = np.nonzero(feasible)
    out = np.empty((len(si), r + 1, n), dtype=np.int8)
    out[:, :r, :] = block[si]
    out[:, r, :r] = heads[si].astype(np.int8)
    out[:, r, r:] = tails[ti].astype(np.int8)
    return out


def _dfs(n: int, plan: list[np.ndarray], deadline: Optional[float],
         max_results: Optional[int]) -> tuple[list[np.ndarray], bool]:
    """Depth-first block search over one row plan."""
    results: list[np.ndarray] = []
    found = 0
    first = plan[0].astype(np.int8)[:, None, :]
    stack = [(1, first)]
    complete = True
    while stack:
        if deadline is not None and time.monotonic() > deadline:
            complete = False
            break
        r, block = stack.pop()
        if r == n:
            if max_results is not None and found + block.shape[0] >= max_results:
                take = max_results - found
                results.append(block[:take])
                found = max_results
                complete = not stack and take == block.shape[0]
                break
            results.append(block)
            found += block.shape[0]
            continue
        tails = plan[r]
        limit = max(1, _BLOCK_ROWS // max(1, tails.shape[0]))
        pieces = []
        for lo in range(0, block.shape[0], limit):
            child = _children(block[lo:lo + limit], tails)
            if child.shape[0]:
                pieces.append(child)
        for child in reversed(pieces):
            for lo in range(0, child.shape[0], _BLOCK_ROWS):
                stack.append((r + 1, child[lo:lo + _BLOCK_ROWS]))
    return results, complete


def _sorted_stack(n: int, pieces: list[np.ndarray]) -> np.ndarray:
    if not pieces:
        return np.empty((0, n, n), dtype=np.int8)
    stack = np.concatenate(pieces, axis=0)
    codes = np.empty((stack.shape[0], n * n), dtype=np.uint8)
    for i, q in enumerate(stack):
        codes[i] = encode_matrix(q.astype(np.int64))
    order = np.lexsort(codes.T[::-1])
    return stack[order]


def _check_stack(stack: np.ndarray, two_d: int) -> None:
    """Batch-verify the exact orthogonality identity over all hits."""
    if stack.shape[0] == 0:
        return
    n = stack.shape[1]
    r32 = stack.astype(np.int64)
    grams = np.einsum("kij,klj->kil", r32, r32)
    target = (two_d * two_d + 4 * (n - 1)) * np.eye(n, dtype=np.int64)
    assert np.all(grams == target[None, :, :])


def exhaustive_search(
    n: int,
    d,
    mode: str = "all",
    max_results: Optional[int] = None,
    budget_seconds: Optional[float] = None,
    threads: int = 1,
    max_order: int = DEFAULT_SEARCH_MAX_ORDER,
) -> SearchResult:
    """Enumerate the real MPS matrices of order n with ratio d, exactly.

    ``mode="all"`` lists every matrix; ``mode="up_to_equivalence"`` explores
    only standard-form assignments and returns one canonical representative
    per equivalence class.  Output is sorted in the fixed row-major encoding,
    so it is deterministic and independent of chunking or thread count.

    ``max_results`` stops after that many hits, ``budget_seconds`` bounds the
    wall-clock time; both mark the result incomplete when they fire early.
    """
    started = time.monotonic()
    if n < 2:
        raise ValueError("order must be at least 2")
    if n > max_order:
        raise TooLargeError(f"order {n} exceeds the search maximum {max_order}")
    d = Fraction(d)
    if d < 0:
        raise ValueError("d must be non-negative")
    two_d_f = 2 * d
    if two_d_f.denominator != 1:
        return SearchResult(n=n, d=d, mode=mode,
                            two_q_stack=np.empty((0, n, n), dtype=np.int8),
                            complete=True, elapsed=time.monotonic() - started)
    two_d = int(two_d_f)
    deadline = None if budget_seconds is None else started + budget_seconds
    plans = _row_plans(n, two_d, mode)

    pieces: list[np.ndarray] = []
    complete = True
    if threads > 1:
        jobs = []
        for plan in plans:
            first = plan[0]
            step = max(1, -(-first.shape[0] // threads))
            for lo in range(0, first.shape[0], step):
                sub = [first[lo:lo + step]] + plan[1:]
                jobs.append(sub)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_dfs, n, job, deadline, None) for job in jobs]
            for fut in futures:
                res, comp = fut.result()
                pieces.extend(res)
                complete &= comp
    else:
        budget_hit = False
        for plan in plans:
            remaining = None if max_results is None else max_results - sum(
                p.shape[0] for p in pieces)
            if remaining is not None and remaining <= 0:
                complete = False
                break
            res, comp = _dfs(n, plan, deadline, remaining)
            pieces.extend(res)
            if not comp:
                complete = False
                if deadline is not None and time.monotonic() > deadline:
                    budget_hit = True
                    break
        if budget_hit:
            complete = False

    if mode == "up_to_equivalence":
        reps: dict[bytes, np.ndarray] = {}
        for piece in pieces:
            for q in piece:
                cf, _ = canonical_transform(
                    IntegerMps(d=d, two_q=q.astype(np.int64)),
                    max_order=max(max_order, DEFAULT_CANONICAL_MAX_ORDER),
                )
                reps.setdefault(cf.encode(), cf.two_q.astype(np.int8))
        stack = _sorted_stack(n, [q[None, :, :] for q in reps.values()])
    else:
        stack = _sorted_stack(n, pieces)
        if max_results is not None and stack.shape[0] > max_results:
            stack = stack[:max_results]
            complete = False
    _check_stack(stack, two_d)
    return SearchResult(n=n, d=d, mode=mode, two_q_stack=stack,
                        complete=complete, elapsed=time.monotonic() - started)


def naive_search(n: int, d, max_order: int = 6) -> list[IntegerMps]:
    """Oracle enumeration with no pruning: try all 2^(n(n+1)/2) sign patterns.

    Independent of the backtracking path (a single vectorized filter over the
    full assignment space); practical for n <= 6.  Output sorted in the same
    fixed encoding as exhaustive_search for bit-for-bit comparison.
    """
    if n < 2 or n > max_order:
        raise TooLargeError(f"naive enumeration supports 2 <= n <= {max_order}")
    d = Fraction(d)
    two_d_f = 2 * d
    if two_d_f.denominator != 1:
        return []
    two_d = int(two_d_f)
    iu, ju = np.triu_indices(n, k=1)
    n_off = len(iu)
    target = (two_d * two_d + 4 * (n - 1)) * np.eye(n, dtype=np.int32)
    if two_d == 0:
        diag_patterns = [np.zeros(n, dtype=np.int8)]
    else:
        diag_patterns = [
            np.where(((bits >> np.arange(n)) & 1) == 0, two_d, -two_d).astype(np.int8)
            for bits in range(1 << n)
        ]
    combos = 1 << n_off
    bits = (np.arange(combos, dtype=np.int64)[:, None] >> np.arange(n_off)[None, :]) & 1
    offs = np.where(bits == 0, 2, -2).astype(np.int8)
    hits = []
    base = np.zeros((combos, n, n), dtype=np.int8)
    base[:, iu, ju] = offs
    base[:, ju, iu] = offs
    for pat in diag_patterns:
        mats = base.copy()
        mats[:, np.arange(n), np.arange(n)] = pat
        grams = np.einsum("kij,klj->kil", mats.astype(np.int32), mats.astype(np.int32))
        good = np.all(grams == target[None, :, :], axis=(1, 2))
        for q in mats[good]:
            hits.append(q.astype(np.int64))
    hits.sort(key=lambda q: encode_matrix(q).tobytes())
    return [IntegerMps(d=d, two_q=q) for q in hits]


@lru_cache(maxsize=None)
def _perm_pool(k: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(k))), dtype=np.int64)


def _encode_batch(gathered: np.ndarray) -> np.ndarray:
    """Row-major codes for a batch of gathered matrices, shape (B, n*n)."""
    b, n, _ = gathered.shape
    codes = np.where(gathered < 0, 2, 1).astype(np.uint8)
    idx = np.arange(n)
    diag = gathered[:, idx, idx]
    codes[:, idx, idx] = np.where(diag < 0, 3, 0)
    return codes.reshape(b, n * n)


def canonical_transform(
    m: IntegerMps, max_order: int = DEFAULT_CANONICAL_MAX_ORDER
) -> tuple[IntegerMps, Transform]:
    """Canonical form plus a group element realizing it.

    Minimizes the row-major encoding over global sign, leading row choice and
    row ordering; the paired sign flips are forced once the leading row is
    pinned to non-negative entries, which is what makes the scan feasible.
    Two matrices are equivalent iff their canonical forms are identical.
    """
    n = m.n
    if n > max_order:
        raise TooLargeError(f"order {n} exceeds the canonical-form maximum {max_order}")
    q = m.two_q
    two_d = m.two_d
    diag = np.diagonal(q)
    pool = _perm_pool(n - 1)
    best_key: Optional[bytes] = None
    best: Optional[tuple[int, np.ndarray, np.ndarray]] = None
    for g in (1, -1):
        if two_d == 0:
            # Zero diagonal: the global sign changes the matrix but not the
            # leading diagonal code, so both branches must be scanned.
            rows = range(n)
        else:
            # The (0, 0) code of a candidate is minimal iff its diagonal
            # entry is +d after the global sign, so other rows cannot win.
            rows = [i for i in range(n) if g * diag[i] > 0]
        for i1 in rows:
            sigma = np.ones(n, dtype=np.int64)
            mask = np.arange(n) != i1
            sigma[mask] = np.sign(g * q[i1, mask])
            signed = g * q * np.outer(sigma, sigma)
            rem = np.flatnonzero(mask)
            orders = np.concatenate(
                [np.full((pool.shape[0], 1), i1, dtype=np.int64), rem[pool]], axis=1
            )
            gathered = signed[orders[:, :, None], orders[:, None, :]]
            codes = _encode_batch(gathered)
            idx = int(np.lexsort(codes.T[::-1])[0])
            key = codes[idx].tobytes()
            if best_key is None or key < best_key:
                best_key = key
                best = (g, orders[idx].copy(), sigma.copy())
    assert best is not None
    g, order, sigma = best
    t = Transform(
        perm=tuple(int(x) for x in order),
        signs=tuple(int(sigma[x]) for x in order),
        global_sign=g,
    )
    return t.apply_mps(m), t


def canonical_form(m: IntegerMps, max_order: int = DEFAULT_CANONICAL_MAX_ORDER) -> IntegerMps:
    """Lexicographically minimal equivalent matrix (see canonical_transform)."""
    cf, _ = canonical_transform(m, max_order=max_order)
    return cf


def are_equivalent(
    m1: IntegerMps, m2: IntegerMps, max_order: int = DEFAULT_CANONICAL_MAX_ORDER
) -> Optional[Transform]:
    """Equivalence witness mapping m1 to m2 exactly, or None.

    Requires matching (n, d); decided by canonical-form comparison with the
    witness reconstructed from the two canonicalizing transforms.
    """
    if m1.n != m2.n or m1.d != m2.d:
        raise ValueError("matrices must share the same (n, d)")
    c1, t1 = canonical_transform(m1, max_order=max_order)
    c2, t2 = canonical_transform(m2, max_order=max_order)
    if c1 != c2:
        return None
    witness = t2.inverse().compose(t1)
    assert witness.apply_mps(m1) == m2
    return witness
