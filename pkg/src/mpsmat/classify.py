"""Existence classification for real MPS matrices M_n^R(d).

necessary_conditions applies the exact exclusion rules in a fixed order and,
when none fires, tries to attach a constructed witness:

  range-of-r            d > n/2 - 1 with n > 2
  small-n               n in {3, 4, 5} and d != n/2 - 1
  real-parity           d < n/2 - 1 with n odd, d not a non-negative
                        integer, or n/2 + d even
  design-gap            n/6 - 1 < d < n/4 - 3/2 (no matrix exists there)
  design-nonexistence   d in [n/4 - 3/2, n/2 - 1) but no integer design
                        parameters (q, k, lam) fit (n, d)

Witnesses come from the construction families (full-J, the 2x2 family, the
real interval endpoints, conference matrices, conference blocks, and the
design construction with the built-in providers).  Surviving pairs without a
provider-backed witness are reported ``open``: either the reduction to a
symmetric design succeeded but no such design is available here, or the pair
lies in the small-ratio region the theory does not settle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .designs import (
    BadOrderError,
    SymmetricDesign,
    design_params_for,
    hadamard_to_design,
    identity_design,
    paley_conference,
    sylvester_hadamard,
)
from .exact import (
    IntegerMps,
    conference_block_mps,
    conference_mps,
    design_mps,
    full_j_mps,
    two_by_two_mps,
    upper_interval_mps,
)

__all__ = [
    "EXISTS",
    "IMPOSSIBLE_STATUS",
    "OPEN",
    "RULE_RANGE_OF_R",
    "RULE_SMALL_N",
    "RULE_REAL_PARITY",
    "RULE_DESIGN_GAP",
    "RULE_DESIGN_NONEXISTENCE",
    "Verdict",
    "necessary_conditions",
    "provider_design",
    "provider_conference",
]

EXISTS = "exists_with_witness"
IMPOSSIBLE_STATUS = "impossible"
OPEN = "open"

RULE_RANGE_OF_R = "range-of-r"
RULE_SMALL_N = "small-n"
RULE_REAL_PARITY = "real-parity"
RULE_DESIGN_GAP = "design-gap"
RULE_DESIGN_NONEXISTENCE = "design-nonexistence"


@dataclass(frozen=True)
class Verdict:
    """Classification outcome for (n, d): status, deciding rule, witness.

    ``rule`` names the exclusion rule for impossible pairs, the witness
    family for existing ones, and the missing ingredient for open ones.
    ``detail`` is a human-readable note (e.g. flags a degenerate design).
    """

    n: int
    d: Fraction
    status: str
    rule: str
    witness: Optional[IntegerMps] = None
    detail: str = ""

    def __post_init__(self):
        if self.status == IMPOSSIBLE_STATUS:
            allowed = {
                RULE_RANGE_OF_R,
                RULE_SMALL_N,
                RULE_REAL_PARITY,
                RULE_DESIGN_GAP,
                RULE_DESIGN_NONEXISTENCE,
            }
            if self.rule not in allowed:
                raise ValueError(f"impossible verdict must cite one of {allowed}")


def provider_design(v: int, k: int, lam: int) -> Optional[SymmetricDesign]:
    """Built-in design providers for the requested parameters, if any.

    Covers the degenerate (v, 1, 0) identity designs and the Hadamard-derived
    (N-1, N/2-1, N/4-1) designs for Sylvester orders N = 2^t.
    """
    if k == 1 and lam == 0:
        return identity_design(v)
    n_had = v + 1
    if (
        k == n_had // 2 - 1
        and lam == n_had // 4 - 1
        and n_had >= 4
        and n_had & (n_had - 1) == 0
    ):
        return hadamard_to_design(sylvester_hadamard(n_had))
    return None


def provider_conference(order: int) -> Optional[np.ndarray]:
    """Built-in symmetric conference matrix of the given order, if any."""
    try:
        return paley_conference(order)
    except BadOrderError:
        return None


def _witness(n: int, d: Fraction) -> Optional[tuple[str, IntegerMps, str]]:
    """Try the construction families in a fixed order; (rule, witness, note)."""
    if d == Fraction(n, 2) - 1:
        return "full-j", full_j_mps(n), ""
    if n == 2:
        if (2 * d).denominator == 1:
            return "two-by-two", two_by_two_mps(d), ""
        return "two-by-two", None, "2x2 family exists for every d >= 0"
    if n % 2 == 0 and d == Fraction(n, 2) - 3:
        return "interval-endpoint", upper_interval_mps(n, d), ""
    if d.denominator == 1 and Fraction(n, 4) - Fraction(3, 2) <= d:
        params = design_params_for(n, int(d))
        if params is not None:
            design = provider_design(n // 2, params.k, params.lam)
            if design is not None:
                note = "degenerate design (lam = 0)" if design.degenerate else ""
                return "design", design_mps(design, n, int(d)), note
            return None
    if d == 0:
        c = provider_conference(n)
        if c is not None:
            return "conference", conference_mps(c), ""
    if d == 1 and n % 2 == 0:
        c = provider_conference(n // 2)
        if c is not None:
            return "conference-block", conference_block_mps(c), ""
    return None


def necessary_conditions(n: int, d) -> Verdict:
    """Classify (n, d): impossible with a citing rule, exists with a witness,
    or open.

    The exclusion rules run in the fixed order documented in the module
    docstring, entirely in exact rational arithmetic.
    """
    if n < 2:
        raise ValueError("order must be at least 2")
    d = Fraction(d)
    if d < 0:
        raise ValueError("d must be non-negative")
    half = Fraction(n, 2)

    if n > 2 and d > half - 1:
        return Verdict(n, d, IMPOSSIBLE_STATUS, RULE_RANGE_OF_R)
    if n in (3, 4, 5) and d != half - 1:
        return Verdict(n, d, IMPOSSIBLE_STATUS, RULE_SMALL_N)
    if d < half - 1:
        if n % 2 == 1:
            return Verdict(n, d, IMPOSSIBLE_STATUS, RULE_REAL_PARITY,
                           detail="odd order admits only d = n/2 - 1")
        if d.denominator != 1:
            return Verdict(n, d, IMPOSSIBLE_STATUS, RULE_REAL_PARITY,
                           detail="below n/2 - 1 the ratio must be an integer")
        if (n // 2 + int(d)) % 2 == 0:
            return Verdict(n, d, IMPOSSIBLE_STATUS, RULE_REAL_PARITY,
                           detail="n/2 + d must be odd")
        if Fraction(n, 6) - 1 < d < Fraction(n, 4) - Fraction(3, 2):
            return Verdict(n, d, IMPOSSIBLE_STATUS, RULE_DESIGN_GAP)
        if Fraction(n, 4) - Fraction(3, 2) <= d:
            if design_params_for(n, int(d)) is None:
                return Verdict(n, d, IMPOSSIBLE_STATUS, RULE_DESIGN_NONEXISTENCE)

    found = _witness(n, d)
    if found is not None:
        rule, witness, note = found
        if d.denominator == 1 and Fraction(n, 4) - Fraction(3, 2) <= d < half - 1:
            params = design_params_for(n, int(d))
            if params is not None and params.lam == 0:
                extra = ("existence rests on the degenerate "
                         f"({n // 2}, 1, 0)-design (lam = 0)")
                note = f"{note}; {extra}" if note else extra
        return Verdict(n, d, EXISTS, rule, witness=witness, detail=note)

    if d.denominator == 1 and Fraction(n, 4) - Fraction(3, 2) <= d < half - 1:
        params = design_params_for(n, int(d))
        return Verdict(
            n, d, OPEN, "design-required",
            detail=f"reduces to a symmetric ({n // 2}, {params.k}, {params.lam})-design; "
                   "no provider supplies one",
        )
    return Verdict(n, d, OPEN, "unclassified",
                   detail="no rule excludes this pair and no family covers it")
