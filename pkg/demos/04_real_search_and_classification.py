"""The real case: exact classification and exhaustive search.

Real MPS matrices are scaled symmetric orthogonal matrices with entries
+-d, +-1 (times a normalization).  Their existence is sharply constrained:
below the top ratio n/2 - 1 the order must be even, d integral, n/2 + d odd,
an entire interval (n/6 - 1, n/4 - 3/2) is empty, and on [n/4 - 3/2, n/2 - 1)
existence is equivalent to a symmetric design.  The exhaustive search
verifies all of this independently, in exact integer arithmetic.
"""

from fractions import Fraction

from mpsmat.classify import necessary_conditions
from mpsmat.exact import full_j_mps, upper_interval_mps
from mpsmat.search import (
    are_equivalent,
    candidate_ratios,
    canonical_form,
    exhaustive_search,
)

print("exhaustive search, orders 3..7, full candidate grid:")
for n in range(3, 8):
    row = []
    for d in candidate_ratios(n):
        res = exhaustive_search(n, d)
        if res.count:
            row.append(f"d={d}: {res.count} matrices")
    print(f"  n={n}: " + ("; ".join(row) if row else "nothing"))

print("\nclassifier verdicts:")
for n, d in [(3, Fraction(1, 2)), (4, 0), (12, 1), (26, 4), (22, 4), (14, 2)]:
    v = necessary_conditions(n, d)
    extra = f" [{v.detail}]" if v.detail else ""
    print(f"  ({n:2d}, {str(d):4s}) -> {v.status:20s} rule={v.rule}{extra}")

print("\nclasses at the top ratio d = n/2 - 1 for n = 6:")
res = exhaustive_search(6, 2, mode="up_to_equivalence")
print(f"  {res.count} equivalence classes among "
      f"{exhaustive_search(6, 2).count} matrices")
for rep in res.matrices():
    is_fj = are_equivalent(rep, full_j_mps(6)) is not None
    is_ui = are_equivalent(rep, upper_interval_mps(6, 2)) is not None
    kind = "I - (2/n)J" if is_fj else ("interval endpoint" if is_ui else "?")
    print(f"  representative ~ {kind}")

print("\ncanonical forms decide equivalence:")
from mpsmat.exact import Transform

m = full_j_mps(6)
scrambled = Transform(perm=(3, 5, 0, 1, 4, 2), signs=(1, -1, -1, 1, 1, -1),
                      global_sign=-1).apply_mps(m)
print("  canonical_form(full_j) == canonical_form(scrambled copy):",
      canonical_form(m) == canonical_form(scrambled))
witness = are_equivalent(m, scrambled)
print("  reconstructed witness maps one to the other exactly:",
      witness is not None and witness.apply_mps(m) == scrambled)
