"""Designs behind real MPS matrices, and the Hadamard bridge.

For ratios d >= n/4 - 3/2 a real MPS matrix is equivalent to a block matrix
whose off-diagonal block G is a +-1 matrix with constant row sums; shifting
G to (G + J)/2 lands exactly on the incidence matrix of a symmetric design.
At the bottom ratio d = n/4 - 3/2 the same block, bordered by a row and
column of ones, is a Hadamard matrix of order n/2 + 1 -- so those matrices
exist if and only if the corresponding Hadamard matrix does.
"""

import numpy as np

from mpsmat import (
    design_mps,
    design_params_for,
    extract_design,
    hadamard_bridge,
    hadamard_to_design,
    hadamard_to_mps,
    structure_check,
    sylvester_hadamard,
    verify_hadamard,
)

# (n, d) -> design parameters (q, k, lambda)
print("design parameters per (n, d):")
for n, d in [(14, 2), (10, 2), (22, 4), (12, 1), (26, 4)]:
    print(f"  ({n:2d}, {d}) -> {design_params_for(n, d)}")

# Build the (14, 2) member from the Fano plane and take it apart again.
fano = hadamard_to_design(sylvester_hadamard(8))
print(f"\nFano plane: ({fano.v}, {fano.k}, {fano.lam})-design")
m = design_mps(fano, 14, 2)
rep = structure_check(m)
print("structure block G is normal / commutes with J / correct Gram:",
      rep.normal, rep.commutes_with_j, rep.gram_ok)
back = extract_design(m)
print(f"extracted design: ({back.v}, {back.k}, {back.lam})")

# The bridge: d = 14/4 - 3/2 = 2, so this matrix corresponds to a Hadamard
# matrix of order 8.
h = hadamard_bridge(m)
print("\nbridged to order", h.shape[0], "- Hadamard:", verify_hadamard(h))
m_back = hadamard_to_mps(h)
print("and back:", (m_back.n, str(m_back.d)), "matches (14, 2)")

# Degenerate designs (lambda = 0) are real too: the (10, 2) member comes
# from the identity incidence matrix.
from mpsmat import identity_design

deg = identity_design(5)
m10 = design_mps(deg, 10, 2)
g = structure_check(m10).g
print("\n(10, 2) structure block G = 2I - J, G G^T = 4I + J:",
      np.array_equal(g @ g.T, 4 * np.eye(5, dtype=int) + 1))
