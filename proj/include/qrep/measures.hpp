#pragma once

#include <string>
#include <utility>

#include "qrep/qutrit.hpp"

namespace qrep {

struct BranchSet;

// Negativity of the pure two-atom state a|xy> + b|yx>:
// |a||b| / (|a|^2 + |b|^2). Ranges over [0, 0.5] with the maximum at
// |a| = |b|. Throws ZeroNormError when both inputs vanish.
double negativity_sector(Complex a, Complex b);

// General negativity (||rho^{T_A}||_1 - 1)/2 of a two-qutrit density matrix
// via the partial transpose over the first atom and a Hermitian eigensolver.
// This convention makes the closed-form sector value (max 0.5) come out
// without an extra factor of two. Requires trace 1 within 1e-8; eigenvalues
// within 1e-12 of zero count as zero.
double negativity_partial_transpose(const DensityMatrix& rho);

// Weight of the two selected kets relative to the whole branch set.
double success_probability(const BranchSet& branches,
                           const std::pair<std::string, std::string>& selected);

}  // namespace qrep
