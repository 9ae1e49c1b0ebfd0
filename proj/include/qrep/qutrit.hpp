#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qrep/errors.hpp"

namespace qrep {

using Complex = std::complex<double>;

// Atomic level of a three-level Lambda atom: two lower levels g, f, one
// upper level e. Fixed index map g=0, e=1, f=2.
enum class Level : int { g = 0, e = 1, f = 2 };

Level level_from_char(char c);
char level_to_char(Level l);

// Registers are capped at eight atoms (vector length 3^8 = 6561).
constexpr int kMaxAtoms = 8;

// Norms below this are treated as exact dark branches rather than roundoff.
constexpr double kZeroNormEpsilon = 1e-12;

// Pure state of a register of three-level atoms, stored as a dense complex
// amplitude vector of length 3^num_atoms. Basis kets are base-3 numbers in
// the "gef-msd" convention: digit values g=0, e=1, f=2 and the leftmost
// (lowest-label) atom is the most significant digit, so kets read
// left-to-right. Unnormalized states are first-class; branch algebra keeps
// raw weights and normalizes only when a measurement is reported.
struct QutritRegister {
    int num_atoms = 0;
    Eigen::VectorXcd amplitudes;

    static QutritRegister zero(int num_atoms);
    // Basis ket from level characters, e.g. "gege".
    static QutritRegister basis(std::string_view ket);

    double squared_norm() const { return amplitudes.squaredNorm(); }
    double norm() const { return amplitudes.norm(); }
    Complex amplitude(std::string_view ket) const;
};

std::size_t pow3(int n);
std::size_t basis_index(std::string_view ket);
std::string ket_label(std::size_t index, int num_atoms);
// Digit (level index) of `index` at atom position `pos`, 0-based from the left.
int digit_at(std::size_t index, int pos, int num_atoms);

// Kronecker product; a's atoms become the leading (most significant) digits.
QutritRegister tensor_product(const QutritRegister& a, const QutritRegister& b,
                              int max_atoms = kMaxAtoms);

// Projects the atoms at `positions` (0-based, distinct) onto fixed levels and
// drops them. Returns the unnormalized residual on the remaining atoms (in
// their original order) and the branch weight, i.e. the squared norm of the
// projected component. A vanishing branch is a weight-0 result, not an error.
std::pair<QutritRegister, double> project_levels(const QutritRegister& state,
                                                 const std::vector<int>& positions,
                                                 const std::vector<Level>& levels);

// Embeds `residual` back into a larger register with fixed levels at
// `positions` (the inverse of project_levels on a single branch).
QutritRegister embed_levels(const QutritRegister& residual,
                            const std::vector<int>& positions,
                            const std::vector<Level>& levels);

// Returns (unit-norm state, norm). Throws ZeroNormError below epsilon.
std::pair<QutritRegister, double> normalize(const QutritRegister& state,
                                            double epsilon = kZeroNormEpsilon);

// Reduced density matrix of a (generally unnormalized) pure state; trace
// equals the squared norm of the input.
struct DensityMatrix {
    Eigen::MatrixXcd entries;
    int dim() const { return static_cast<int>(entries.rows()); }
};

// Partial trace of |state><state| keeping the atoms listed in `keep`; the
// first listed atom becomes the most significant digit of the result.
DensityMatrix reduced_density(const QutritRegister& state, const std::vector<int>& keep);

// CLI dump format: {"convention":"gef-msd","num_atoms":n,"amplitudes":[[re,im],...]}.
std::string dump_json(const QutritRegister& state);

}  // namespace qrep
