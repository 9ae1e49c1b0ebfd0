#pragma once

#include "qrep/qutrit.hpp"

namespace qrep {

// Couplings, detunings and effective dissipation rates of one repeater link,
// all in units of a reference coupling g. Gamma and gamma act on the g<->e
// and f<->e channels respectively and enter the dynamics only through the
// complex rates below; Gamma = gamma_e - gamma_g - kappa is a difference of
// physical rates, so conditional-state norms can grow as well as decay. No
// clamping or renormalization happens during evolution; reported measures
// are ratio quantities.
struct ModelParams {
    double g1 = 1.0;
    double g2 = 1.0;
    double Delta = 0.0;
    double delta = 0.0;
    double Gamma = 0.0;
    double gamma = 0.0;
};

constexpr double kDenominatorEpsilon = 1e-12;

// coupling^2 / (detuning - i*dissipation/2). Throws DegenerateDenominatorError
// when the denominator magnitude falls below kDenominatorEpsilon.
Complex effective_rate(double coupling, double detuning, double dissipation);

Complex lambda1(const ModelParams& p);
Complex lambda2(const ModelParams& p);

using Matrix9 = Eigen::Matrix<Complex, 9, 9>;
using Vector9 = Eigen::Matrix<Complex, 9, 1>;

// Basis indices of the ordered-pair space (left atom most significant).
inline constexpr Eigen::Index kGG = 0, kGE = 1, kGF = 2, kEG = 3, kEE = 4,
                              kEF = 5, kFG = 6, kFE = 7, kFF = 8;

// Two-atom effective Hamiltonian: Stark shift l1+l2 per excited atom,
// flip-flop l1 within span{|ge>,|eg>} and l2 within span{|ef>,|fe>}, zero on
// the dark kets |gg>, |gf>, |fg>, |ff>. Complex-symmetric (equal to its plain
// transpose), not Hermitian, when the rates are complex.
Matrix9 build_effective_hamiltonian(Complex l1, Complex l2);

struct PairPropagator {
    Matrix9 matrix;
    double duration = 0.0;
};

// Closed-form exp(-i H_eff T): identity on the four dark kets,
// e^{-i(l1+l2)T} [cos lT, -i sin lT; -i sin lT, cos lT] on each flip-flop
// sector and e^{-2i(l1+l2)T} on |ee>. Sine and cosine take complex arguments.
// T may be negative, which applies the inverse map.
PairPropagator pair_propagator(Complex l1, Complex l2, double duration);

// Applies the propagator to the atoms at positions (pos_i, pos_j), pos_i <
// pos_j, embedded in identity on the rest of the register.
QutritRegister apply_pair_propagator(const QutritRegister& state, int pos_i, int pos_j,
                                     const PairPropagator& prop);

}  // namespace qrep
