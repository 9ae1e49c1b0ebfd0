#include "qrep/effective.hpp"

#include <cmath>

namespace qrep {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Complex effective_rate(double coupling, double detuning, double dissipation) {
    const Complex denom(detuning, -0.5 * dissipation);
    if (std::abs(denom) < kDenominatorEpsilon)
        throw DegenerateDenominatorError("rate denominator below threshold");
    return coupling * coupling / denom;
}

Complex lambda1(const ModelParams& p) { return effective_rate(p.g1, p.Delta, p.Gamma); }
Complex lambda2(const ModelParams& p) { return effective_rate(p.g2, p.delta, p.gamma); }

Matrix9 build_effective_hamiltonian(Complex l1, Complex l2) {
    const Complex stark = l1 + l2;
    Matrix9 h = Matrix9::Zero();
    h(kGE, kGE) = stark;
    h(kEG, kEG) = stark;
    h(kEF, kEF) = stark;
    h(kFE, kFE) = stark;
    h(kEE, kEE) = 2.0 * stark;
    h(kGE, kEG) = l1;
    h(kEG, kGE) = l1;
    h(kEF, kFE) = l2;
    h(kFE, kEF) = l2;
    return h;
}

PairPropagator pair_propagator(Complex l1, Complex l2, double duration) {
    const Complex stark = l1 + l2;
    const Complex phase = std::exp(-kI * stark * duration);
    const Complex c1 = std::cos(l1 * duration), s1 = std::sin(l1 * duration);
    const Complex c2 = std::cos(l2 * duration), s2 = std::sin(l2 * duration);

    Matrix9 u = Matrix9::Identity();
    u(kGE, kGE) = phase * c1;
    u(kEG, kEG) = phase * c1;
    u(kGE, kEG) = -kI * phase * s1;
    u(kEG, kGE) = -kI * phase * s1;
    u(kEF, kEF) = phase * c2;
    u(kFE, kFE) = phase * c2;
    u(kEF, kFE) = -kI * phase * s2;
    u(kFE, kEF) = -kI * phase * s2;
    u(kEE, kEE) = std::exp(-2.0 * kI * stark * duration);
    return {u, duration};
}

QutritRegister apply_pair_propagator(const QutritRegister& state, int pos_i, int pos_j,
                                     const PairPropagator& prop) {
    if (pos_i < 0 || pos_j >= state.num_atoms || pos_i >= pos_j)
        throw std::invalid_argument("pair positions must satisfy 0 <= i < j < num_atoms");

    const int n = state.num_atoms;
    const std::size_t stride_i = pow3(n - 1 - pos_i);
    const std::size_t stride_j = pow3(n - 1 - pos_j);

    QutritRegister out = QutritRegister::zero(n);
    const std::size_t dim = pow3(n);
    for (std::size_t base = 0; base < dim; ++base) {
        if (digit_at(base, pos_i, n) != 0 || digit_at(base, pos_j, n) != 0) continue;
        Vector9 in;
        for (Eigen::Index a = 0; a < 3; ++a)
            for (Eigen::Index b = 0; b < 3; ++b)
                in[3 * a + b] = state.amplitudes[static_cast<Eigen::Index>(
                    base + static_cast<std::size_t>(a) * stride_i + static_cast<std::size_t>(b) * stride_j)];
        const Vector9 res = prop.matrix * in;
        for (Eigen::Index a = 0; a < 3; ++a)
            for (Eigen::Index b = 0; b < 3; ++b)
                out.amplitudes[static_cast<Eigen::Index>(
                    base + static_cast<std::size_t>(a) * stride_i + static_cast<std::size_t>(b) * stride_j)] =
                    res[3 * a + b];
    }
    return out;
}

}  // namespace qrep
