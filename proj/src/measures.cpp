#include "qrep/measures.hpp"

#include <cmath>

#include "qrep/protocol.hpp"

namespace qrep {

double negativity_sector(Complex a, Complex b) {
    const double n2 = std::norm(a) + std::norm(b);
    if (n2 < 1e-24) throw ZeroNormError("sector amplitudes vanish");
    return std::abs(a) * std::abs(b) / n2;
}

double negativity_partial_transpose(const DensityMatrix& rho) {
    if (rho.dim() != 9) throw std::invalid_argument("expected a two-qutrit density matrix");
    const double trace = rho.entries.trace().real();
    if (std::abs(trace - 1.0) > 1e-8)
        throw NotNormalizedError("density matrix trace deviates from one by " +
                                 std::to_string(trace - 1.0));

    // Transpose the first-atom indices: sigma[(a,b),(c,d)] = rho[(c,b),(a,d)].
    Eigen::MatrixXcd sigma(9, 9);
    for (Eigen::Index a = 0; a < 3; ++a)
        for (Eigen::Index b = 0; b < 3; ++b)
            for (Eigen::Index c = 0; c < 3; ++c)
                for (Eigen::Index d = 0; d < 3; ++d)
                    sigma(3 * a + b, 3 * c + d) = rho.entries(3 * c + b, 3 * a + d);
    sigma = 0.5 * (sigma + sigma.adjoint().eval());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sigma, Eigen::EigenvaluesOnly);
    double negative_part = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double v = solver.eigenvalues()[i];
        if (v < -1e-12) negative_part -= v;
    }
    return negative_part;
}

double success_probability(const BranchSet& branches,
                           const std::pair<std::string, std::string>& selected) {
    const double total = branches.total_weight();
    if (total < 1e-24) throw ZeroNormError("branch set has zero weight");
    double picked = 0.0;
    for (const auto& e : branches.entries)
        if (e.ket == selected.first || e.ket == selected.second) picked += std::norm(e.value);
    return picked / total;
}

}  // namespace qrep
