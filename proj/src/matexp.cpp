#include "qrep/matexp.hpp"

#include <cmath>

#include "qrep/errors.hpp"

namespace qrep {

Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& m, std::complex<double> scale) {
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("matrix must be square");
    if (n > 243) throw std::invalid_argument("dimension above 243 not supported");
    if (!m.allFinite() || !std::isfinite(scale.real()) || !std::isfinite(scale.imag()))
        throw std::invalid_argument("matrix and scale must be finite");

    Eigen::MatrixXcd a = scale * m;

    // 1-norm controls the scaling step; theta is the degree-13 bound for
    // double precision.
    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    constexpr double theta13 = 5.371920351148152;
    int squarings = 0;
    if (norm1 > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
        a /= std::pow(2.0, squarings);
    }

    static constexpr double b[14] = {64764752532480000.0, 32382376266240000.0,
                                     7771770303897600.0,  1187353796428800.0,
                                     129060195264000.0,   10559470521600.0,
                                     670442572800.0,      33522128640.0,
                                     1323241920.0,        40840800.0,
                                     960960.0,            16380.0,
                                     182.0,               1.0};

    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd a2 = a * a;
    const Eigen::MatrixXcd a4 = a2 * a2;
    const Eigen::MatrixXcd a6 = a2 * a4;

    const Eigen::MatrixXcd u =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
             b[1] * id);
    const Eigen::MatrixXcd v =
        a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

    Eigen::MatrixXcd f = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) f = f * f;

    if (!f.allFinite()) throw ConvergenceFailureError("matrix exponential did not converge");
    return f;
}

}  // namespace qrep
