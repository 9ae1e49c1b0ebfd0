#include "qrep/qutrit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

namespace qrep {

Level level_from_char(char c) {
    switch (c) {
        case 'g': return Level::g;
        case 'e': return Level::e;
        case 'f': return Level::f;
        default: throw std::invalid_argument(std::string("unknown level character '") + c + "'");
    }
}

char level_to_char(Level l) {
    static constexpr char names[3] = {'g', 'e', 'f'};
    return names[static_cast<int>(l)];
}

std::size_t pow3(int n) {
    std::size_t r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

std::size_t basis_index(std::string_view ket) {
    std::size_t idx = 0;
    for (char c : ket) idx = idx * 3 + static_cast<std::size_t>(level_from_char(c));
    return idx;
}

std::string ket_label(std::size_t index, int num_atoms) {
    std::string s(static_cast<std::size_t>(num_atoms), 'g');
    for (int p = num_atoms - 1; p >= 0; --p) {
        s[static_cast<std::size_t>(p)] = level_to_char(static_cast<Level>(index % 3));
        index /= 3;
    }
    return s;
}

int digit_at(std::size_t index, int pos, int num_atoms) {
    return static_cast<int>(index / pow3(num_atoms - 1 - pos) % 3);
}

QutritRegister QutritRegister::zero(int num_atoms) {
    if (num_atoms < 1 || num_atoms > kMaxAtoms)
        throw std::invalid_argument("register size out of range");
    QutritRegister r;
    r.num_atoms = num_atoms;
    r.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(pow3(num_atoms)));
    return r;
}

QutritRegister QutritRegister::basis(std::string_view ket) {
    QutritRegister r = zero(static_cast<int>(ket.size()));
    r.amplitudes[static_cast<Eigen::Index>(basis_index(ket))] = 1.0;
    return r;
}

Complex QutritRegister::amplitude(std::string_view ket) const {
    if (static_cast<int>(ket.size()) != num_atoms)
        throw std::invalid_argument("ket label length does not match register size");
    return amplitudes[static_cast<Eigen::Index>(basis_index(ket))];
}

QutritRegister tensor_product(const QutritRegister& a, const QutritRegister& b, int max_atoms) {
    if (a.num_atoms + b.num_atoms > max_atoms)
        throw std::invalid_argument("tensor product exceeds register capacity");
    QutritRegister r = QutritRegister::zero(a.num_atoms + b.num_atoms);
    const auto dim_b = static_cast<Eigen::Index>(pow3(b.num_atoms));
    for (Eigen::Index i = 0; i < a.amplitudes.size(); ++i)
        for (Eigen::Index j = 0; j < dim_b; ++j)
            r.amplitudes[i * dim_b + j] = a.amplitudes[i] * b.amplitudes[j];
    return r;
}

namespace {

void check_positions(const std::vector<int>& positions, int num_atoms) {
    std::set<int> seen;
    for (int p : positions) {
        if (p < 0 || p >= num_atoms) throw std::invalid_argument("atom position out of range");
        if (!seen.insert(p).second) throw std::invalid_argument("atom positions must be distinct");
    }
}

}  // namespace

std::pair<QutritRegister, double> project_levels(const QutritRegister& state,
                                                 const std::vector<int>& positions,
                                                 const std::vector<Level>& levels) {
    check_positions(positions, state.num_atoms);
    if (positions.size() != levels.size())
        throw std::invalid_argument("positions and levels must have the same length");
    if (positions.empty() || static_cast<int>(positions.size()) >= state.num_atoms)
        throw std::invalid_argument("projection must keep at least one atom");

    const int n = state.num_atoms;
    std::vector<bool> measured(static_cast<std::size_t>(n), false);
    std::vector<int> target(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < positions.size(); ++k) {
        measured[static_cast<std::size_t>(positions[k])] = true;
        target[static_cast<std::size_t>(positions[k])] = static_cast<int>(levels[k]);
    }

    QutritRegister residual = QutritRegister::zero(n - static_cast<int>(positions.size()));
    double weight = 0.0;
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(state.amplitudes.size()); ++idx) {
        std::size_t out = 0;
        bool match = true;
        for (int p = 0; p < n && match; ++p) {
            const int d = digit_at(idx, p, n);
            if (measured[static_cast<std::size_t>(p)]) {
                match = d == target[static_cast<std::size_t>(p)];
            } else {
                out = out * 3 + static_cast<std::size_t>(d);
            }
        }
        if (!match) continue;
        const Complex amp = state.amplitudes[static_cast<Eigen::Index>(idx)];
        residual.amplitudes[static_cast<Eigen::Index>(out)] = amp;
        weight += std::norm(amp);
    }
    return {std::move(residual), weight};
}

QutritRegister embed_levels(const QutritRegister& residual, const std::vector<int>& positions,
                            const std::vector<Level>& levels) {
    const int n = residual.num_atoms + static_cast<int>(positions.size());
    check_positions(positions, n);
    if (positions.size() != levels.size())
        throw std::invalid_argument("positions and levels must have the same length");

    std::vector<int> fixed(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < positions.size(); ++k)
        fixed[static_cast<std::size_t>(positions[k])] = static_cast<int>(levels[k]);

    QutritRegister out = QutritRegister::zero(n);
    for (std::size_t r = 0; r < static_cast<std::size_t>(residual.amplitudes.size()); ++r) {
        std::size_t idx = 0;
        int rp = 0;
        for (int p = 0; p < n; ++p) {
            const int d = fixed[static_cast<std::size_t>(p)] >= 0
                              ? fixed[static_cast<std::size_t>(p)]
                              : digit_at(r, rp++, residual.num_atoms);
            idx = idx * 3 + static_cast<std::size_t>(d);
        }
        out.amplitudes[static_cast<Eigen::Index>(idx)] = residual.amplitudes[static_cast<Eigen::Index>(r)];
    }
    return out;
}

std::pair<QutritRegister, double> normalize(const QutritRegister& state, double epsilon) {
    const double n = state.norm();
    if (!(n >= epsilon))
        throw ZeroNormError("state norm " + std::to_string(n) + " below epsilon");
    QutritRegister unit = state;
    unit.amplitudes /= n;
    return {std::move(unit), n};
}

DensityMatrix reduced_density(const QutritRegister& state, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("keep list must be nonempty");
    check_positions(keep, state.num_atoms);
    if (!(state.squared_norm() > 0)) throw std::invalid_argument("state has zero norm");

    const int n = state.num_atoms;
    const int k = static_cast<int>(keep.size());
    const auto dim_keep = static_cast<Eigen::Index>(pow3(k));
    const auto dim_rest = static_cast<Eigen::Index>(pow3(n - k));

    std::vector<bool> kept(static_cast<std::size_t>(n), false);
    for (int p : keep) kept[static_cast<std::size_t>(p)] = true;

    // Reshape the amplitude vector into (kept, rest); rho = M M^dagger.
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_keep, dim_rest);
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(state.amplitudes.size()); ++idx) {
        std::size_t ki = 0;
        for (int p : keep) ki = ki * 3 + static_cast<std::size_t>(digit_at(idx, p, n));
        std::size_t ri = 0;
        for (int p = 0; p < n; ++p)
            if (!kept[static_cast<std::size_t>(p)]) ri = ri * 3 + static_cast<std::size_t>(digit_at(idx, p, n));
        m(static_cast<Eigen::Index>(ki), static_cast<Eigen::Index>(ri)) =
            state.amplitudes[static_cast<Eigen::Index>(idx)];
    }
    DensityMatrix rho;
    rho.entries = m * m.adjoint();
    return rho;
}

std::string dump_json(const QutritRegister& state) {
    nlohmann::json j;
    j["convention"] = "gef-msd";
    j["num_atoms"] = state.num_atoms;
    auto amps = nlohmann::json::array();
    for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i)
        amps.push_back({state.amplitudes[i].real(), state.amplitudes[i].imag()});
    j["amplitudes"] = std::move(amps);
    return j.dump(2);
}

}  // namespace qrep
