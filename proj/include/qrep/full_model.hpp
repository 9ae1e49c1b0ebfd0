#pragma once

#include <string>
#include <vector>

#include "qrep/effective.hpp"
#include "qrep/qutrit.hpp"

namespace qrep {

// Untruncated model of one link: two three-level atoms coupled to two leaky
// cavity modes, with spontaneous emission entering as imaginary level
// energies. Both atoms share the same level frequencies, emission rates and
// couplings. Fock spaces are truncated at n_max photons per mode.
struct FullParams {
    double g1 = 1.0, g2 = 1.0;
    double omega_a = 0.0, omega_b = 0.0;
    double omega_g = 0.0, omega_e = 0.0, omega_f = 0.0;
    double kappa_a = 0.0, kappa_b = 0.0;
    double gamma_g = 0.0, gamma_e = 0.0, gamma_f = 0.0;
    int n_max = 2;

    double derived_Delta() const { return omega_e - omega_g - omega_a; }
    double derived_delta() const { return omega_e - omega_f - omega_b; }
    double derived_Gamma() const { return gamma_e - gamma_g - kappa_a; }
    double derived_gamma() const { return gamma_e - gamma_f - kappa_b; }
    ModelParams derived_model() const;

    int modes_dim() const { return n_max + 1; }
    int dim() const { return 9 * modes_dim() * modes_dim(); }
};

// Constructs frequencies and loss rates realizing the target detunings and
// effective dissipations: omega_g = 0, omega_f = 1, omega_e = 30 with the
// mode frequencies solved from (Delta, delta), and kappa = kappa' = 0 with
// gamma_e = max(Gamma, gamma, 0) so all emission rates stay nonnegative.
FullParams full_params_for(const ModelParams& target, int n_max = 2);

// Amplitudes over atom2 x atom3 x mode_a x mode_b, atom digits most
// significant, then the mode-a and mode-b photon numbers.
struct FullRegister {
    Eigen::VectorXcd amplitudes;
    int n_max = 0;
};

Eigen::Index full_index(const FullParams& p, int atom2, int atom3, int na, int nb);

Eigen::MatrixXcd build_full_hamiltonian(const FullParams& p);

FullRegister pair_with_vacuum(const QutritRegister& pair, int n_max);

// Schrodinger evolution exp(-iHT) of the (non-Hermitian) full Hamiltonian.
FullRegister evolve_full(const FullParams& p, const FullRegister& initial, double T);

// Conditional two-atom state given that both modes are found in vacuum.
QutritRegister project_vacuum(const FullRegister& r);

struct EffectiveComparison {
    std::vector<double> t_grid;
    std::vector<double> deviations;          // trace distance per grid point
    double max_deviation = 0.0;
    double truncation_sensitivity = 0.0;     // n_max vs n_max+1
};

// Evolves pair_initial x |vacuum> under the full model, post-selects vacuum
// (the effective dynamics is a conditional no-photon-loss description, so
// vacuum post-selection is the matching operation rather than a partial
// trace), unwinds the free-evolution frame, and reports the trace distance
// to the effective-model propagation at every grid point.
EffectiveComparison compare_effective(const FullParams& p, const QutritRegister& pair_initial,
                                      const std::vector<double>& t_grid, bool parallel = true);

// JSON validation report: {params, t_grid, deviations[], truncation_sensitivity, pass}.
std::string comparison_report_json(const EffectiveComparison& cmp, const FullParams& p,
                                   double threshold);

}  // namespace qrep
