#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrep/effective.hpp"
#include "qrep/qutrit.hpp"

namespace qrep {

// Measurement outcome on an atom pair, in the fixed enumeration order used
// for reporting: (e,g), (g,e), (e,f), (f,e).
enum class PairOutcome : int { eg = 0, ge = 1, ef = 2, fe = 3 };

constexpr int kNumPairOutcomes = 4;

std::pair<Level, Level> outcome_levels(PairOutcome o);
std::string outcome_name(PairOutcome o);
PairOutcome outcome_from_name(std::string_view name);

// Maximally entangled seed of one atom pair:
// (e^{-i pi/4}|gg> - i e^{-i pi/4}|ee> - i|ff>)/sqrt(3).
QutritRegister initial_bell_pair();

// State of atoms (1..4) after evolving the middle pair (2,3) of the double
// Bell seed for time t. Exactly thirteen basis kets carry amplitude.
QutritRegister stage_one_state(const ModelParams& p, double t);

struct LabeledAmplitude {
    std::string ket;
    Complex value;
};

// The thirteen amplitudes of stage_one_state in closed form, keyed by basis
// ket and listed in the fixed order gggg, gege, ggee, ggff, eegg, egeg, eeee,
// eeff, efef, ffgg, fefe, ffee, ffff. Serves as the test vector for the
// propagator route.
std::vector<LabeledAmplitude> stage_one_coefficients(const ModelParams& p, double t);

// Result of measuring the middle pair of a stage-1 state: the unnormalized
// residual on the outer pair plus the raw branch weight. The weight is
// reported as-is and not called a success probability.
struct StageOneOutcome {
    PairOutcome label;
    QutritRegister residual;
    double branch_weight = 0.0;
    double t = 0.0;
};

StageOneOutcome stage_one_measure(const QutritRegister& state, PairOutcome outcome);

// Choice of stage-1 outcomes feeding stage 2: `left` selects the (1,4) pair
// state and `right` the (5,8) pair state.
struct SwapCase {
    PairOutcome left;
    PairOutcome right;
};

// 1..8 for the combinations treated in closed form (both pairs in the same
// flip-flop sector); nullopt flags the remaining mixed-sector combinations,
// which run through the same generic pipeline.
std::optional<int> paper_case_index(const SwapCase& c);
SwapCase swap_case(int index);

// Unnormalized post-interaction branches of the four-atom (1,4,5,8) state,
// keyed by basis ket.
struct BranchSet {
    std::vector<LabeledAmplitude> entries;
    SwapCase origin{};
    double t = 0.0;
    double tau = 0.0;

    double total_weight() const;
    Complex coefficient(std::string_view ket) const;
};

// Generic pipeline: measure both stage-1 outcomes at time t, normalize the
// residuals, and evolve atoms (4,5) of the (1,4,5,8) product until time tau.
// The interaction starts when stage 1 ends, so the evolved duration is
// tau - t. An optional second parameter set applies to the right link's
// stage-1 interaction only.
BranchSet stage_two_state(const SwapCase& c, const ModelParams& p, double t, double tau,
                          const std::optional<ModelParams>& right_link = std::nullopt);

// Closed-form branch coefficients for cases 1..8, evaluated verbatim and
// listed in their conventional order. Oracle partner of stage_two_state.
BranchSet stage_two_coefficients(int case_index, const ModelParams& p, double t, double tau);

// Final two-atom result on atoms (1,8) after measuring atoms (4,5).
struct FinalPair {
    QutritRegister state;                // normalized
    double negativity = 0.0;
    double success_probability = 0.0;    // selected weight over the whole branch set
    double branch_weight = 0.0;          // unnormalized weight of the selected outcome
    std::pair<Level, Level> outcome{Level::e, Level::g};
    std::string negativity_method;       // "closed_form" or "partial_transpose"
};

// Outcome must be one of (e,g), (g,e), (e,f), (f,e). Throws ZeroNormError if
// the selected branch vanishes.
FinalPair stage_two_measure(const BranchSet& branches, std::pair<Level, Level> outcome);

FinalPair run_protocol(const ModelParams& p, double t, double tau, const SwapCase& c,
                       std::pair<Level, Level> outcome,
                       const std::optional<ModelParams>& right_link = std::nullopt);

}  // namespace qrep
