#include "qrep/protocol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "qrep/measures.hpp"

namespace qrep {

namespace {

constexpr Complex kI{0.0, 1.0};

// Branch coefficients below the square of the norm epsilon count as absent.
constexpr double kWeightEpsilon = kZeroNormEpsilon * kZeroNormEpsilon;

}  // namespace

std::pair<Level, Level> outcome_levels(PairOutcome o) {
    switch (o) {
        case PairOutcome::eg: return {Level::e, Level::g};
        case PairOutcome::ge: return {Level::g, Level::e};
        case PairOutcome::ef: return {Level::e, Level::f};
        case PairOutcome::fe: return {Level::f, Level::e};
    }
    throw std::invalid_argument("invalid pair outcome");
}

std::string outcome_name(PairOutcome o) {
    const auto [a, b] = outcome_levels(o);
    return std::string() + level_to_char(a) + level_to_char(b);
}

PairOutcome outcome_from_name(std::string_view name) {
    for (int k = 0; k < kNumPairOutcomes; ++k) {
        const auto o = static_cast<PairOutcome>(k);
        if (outcome_name(o) == name) return o;
    }
    throw std::invalid_argument("unknown outcome name '" + std::string(name) + "'");
}

QutritRegister initial_bell_pair() {
    const double pi = std::numbers::pi;
    const Complex phase = std::exp(-kI * (pi / 4.0));
    QutritRegister r = QutritRegister::zero(2);
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    r.amplitudes[static_cast<Eigen::Index>(basis_index("gg"))] = inv_sqrt3 * phase;
    r.amplitudes[static_cast<Eigen::Index>(basis_index("ee"))] = -kI * inv_sqrt3 * phase;
    r.amplitudes[static_cast<Eigen::Index>(basis_index("ff"))] = -kI * inv_sqrt3;
    return r;
}

QutritRegister stage_one_state(const ModelParams& p, double t) {
    if (t < 0) throw std::invalid_argument("interaction time must be nonnegative");
    const QutritRegister seed = initial_bell_pair();
    const QutritRegister product = tensor_product(seed, seed);
    return apply_pair_propagator(product, 1, 2, pair_propagator(lambda1(p), lambda2(p), t));
}

std::vector<LabeledAmplitude> stage_one_coefficients(const ModelParams& p, double t) {
    if (t < 0) throw std::invalid_argument("interaction time must be nonnegative");
    const double pi = std::numbers::pi;
    const Complex l1 = lambda1(p), l2 = lambda2(p);
    const Complex stark = l1 + l2;
    const Complex half_pi_phase = std::exp(-kI * (pi / 2.0));
    const Complex quarter_pi_phase = std::exp(-kI * (pi / 4.0));
    const Complex et = std::exp(-kI * stark * t);

    const Complex a_gggg = half_pi_phase / 3.0;
    const Complex a_gege = -(half_pi_phase / 3.0) * et * std::sin(l1 * t);
    const Complex a_ggee = -(kI * half_pi_phase / 3.0) * et * std::cos(l1 * t);
    const Complex a_ggff = -(kI * quarter_pi_phase / 3.0);
    const Complex a_eeee = -(half_pi_phase / 3.0) * std::exp(-2.0 * kI * stark * t);
    const Complex a_eeff = -(quarter_pi_phase / 3.0) * et * std::cos(l2 * t);
    const Complex a_efef = (kI * quarter_pi_phase / 3.0) * et * std::sin(l2 * t);
    const Complex a_ffff = Complex{-1.0 / 3.0, 0.0};

    return {
        {"gggg", a_gggg}, {"gege", a_gege}, {"ggee", a_ggee}, {"ggff", a_ggff},
        {"eegg", a_ggee}, {"egeg", a_gege}, {"eeee", a_eeee}, {"eeff", a_eeff},
        {"efef", a_efef}, {"ffgg", a_ggff}, {"fefe", a_efef}, {"ffee", a_eeff},
        {"ffff", a_ffff},
    };
}

StageOneOutcome stage_one_measure(const QutritRegister& state, PairOutcome outcome) {
    if (state.num_atoms != 4) throw std::invalid_argument("stage-1 state must have four atoms");
    const auto [a, b] = outcome_levels(outcome);
    auto [residual, weight] = project_levels(state, {1, 2}, {a, b});
    if (weight < kWeightEpsilon)
        throw ZeroNormError("stage-1 branch " + outcome_name(outcome) + " vanishes");
    return {outcome, std::move(residual), weight, 0.0};
}

std::optional<int> paper_case_index(const SwapCase& c) {
    static constexpr std::array<std::pair<PairOutcome, PairOutcome>, 8> cases = {{
        {PairOutcome::eg, PairOutcome::eg},
        {PairOutcome::eg, PairOutcome::ge},
        {PairOutcome::ge, PairOutcome::eg},
        {PairOutcome::ge, PairOutcome::ge},
        {PairOutcome::ef, PairOutcome::ef},
        {PairOutcome::ef, PairOutcome::fe},
        {PairOutcome::fe, PairOutcome::ef},
        {PairOutcome::fe, PairOutcome::fe},
    }};
    for (std::size_t k = 0; k < cases.size(); ++k)
        if (cases[k].first == c.left && cases[k].second == c.right) return static_cast<int>(k) + 1;
    return std::nullopt;
}

SwapCase swap_case(int index) {
    for (int l = 0; l < kNumPairOutcomes; ++l)
        for (int r = 0; r < kNumPairOutcomes; ++r) {
            const SwapCase c{static_cast<PairOutcome>(l), static_cast<PairOutcome>(r)};
            if (paper_case_index(c) == index) return c;
        }
    throw std::invalid_argument("case index must be in 1..8");
}

double BranchSet::total_weight() const {
    double w = 0.0;
    for (const auto& e : entries) w += std::norm(e.value);
    return w;
}

Complex BranchSet::coefficient(std::string_view ket) const {
    for (const auto& e : entries)
        if (e.ket == ket) return e.value;
    return {0.0, 0.0};
}

namespace {

// Partner ket under the pair mixing at positions (1,2) of a four-atom
// register, if the pair sits in one of the two flip-flop sectors.
std::optional<std::size_t> mixing_partner(std::size_t idx) {
    const int d1 = digit_at(idx, 1, 4);
    const int d2 = digit_at(idx, 2, 4);
    const bool ge_sector = (d1 == 0 && d2 == 1) || (d1 == 1 && d2 == 0);
    const bool ef_sector = (d1 == 1 && d2 == 2) || (d1 == 2 && d2 == 1);
    if (!ge_sector && !ef_sector) return std::nullopt;
    const std::size_t stride1 = pow3(2), stride2 = pow3(1);
    return idx + static_cast<std::size_t>(d2 - d1) * stride1 +
           static_cast<std::size_t>(d1 - d2) * stride2;
}

}  // namespace

BranchSet stage_two_state(const SwapCase& c, const ModelParams& p, double t, double tau,
                          const std::optional<ModelParams>& right_link) {
    const QutritRegister s1_left = stage_one_state(p, t);
    const QutritRegister s1_right = right_link ? stage_one_state(*right_link, t) : s1_left;

    const StageOneOutcome left = stage_one_measure(s1_left, c.left);
    const StageOneOutcome right = stage_one_measure(s1_right, c.right);
    const QutritRegister left_unit = normalize(left.residual).first;
    const QutritRegister right_unit = normalize(right.residual).first;

    const QutritRegister product = tensor_product(left_unit, right_unit);

    // The support never leaves the orbit of the initial kets under the pair
    // mixing, so the branch labels can be fixed before evolving.
    std::set<std::size_t> support;
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(product.amplitudes.size()); ++idx) {
        if (product.amplitudes[static_cast<Eigen::Index>(idx)] == Complex{0.0, 0.0}) continue;
        support.insert(idx);
        if (const auto partner = mixing_partner(idx)) support.insert(*partner);
    }

    const QutritRegister evolved = apply_pair_propagator(
        product, 1, 2, pair_propagator(lambda1(p), lambda2(p), tau - t));

    BranchSet out;
    out.origin = c;
    out.t = t;
    out.tau = tau;
    for (std::size_t idx : support)
        out.entries.push_back({ket_label(idx, 4), evolved.amplitudes[static_cast<Eigen::Index>(idx)]});
    return out;
}

namespace {

struct StageOneSectors {
    Complex a2, a3, a5, a6;      // g/e sector amplitudes
    Complex a8, a9, a11, a12;    // e/f sector amplitudes
    double n_eg, n_ge, n_ef, n_fe;  // squared normalizers of the four residuals
};

StageOneSectors sector_amplitudes(const ModelParams& p, double t) {
    const auto coeffs = stage_one_coefficients(p, t);
    auto get = [&](std::string_view ket) {
        for (const auto& e : coeffs)
            if (e.ket == ket) return e.value;
        throw std::logic_error("missing stage-1 ket");
    };
    StageOneSectors s{};
    s.a2 = get("gege");
    s.a3 = get("ggee");
    s.a5 = get("eegg");
    s.a6 = get("egeg");
    s.a8 = get("eeff");
    s.a9 = get("efef");
    s.a11 = get("fefe");
    s.a12 = get("ffee");
    s.n_eg = std::norm(s.a2) + std::norm(s.a5);
    s.n_ge = std::norm(s.a3) + std::norm(s.a6);
    s.n_ef = std::norm(s.a8) + std::norm(s.a11);
    s.n_fe = std::norm(s.a9) + std::norm(s.a12);
    return s;
}

}  // namespace

BranchSet stage_two_coefficients(int case_index, const ModelParams& p, double t, double tau) {
    if (case_index < 1 || case_index > 8)
        throw std::invalid_argument("case index must be in 1..8");

    const Complex l1 = lambda1(p), l2 = lambda2(p);
    const Complex stark = l1 + l2;
    const StageOneSectors s = sector_amplitudes(p, t);
    for (double n : {s.n_eg, s.n_ge, s.n_ef, s.n_fe})
        if (n < kWeightEpsilon) throw ZeroNormError("stage-1 normalizer vanishes");

    const Complex e_tau = std::exp(-kI * stark * tau);
    const Complex decay = std::exp(-2.0 * kI * stark * (tau - t));
    // Combinations appearing in the g/e-sector coefficients...
    const Complex gp = std::exp(kI * l1 * tau) * std::exp(kI * l2 * t) +
                       std::exp(-kI * l1 * tau) * std::exp(2.0 * kI * l1 * t) * std::exp(kI * l2 * t);
    const Complex gm = std::exp(kI * l1 * tau) * std::exp(kI * l2 * t) -
                       std::exp(-kI * l1 * tau) * std::exp(2.0 * kI * l1 * t) * std::exp(kI * l2 * t);
    // ...and in the e/f-sector ones.
    const Complex fp = std::exp(kI * l2 * tau) * std::exp(kI * l1 * t) +
                       std::exp(-kI * l2 * tau) * std::exp(kI * l1 * t) * std::exp(2.0 * kI * l2 * t);
    const Complex fm = std::exp(kI * l2 * tau) * std::exp(kI * l1 * t) -
                       std::exp(-kI * l2 * tau) * std::exp(kI * l1 * t) * std::exp(2.0 * kI * l2 * t);

    const double root_eg_ge = std::sqrt(s.n_eg) * std::sqrt(s.n_ge);
    const double root_ef_fe = std::sqrt(s.n_ef) * std::sqrt(s.n_fe);

    BranchSet out;
    out.origin = swap_case(case_index);
    out.t = t;
    out.tau = tau;
    auto add = [&out](std::string ket, Complex value) {
        out.entries.push_back({std::move(ket), value});
    };

    switch (case_index) {
        case 1:
            add("gege", (s.a2 * s.a2 / 2.0 / s.n_eg) * e_tau * gp);
            add("ggee", -(s.a2 * s.a2 / 2.0 / s.n_eg) * e_tau * gm);
            add("eegg", -(s.a5 * s.a5 / 2.0 / s.n_eg) * e_tau * gm);
            add("egeg", (s.a5 * s.a5 / 2.0 / s.n_eg) * e_tau * gp);
            add("egge", s.a2 * s.a5 / s.n_eg);
            add("geeg", (s.a2 * s.a5 / s.n_eg) * decay);
            break;
        case 2:
            add("gege", (s.a2 * s.a3 / (2.0 * root_eg_ge)) * e_tau * gp);
            add("ggee", -(s.a2 * s.a3 / (2.0 * root_eg_ge)) * e_tau * gm);
            add("geeg", (s.a2 * s.a6 / root_eg_ge) * decay);
            add("egge", s.a3 * s.a5 / root_eg_ge);
            add("eegg", -(s.a5 * s.a6 / (2.0 * root_eg_ge)) * e_tau * gm);
            add("egeg", (s.a5 * s.a6 / (2.0 * root_eg_ge)) * e_tau * gp);
            break;
        case 3:
            add("gege", (s.a2 * s.a3 / (2.0 * root_eg_ge)) * e_tau * gp);
            add("ggee", -(s.a2 * s.a3 / (2.0 * root_eg_ge)) * e_tau * gm);
            add("geeg", (s.a3 * s.a5 / root_eg_ge) * decay);
            add("egge", s.a2 * s.a6 / root_eg_ge);
            add("eegg", -(s.a5 * s.a6 / (2.0 * root_eg_ge)) * e_tau * gm);
            add("egeg", (s.a5 * s.a6 / (2.0 * root_eg_ge)) * e_tau * gp);
            break;
        case 4:
            add("gege", (s.a3 * s.a3 / 2.0 / s.n_ge) * e_tau * gp);
            add("ggee", -(s.a3 * s.a3 / 2.0 / s.n_ge) * e_tau * gm);
            add("eegg", -(s.a6 * s.a6 / 2.0 / s.n_ge) * e_tau * gm);
            add("egeg", (s.a6 * s.a6 / 2.0 / s.n_ge) * e_tau * gp);
            add("geeg", (s.a3 * s.a6 / s.n_ge) * decay);
            add("egge", s.a3 * s.a6 / s.n_ge);
            break;
        case 5:
            add("eeff", -(s.a8 * s.a8 / 2.0 / s.n_ef) * e_tau * fm);
            add("efef", (s.a8 * s.a8 / 2.0 / s.n_ef) * e_tau * fp);
            add("ffee", -(s.a11 * s.a11 / 2.0 / s.n_ef) * e_tau * fm);
            add("fefe", (s.a11 * s.a11 / 2.0 / s.n_ef) * e_tau * fp);
            add("effe", s.a8 * s.a11 / s.n_ef);
            add("feef", (s.a8 * s.a11 / s.n_ef) * decay);
            break;
        case 6:
            add("efef", (s.a8 * s.a9 / (2.0 * root_ef_fe)) * e_tau * fp);
            add("eeff", -(s.a8 * s.a9 / (2.0 * root_ef_fe)) * e_tau * fm);
            add("effe", s.a8 * s.a12 / root_ef_fe);
            add("feef", (s.a9 * s.a11 / root_ef_fe) * decay);
            add("fefe", (s.a11 * s.a12 / (2.0 * root_ef_fe)) * e_tau * fp);
            add("ffee", -(s.a11 * s.a12 / (2.0 * root_ef_fe)) * e_tau * fm);
            break;
        case 7:
            add("efef", (s.a8 * s.a9 / (2.0 * root_ef_fe)) * e_tau * fp);
            add("eeff", -(s.a8 * s.a9 / (2.0 * root_ef_fe)) * e_tau * fm);
            add("effe", s.a9 * s.a11 / root_ef_fe);
            add("feef", (s.a8 * s.a12 / root_ef_fe) * decay);
            add("fefe", (s.a11 * s.a12 / (2.0 * root_ef_fe)) * e_tau * fp);
            add("ffee", -(s.a11 * s.a12 / (2.0 * root_ef_fe)) * e_tau * fm);
            break;
        case 8:
            add("efef", (s.a9 * s.a9 / 2.0 / s.n_fe) * e_tau * fp);
            add("eeff", -(s.a9 * s.a9 / 2.0 / s.n_fe) * e_tau * fm);
            add("fefe", (s.a12 * s.a12 / 2.0 / s.n_fe) * e_tau * fp);
            add("ffee", -(s.a12 * s.a12 / 2.0 / s.n_fe) * e_tau * fm);
            add("effe", s.a9 * s.a12 / s.n_fe);
            add("feef", (s.a9 * s.a12 / s.n_fe) * decay);
            break;
    }
    return out;
}

FinalPair stage_two_measure(const BranchSet& branches, std::pair<Level, Level> outcome) {
    const bool valid = (outcome.first == Level::e && outcome.second == Level::g) ||
                       (outcome.first == Level::g && outcome.second == Level::e) ||
                       (outcome.first == Level::e && outcome.second == Level::f) ||
                       (outcome.first == Level::f && outcome.second == Level::e);
    if (!valid) throw std::invalid_argument("outcome must be one of eg, ge, ef, fe");

    const double total = branches.total_weight();
    QutritRegister residual = QutritRegister::zero(2);
    double weight = 0.0;
    for (const auto& e : branches.entries) {
        if (level_from_char(e.ket[1]) != outcome.first ||
            level_from_char(e.ket[2]) != outcome.second)
            continue;
        const std::size_t idx =
            static_cast<std::size_t>(level_from_char(e.ket[0])) * 3 +
            static_cast<std::size_t>(level_from_char(e.ket[3]));
        residual.amplitudes[static_cast<Eigen::Index>(idx)] += e.value;
        weight += std::norm(e.value);
    }
    if (weight < kWeightEpsilon)
        throw ZeroNormError("selected stage-2 branch vanishes");

    FinalPair fp;
    fp.state = normalize(residual).first;
    fp.branch_weight = weight;
    fp.success_probability = weight / total;
    fp.outcome = outcome;

    // The final pair sits in a mirrored two-ket sector for the closed-form
    // cases; fall back to the partial-transpose measure otherwise.
    std::vector<Eigen::Index> nonzero;
    for (Eigen::Index i = 0; i < 9; ++i)
        if (std::abs(fp.state.amplitudes[i]) > kZeroNormEpsilon) nonzero.push_back(i);
    bool mirrored = false;
    if (nonzero.size() == 1) {
        mirrored = true;
        fp.negativity = 0.0;
    } else if (nonzero.size() == 2) {
        const Eigen::Index x = nonzero[0] / 3, y = nonzero[0] % 3;
        if (x != y && nonzero[1] == y * 3 + x) {
            mirrored = true;
            fp.negativity = negativity_sector(fp.state.amplitudes[nonzero[0]],
                                              fp.state.amplitudes[nonzero[1]]);
        }
    }
    if (mirrored) {
        fp.negativity_method = "closed_form";
    } else {
        fp.negativity = negativity_partial_transpose(reduced_density(fp.state, {0, 1}));
        fp.negativity_method = "partial_transpose";
    }
    return fp;
}

FinalPair run_protocol(const ModelParams& p, double t, double tau, const SwapCase& c,
                       std::pair<Level, Level> outcome,
                       const std::optional<ModelParams>& right_link) {
    return stage_two_measure(stage_two_state(c, p, t, tau, right_link), outcome);
}

}  // namespace qrep
