// verify.hpp
// Cross-validation suite behind the `verify` command: the closed-form
// cascade is replayed through the dense simulator and checked for witness
// soundness and the separable endpoint.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqwit/cascade.hpp"
#include "seqwit/correlations.hpp"
#include "seqwit/measurement.hpp"
#include "seqwit/random.hpp"
#include "seqwit/witness.hpp"

namespace seqwit {

struct check_result {
    std::string name;
    long passed = 0;
    long failed = 0;
    double worst = 0.0;   // largest observed violation measure

    bool ok() const { return failed == 0; }
};

struct verify_options {
    std::uint64_t seed = 20190101;
    int schedules = 500;
    int max_stages = 14;
    int separable_samples = 10000;
    int witness_lambdas = 50;
    int channel_states = 1000;
    double epsilon = 1e-9;
};

// Witness value of Bob n after the schedule prefix, by dense simulation.
inline double simulated_stage_value(double ab, std::span<const double> schedule) {
    op4 rho = states::pure_01_10(ab_to_a2(ab)).op();
    for (std::size_t i = 0; i + 1 < schedule.size(); ++i) rho = averaged_channel(rho, schedule[i]);
    return witness_expectation(w0_lambda(schedule.back()), rho);
}

inline check_result check_analytic_vs_matrix(const verify_options& opt) {
    check_result r{"analytic_vs_matrix"};
    random::engine rng(opt.seed);
    std::uniform_real_distribution<double> ab_dist(0.0, 0.5);
    std::uniform_int_distribution<int> len(1, opt.max_stages);
    for (int k = 0; k < opt.schedules; ++k) {
        const double ab = ab_dist(rng);
        std::vector<double> schedule(static_cast<std::size_t>(len(rng)));
        for (auto& l : schedule) l = random::sharpness(rng);
        const double diff = std::abs(e_n_analytic(ab, schedule) - simulated_stage_value(ab, schedule));
        r.worst = std::max(r.worst, diff);
        (diff <= 1e-12 ? r.passed : r.failed) += 1;
    }
    return r;
}

inline check_result check_witness_soundness(const verify_options& opt) {
    check_result r{"witness_soundness"};
    const auto samples = separable_sampler(static_cast<std::size_t>(opt.separable_samples), opt.seed);
    std::vector<op4> witnesses;
    for (int i = 1; i <= opt.witness_lambdas; ++i)
        witnesses.push_back(w0_lambda(static_cast<double>(i) / opt.witness_lambdas));
    for (const auto& rho : samples) {
        for (const auto& w : witnesses) {
            const double v = witness_expectation(w, rho);
            r.worst = std::max(r.worst, -v);
            (v >= -1e-10 ? r.passed : r.failed) += 1;
        }
    }
    return r;
}

// Each counted stage detects just above its threshold and not just below.
inline check_result check_threshold_bracketing(double entanglement, double epsilon) {
    check_result r{"threshold_bracketing"};
    const double ab = entanglement_to_ab(entanglement);
    const auto rep = max_bobs_unequal(ab);
    op4 rho = states::pure_01_10(ab_to_a2(ab)).op();
    for (double t : rep.thresholds) {
        const double above = witness_expectation(w0_lambda(std::min(1.0, t + epsilon)), rho);
        const double below = witness_expectation(w0_lambda(t - epsilon), rho);
        (above < 0.0 && below >= 0.0 ? r.passed : r.failed) += 1;
        rho = averaged_channel(rho, t);
    }
    return r;
}

inline check_result check_separable_endpoint() {
    check_result r{"separable_endpoint"};
    const auto rho = cascade_final_state(0.5, final_convention::all_threshold);
    const double lo = min_partial_transpose_eigenvalue(rho);
    r.worst = std::max(0.0, -lo);
    (lo >= -1e-10 ? r.passed : r.failed) += 1;
    return r;
}

inline check_result check_channel_equivalence(const verify_options& opt) {
    check_result r{"channel_equivalence"};
    random::engine rng(opt.seed + 1);
    for (int k = 0; k < opt.channel_states; ++k) {
        const auto rho = random::density(rng);
        const double lambda = random::sharpness(rng);
        const op4 dense = averaged_channel(rho.op(), lambda);
        const op4 fast = pauli_compose(averaged_channel_pauli(rho.pauli(), lambda));
        const double diff = max_abs_diff(dense, fast);
        r.worst = std::max(r.worst, diff);
        (diff <= 1e-12 ? r.passed : r.failed) += 1;
    }
    return r;
}

inline std::vector<check_result> run_verification(const verify_options& opt) {
    return {check_analytic_vs_matrix(opt), check_witness_soundness(opt),
            check_threshold_bracketing(1.0, opt.epsilon), check_separable_endpoint(),
            check_channel_equivalence(opt)};
}

} // namespace seqwit
