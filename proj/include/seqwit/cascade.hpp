// cascade.hpp
// Sequential Bobs sharing one Alice: the threshold recursion for unequal
// sharpness schedules, the equal-sharpness count, entanglement and sharpness
// sweeps, and bisection of the entanglement boundaries between counts.
//
// A Bob detects entanglement only when the witness value is strictly
// negative. Thresholds are infima of admissible sharpness, so a stage counts
// only when its threshold lies strictly below 1.

#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "seqwit/correlations.hpp"
#include "seqwit/errors.hpp"
#include "seqwit/measurement.hpp"
#include "seqwit/qmath.hpp"
#include "seqwit/witness.hpp"

namespace seqwit {

inline constexpr double threshold_tolerance = 1e-12;
inline constexpr double a2_tolerance = 1e-12;
inline constexpr double boundary_tolerance = 1e-6;

// Threshold of the next Bob once the current one measured at exactly t.
inline double threshold_next(double t) {
    if (!(t > 0.0 && t <= 1.0)) throw out_of_range("threshold must lie in (0, 1], got " + std::to_string(t));
    return t * 3.0 / (1.0 + 2.0 * std::sqrt(1.0 - t * t));
}

// Solves H(a^2) = entanglement for a^2 in [0, 1/2] by bisection.
inline double entanglement_to_a2(double entanglement) {
    if (!(entanglement >= 0.0 && entanglement <= 1.0))
        throw out_of_range("entanglement must lie in [0, 1] ebits");
    if (entanglement == 0.0) return 0.0;
    if (entanglement == 1.0) return 0.5;
    double lo = 0.0;
    double hi = 0.5;
    while (hi - lo > a2_tolerance * 1e-3) {
        const double mid = 0.5 * (lo + hi);
        (pure_state_entanglement(mid) < entanglement ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

inline double a2_to_ab(double a2) { return std::sqrt(a2 * (1.0 - a2)); }

inline double entanglement_to_ab(double entanglement) {
    if (entanglement == 1.0) return 0.5;
    return a2_to_ab(entanglement_to_a2(entanglement));
}

// Inverse of a2_to_ab on the branch a^2 <= 1/2.
inline double ab_to_a2(double ab) {
    if (!(ab >= 0.0 && ab <= 0.5)) throw out_of_range("ab must lie in [0, 1/2]");
    return 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - 4.0 * ab * ab)));
}

struct cascade_report {
    double contrast = 1.0;              // 1 + 4ab
    std::vector<double> thresholds;     // admissible stages only, strictly increasing
    double next_threshold = 1.0;        // first threshold that is not below 1
    int max_bobs = 0;
    pauli_form final_state;

    bool product_state() const { return max_bobs == 0; }
};

inline cascade_report max_bobs_unequal(double ab) {
    if (!(ab >= 0.0 && ab <= 0.5)) throw out_of_range("ab must lie in [0, 1/2]");
    cascade_report rep;
    rep.contrast = 1.0 + 4.0 * ab;
    pauli_form state = states::pure_01_10(ab_to_a2(ab)).pauli();

    if (rep.contrast <= 1.0 + threshold_tolerance) {
        rep.next_threshold = 1.0 / rep.contrast;
        rep.final_state = state;
        return rep;
    }
    double t = 1.0 / rep.contrast;
    while (t < 1.0 - threshold_tolerance) {
        rep.thresholds.push_back(t);
        state = averaged_channel_pauli(state, t);
        t = threshold_next(t);
    }
    rep.next_threshold = t;
    rep.max_bobs = static_cast<int>(rep.thresholds.size());
    rep.final_state = state;
    return rep;
}

// Largest n with (1 + 4ab) lambda f(lambda)^(n-1) > 1.
inline int max_bobs_equal(double ab, double lambda) {
    if (!(ab >= 0.0 && ab <= 0.5)) throw out_of_range("ab must lie in [0, 1/2]");
    check_sharpness(lambda);
    const double c = 1.0 + 4.0 * ab;
    const double f = shrink_factor(lambda);
    int n = 0;
    double gain = c * lambda;
    while (gain > 1.0) {
        ++n;
        gain *= f;
    }
    return n;
}

struct sweep_point {
    double entanglement = 0.0;
    int max_bobs = 0;
};

inline int max_bobs_for_entanglement(double entanglement) {
    return max_bobs_unequal(entanglement_to_ab(entanglement)).max_bobs;
}

inline std::vector<sweep_point> sweep_entanglement(std::span<const double> grid) {
    std::vector<sweep_point> out;
    out.reserve(grid.size());
    for (double e : grid) out.push_back({e, max_bobs_for_entanglement(e)});
    return out;
}

// Smallest entanglement (to boundary_tolerance ebits) at which n Bobs can
// all detect entanglement.
inline double boundary_bisect(int n) {
    if (n < 1 || n > max_bobs_for_entanglement(1.0))
        throw out_of_range("no entanglement admits " + std::to_string(n) + " Bobs");
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > boundary_tolerance * 1e-3) {
        const double mid = 0.5 * (lo + hi);
        (max_bobs_for_entanglement(mid) >= n ? hi : lo) = mid;
    }
    return hi;
}

struct equal_lambda_point {
    double lambda = 0.0;
    double entanglement = 0.0;
    int max_bobs = 0;
};

inline std::vector<equal_lambda_point> sweep_lambda(double ab, std::span<const double> grid) {
    const double entanglement = ab >= 0.5 ? 1.0 : pure_state_entanglement(ab_to_a2(ab));
    std::vector<equal_lambda_point> out;
    out.reserve(grid.size());
    for (double l : grid) out.push_back({l, entanglement, max_bobs_equal(ab, l)});
    return out;
}

inline int best_equal_count(double ab, std::span<const double> grid) {
    int best = 0;
    for (double l : grid) best = std::max(best, max_bobs_equal(ab, l));
    return best;
}

// Smallest entanglement at which some lambda on the grid lets n Bobs with
// equal sharpness detect entanglement.
inline double equal_boundary_bisect(int n, std::span<const double> grid) {
    if (n < 1 || best_equal_count(0.5, grid) < n)
        throw out_of_range("no entanglement admits " + std::to_string(n) + " equal-sharpness Bobs");
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > boundary_tolerance * 1e-3) {
        const double mid = 0.5 * (lo + hi);
        (best_equal_count(entanglement_to_ab(mid), grid) >= n ? hi : lo) = mid;
    }
    return hi;
}

// The state left after the cascade, under the three readings of which
// measurements precede it.
enum class final_convention {
    all_threshold,   // every counted Bob measures at their threshold
    last_sharp,      // the last counted Bob measures projectively
    post_alice,      // all-threshold, then Alice's sharp measurement averaged over x, y, z
};

inline two_qubit_state cascade_final_state(double ab, final_convention conv) {
    const cascade_report rep = max_bobs_unequal(ab);
    op4 rho = states::pure_01_10(ab_to_a2(ab)).op();
    for (std::size_t i = 0; i < rep.thresholds.size(); ++i) {
        const bool last = i + 1 == rep.thresholds.size();
        const double lambda = conv == final_convention::last_sharp && last ? 1.0 : rep.thresholds[i];
        rho = averaged_channel(rho, lambda, side::bob);
    }
    if (conv == final_convention::post_alice) rho = averaged_channel(rho, 1.0, side::alice);
    return two_qubit_state(0.5 * (rho + rho.adjoint()));
}

} // namespace seqwit
