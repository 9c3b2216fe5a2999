// measurement.hpp
// Unsharp two-outcome qubit measurements, the Lueders state update, and the
// direction-averaged channel seen by an observer who does not know which
// setting or outcome the previous observer had.

#pragma once

#include <array>
#include <cmath>
#include <string>

#include "seqwit/errors.hpp"
#include "seqwit/qmath.hpp"

namespace seqwit {

inline constexpr double zero_probability_threshold = 1e-14;

enum class outcome { plus, minus };

inline double sign_of(outcome o) { return o == outcome::plus ? 1.0 : -1.0; }

inline void check_sharpness(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0)) throw bad_sharpness(lambda);
}

struct effect {
    vec3 direction{0.0, 0.0, 1.0};
    outcome result = outcome::plus;
    double sharpness = 1.0;

    void validate() const {
        check_sharpness(sharpness);
        const double len = std::sqrt(direction[0] * direction[0] + direction[1] * direction[1] +
                                     direction[2] * direction[2]);
        if (std::abs(len - 1.0) > 1e-12)
            throw bad_direction("|n| = " + std::to_string(len) + ", expected 1");
    }
};

namespace axes {
inline constexpr vec3 x{1.0, 0.0, 0.0};
inline constexpr vec3 y{0.0, 1.0, 0.0};
inline constexpr vec3 z{0.0, 0.0, 1.0};
inline constexpr std::array<vec3, 3> all{x, y, z};
} // namespace axes

// Sharp projector onto the +/- eigenvector of n.sigma.
inline op2 projector(const vec3& n, outcome o) {
    return 0.5 * (op2::identity() + sign_of(o) * pauli::along(n));
}

// E = (I +/- lambda n.sigma) / 2
inline op2 effect_operator(const effect& e) {
    e.validate();
    return 0.5 * (op2::identity() + (sign_of(e.result) * e.sharpness) * pauli::along(e.direction));
}

// sqrt(E) = alpha P_same + beta P_opposite with alpha = sqrt((1+lambda)/2),
// beta = sqrt((1-lambda)/2).
inline op2 sqrt_effect(const effect& e) {
    e.validate();
    const double alpha = std::sqrt((1.0 + e.sharpness) / 2.0);
    const double beta = std::sqrt((1.0 - e.sharpness) / 2.0);
    const outcome other = e.result == outcome::plus ? outcome::minus : outcome::plus;
    return alpha * projector(e.direction, e.result) + beta * projector(e.direction, other);
}

struct measured_outcome {
    two_qubit_state state;
    double probability;
};

// Unnormalized branch (K rho K^dagger with K = sqrt(E) on the measured side).
inline op4 luders_branch(const op4& rho, const effect& e, side measured) {
    const op4 k = on_side(sqrt_effect(e), measured);
    return k * rho * k;
}

inline measured_outcome luders_update(const two_qubit_state& rho, const effect& e,
                                      side measured = side::bob) {
    const op4 branch = luders_branch(rho.op(), e, measured);
    const double p = (on_side(effect_operator(e), measured) * rho.op()).trace().real();
    if (p < zero_probability_threshold) throw zero_probability(p);
    return {two_qubit_state(branch * (1.0 / p)), p};
}

// (1/3) sum over n in {x, y, z}, i in {+, -} of sqrt(E) rho sqrt(E).
inline op4 averaged_channel(const op4& rho, double lambda, side measured = side::bob) {
    check_sharpness(lambda);
    op4 out;
    for (const auto& n : axes::all)
        for (outcome o : {outcome::plus, outcome::minus}) out += luders_branch(rho, {n, o, lambda}, measured);
    return out * (1.0 / 3.0);
}

inline two_qubit_state averaged_channel(const two_qubit_state& rho, double lambda,
                                        side measured = side::bob) {
    return two_qubit_state(averaged_channel(rho.op(), lambda, measured));
}

// Attenuation of every Bloch and correlation component on the measured side.
inline double shrink_factor(double lambda) {
    check_sharpness(lambda);
    return (1.0 + 2.0 * std::sqrt(1.0 - lambda * lambda)) / 3.0;
}

inline pauli_form averaged_channel_pauli(const pauli_form& p, double lambda, side measured = side::bob) {
    const double f = shrink_factor(lambda);
    pauli_form out = p;
    if (measured == side::bob) {
        for (auto& v : out.s) v *= f;
        for (auto& row : out.t)
            for (auto& v : row) v *= f;
    } else {
        for (auto& v : out.r) v *= f;
        for (auto& row : out.t)
            for (auto& v : row) v *= f;
    }
    return out;
}

} // namespace seqwit
