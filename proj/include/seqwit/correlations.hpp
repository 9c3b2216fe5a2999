// correlations.hpp
// Entropies, negativity and quantum discord for two-qubit states. All
// logarithms are base 2.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "seqwit/measurement.hpp"
#include "seqwit/qmath.hpp"

namespace seqwit {

namespace detail {
inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }
} // namespace detail

// Binary entropy H(a^2): the entanglement of a|01> + b|10> in ebits.
inline double pure_state_entanglement(double a2) {
    if (!(a2 >= 0.0 && a2 <= 1.0)) throw out_of_range("a^2 must lie in [0, 1]");
    return -detail::xlog2x(a2) - detail::xlog2x(1.0 - a2);
}

template <std::size_t N>
double von_neumann_entropy(const square_matrix<N>& rho) {
    double s = 0.0;
    for (double l : hermitian_eigenvalues(rho)) s -= detail::xlog2x(l);
    return s;
}

inline double von_neumann_entropy(const two_qubit_state& rho) { return von_neumann_entropy(rho.op()); }

// Sum of |negative eigenvalues| of the partial transpose; zero iff separable.
inline double negativity(const two_qubit_state& rho) {
    double n = 0.0;
    for (double l : hermitian_eigenvalues(partial_transpose(rho.op()))) n += l < 0.0 ? -l : 0.0;
    return n;
}

inline double min_partial_transpose_eigenvalue(const two_qubit_state& rho) {
    return hermitian_eigenvalues(partial_transpose(rho.op()))[0];
}

enum class discord_method { closed_form, numeric };

struct discord_report {
    double discord = 0.0;
    double classical_correlation = 0.0;
    double mutual_information = 0.0;
    vec3 best_direction{0.0, 0.0, 1.0};   // measurement axis on the measured side
    discord_method method = discord_method::numeric;
};

inline double mutual_information(const two_qubit_state& rho) {
    return von_neumann_entropy(partial_trace(rho.op(), side::bob)) +
           von_neumann_entropy(partial_trace(rho.op(), side::alice)) - von_neumann_entropy(rho.op());
}

// sum_i p_i S(unmeasured | outcome i) for a projective measurement of n.sigma
// on the measured side.
inline double conditional_entropy_along(const two_qubit_state& rho, const vec3& n, side measured) {
    double h = 0.0;
    for (outcome o : {outcome::plus, outcome::minus}) {
        const op4 k = on_side(projector(n, o), measured);
        const op2 branch = partial_trace(k * rho.op() * k, measured);
        const double p = branch.trace().real();
        if (p <= 1e-15) continue;
        h += p * von_neumann_entropy(0.5 * (branch + branch.adjoint()) * (1.0 / p));
    }
    return h;
}

// S(unmeasured) - sum_i p_i S(unmeasured | outcome i)
inline double classical_correlation_along(const two_qubit_state& rho, const vec3& n, side measured) {
    return von_neumann_entropy(partial_trace(rho.op(), measured)) - conditional_entropy_along(rho, n, measured);
}

inline vec3 spherical(double polar, double azimuth) {
    return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar)};
}

// Discord by direct maximization over the measurement sphere: a 181 x 91
// (azimuth x polar) grid followed by a shrinking pattern search around the
// best grid point. Ties go to the smallest polar angle, then smallest azimuth.
inline discord_report discord_numeric(const two_qubit_state& rho, side measured = side::bob) {
    constexpr int n_azimuth = 181;
    constexpr int n_polar = 91;
    const double pi = std::numbers::pi;

    const double unmeasured_entropy = von_neumann_entropy(partial_trace(rho.op(), measured));
    auto objective = [&](double polar, double azimuth) {
        return unmeasured_entropy - conditional_entropy_along(rho, spherical(polar, azimuth), measured);
    };

    double best = -1.0;
    double best_polar = 0.0;
    double best_azimuth = 0.0;
    for (int ip = 0; ip < n_polar; ++ip) {
        const double polar = pi * ip / (n_polar - 1);
        for (int ia = 0; ia < n_azimuth; ++ia) {
            const double azimuth = 2.0 * pi * ia / (n_azimuth - 1);
            const double v = objective(polar, azimuth);
            if (v > best) {
                best = v;
                best_polar = polar;
                best_azimuth = azimuth;
            }
        }
    }

    double step = pi / (n_polar - 1);
    while (step > 1e-10) {
        bool moved = false;
        for (const auto& [dp, da] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
            const double polar = best_polar + dp * step;
            const double azimuth = best_azimuth + da * step;
            const double v = objective(polar, azimuth);
            if (v > best + 1e-14) {
                best = v;
                best_polar = polar;
                best_azimuth = azimuth;
                moved = true;
                break;
            }
        }
        if (!moved) step *= 0.5;
    }

    discord_report r;
    r.mutual_information = mutual_information(rho);
    r.classical_correlation = best;
    r.discord = r.mutual_information - best;
    r.best_direction = spherical(best_polar, best_azimuth);
    r.method = discord_method::numeric;
    return r;
}

inline bool is_bell_diagonal(const pauli_form& p, double tol = 1e-12) {
    for (std::size_t k = 0; k < 3; ++k) {
        if (std::abs(p.r[k]) > tol || std::abs(p.s[k]) > tol) return false;
        for (std::size_t l = 0; l < 3; ++l)
            if (k != l && std::abs(p.t[k][l]) > tol) return false;
    }
    return true;
}

// Bell-diagonal states (r = s = 0, diagonal T): the optimal measurement is
// along the axis of largest |T_kk| and
//   C = (1-c)/2 log2(1-c) + (1+c)/2 log2(1+c),  c = max_k |T_kk|.
inline discord_report discord_bell_diagonal(const two_qubit_state& rho) {
    const pauli_form p = rho.pauli();
    if (!is_bell_diagonal(p)) throw invalid_state("not Bell-diagonal");
    const double c1 = p.t[0][0], c2 = p.t[1][1], c3 = p.t[2][2];
    const std::array<double, 4> eig{(1 - c1 - c2 - c3) / 4, (1 - c1 + c2 + c3) / 4,
                                    (1 + c1 - c2 + c3) / 4, (1 + c1 + c2 - c3) / 4};
    double mi = 2.0;
    for (double l : eig) mi += detail::xlog2x(l);

    // Tie order z, x, y follows the numeric search's (polar, azimuth) rule.
    std::size_t axis = 2;
    for (std::size_t k : {std::size_t{0}, std::size_t{1}})
        if (std::abs(p.t[k][k]) > std::abs(p.t[axis][axis])) axis = k;
    const double c = std::abs(p.t[axis][axis]);

    discord_report r;
    r.mutual_information = mi;
    r.classical_correlation = 0.5 * detail::xlog2x(1.0 - c) + 0.5 * detail::xlog2x(1.0 + c);
    r.discord = r.mutual_information - r.classical_correlation;
    r.best_direction = axes::all[axis];
    r.method = discord_method::closed_form;
    return r;
}

// Uses the closed form for Bell-diagonal input and the numeric search
// otherwise. The closed form is symmetric in the two sides.
inline discord_report discord(const two_qubit_state& rho, side measured = side::bob) {
    if (is_bell_diagonal(rho.pauli())) return discord_bell_diagonal(rho);
    return discord_numeric(rho, measured);
}

} // namespace seqwit
