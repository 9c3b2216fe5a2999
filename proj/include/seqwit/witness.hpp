// witness.hpp
// The entanglement witness W0 for |psi+>, its sharpness-weighted form seen by
// an unsharp Bob, expectation values, and the closed-form stage value E_n.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "seqwit/errors.hpp"
#include "seqwit/measurement.hpp"
#include "seqwit/qmath.hpp"

namespace seqwit {

// 1/4 (I(x)I + lambda (sz(x)sz - sx(x)sx - sy(x)sy))
inline op4 w0_lambda(double lambda) {
    check_sharpness(lambda);
    op4 m = op4::identity();
    m += lambda * tensor(pauli::z(), pauli::z());
    m -= lambda * tensor(pauli::x(), pauli::x());
    m -= lambda * tensor(pauli::y(), pauli::y());
    return 0.25 * m;
}

// Partial transpose of |phi-><phi-|; spectrum {-1/2, 1/2, 1/2, 1/2}.
inline op4 w0() { return w0_lambda(1.0); }

inline double witness_expectation(const op4& w, const op4& rho) {
    if (const double d = w.hermitian_defect(); d > hermitian_tolerance)
        throw not_hermitian("witness asymmetry " + std::to_string(d));
    const complex v = (w * rho).trace();
    if (std::abs(v.imag()) > 1e-12)
        throw not_hermitian("imaginary expectation residue " + std::to_string(v.imag()));
    return v.real();
}

inline double witness_expectation(const op4& w, const two_qubit_state& rho) {
    return witness_expectation(w, rho.op());
}

struct witness_value {
    double value = 0.0;
    int stage = 0;
    std::vector<double> schedule;

    bool detects() const { return value < 0.0; }
};

// Closed form for the witness value seen by Bob n on a|01> + b|10> after the
// first n-1 Bobs have applied averaged channels:
//   E_n = 1/4 [1 - (1 + 4ab) lambda_n prod_{i<n} (1 + 2 sqrt(1 - lambda_i^2)) / 3]
inline double e_n_analytic(double ab, std::span<const double> schedule) {
    if (schedule.empty()) throw bad_schedule("empty schedule");
    if (!(ab >= 0.0 && ab <= 0.5)) throw bad_schedule("ab must lie in [0, 1/2]");
    for (double l : schedule)
        if (!(l > 0.0 && l <= 1.0)) throw bad_schedule("sharpness " + std::to_string(l) + " outside (0, 1]");
    double attenuation = 1.0;
    for (std::size_t i = 0; i + 1 < schedule.size(); ++i) attenuation *= shrink_factor(schedule[i]);
    return 0.25 * (1.0 - (1.0 + 4.0 * ab) * schedule.back() * attenuation);
}

inline witness_value evaluate_stage(double ab, std::span<const double> schedule) {
    return {e_n_analytic(ab, schedule), static_cast<int>(schedule.size()),
            std::vector<double>(schedule.begin(), schedule.end())};
}

namespace detail {

inline std::array<complex, 2> haar_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::array<complex, 2> v{complex(g(rng), g(rng)), complex(g(rng), g(rng))};
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= n;
    v[1] /= n;
    return v;
}

inline op2 projector_of(const std::array<complex, 2>& v) {
    op2 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

} // namespace detail

// Seeded mixtures of one to four Haar-random product states with flat
// Dirichlet weights. Every sample is separable by construction.
inline std::vector<two_qubit_state> separable_sampler(std::size_t count, std::uint64_t seed) {
    if (count == 0) throw out_of_range("sample count must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> terms(1, 4);
    std::exponential_distribution<double> expo(1.0);

    std::vector<two_qubit_state> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        const int k = terms(rng);
        std::array<double, 4> w{};
        double total = 0.0;
        for (int i = 0; i < k; ++i) total += (w[i] = expo(rng));
        op4 rho;
        for (int i = 0; i < k; ++i) {
            const op2 a = detail::projector_of(detail::haar_qubit(rng));
            const op2 b = detail::projector_of(detail::haar_qubit(rng));
            rho += (w[i] / total) * tensor(a, b);
        }
        // Re-symmetrize rounding so the state passes strict validation.
        rho = 0.5 * (rho + rho.adjoint());
        out.emplace_back(rho);
    }
    return out;
}

} // namespace seqwit
