// random.hpp
// Seeded random operators and states for property checks.

#pragma once

#include <cmath>
#include <random>

#include "seqwit/qmath.hpp"

namespace seqwit::random {

using engine = std::mt19937_64;

template <std::size_t N>
square_matrix<N> ginibre(engine& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    square_matrix<N> m;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = complex(g(rng), g(rng));
    return m;
}

template <std::size_t N>
square_matrix<N> hermitian(engine& rng) {
    const auto g = ginibre<N>(rng);
    return 0.5 * (g + g.adjoint());
}

// Hilbert-Schmidt distributed density operator G G^dagger / Tr.
inline two_qubit_state density(engine& rng) {
    const op4 g = ginibre<4>(rng);
    op4 rho = g * g.adjoint();
    rho = rho * (1.0 / rho.trace().real());
    return two_qubit_state(0.5 * (rho + rho.adjoint()));
}

inline vec3 unit_vector(engine& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    vec3 v{g(rng), g(rng), g(rng)};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (auto& x : v) x /= n;
    return v;
}

// exp(-i theta n.sigma / 2)
inline op2 qubit_unitary(engine& rng) {
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    const double theta = angle(rng);
    return std::cos(theta / 2) * op2::identity() + complex(0.0, -std::sin(theta / 2)) * pauli::along(unit_vector(rng));
}

// Sharpness drawn uniformly from (0, 1].
inline double sharpness(engine& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return 1.0 - u(rng);
}

} // namespace seqwit::random
