// qmath.hpp
// Dense complex linear algebra for single-qubit (2x2) and two-qubit (4x4)
// operators.
//
// Tensor ordering is fixed throughout the library: the first factor is Alice,
// the second is Bob, and the two-qubit basis is |00>, |01>, |10>, |11>, so
// (a (x) b)[2i+k][2j+l] = a[i][j] * b[k][l].

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>

#include "seqwit/errors.hpp"

namespace seqwit {

using complex = std::complex<double>;
using vec3 = std::array<double, 3>;
using mat3 = std::array<vec3, 3>;

inline constexpr double hermitian_tolerance = 1e-12;
inline constexpr double trace_tolerance = 1e-12;
inline constexpr double psd_tolerance = 1e-10;

enum class side { alice, bob };

template <std::size_t N>
class square_matrix {
public:
    static constexpr std::size_t dim = N;

    constexpr square_matrix() = default;

    // Row-major initializer; missing entries stay zero.
    square_matrix(std::initializer_list<std::initializer_list<complex>> rows) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            std::size_t j = 0;
            for (const auto& v : row) {
                if (i < N && j < N) data_[i * N + j] = v;
                ++j;
            }
            ++i;
        }
    }

    static square_matrix identity() {
        square_matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    static square_matrix diagonal(const std::array<double, N>& d) {
        square_matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
        return m;
    }

    complex& operator()(std::size_t i, std::size_t j) { return data_[i * N + j]; }
    const complex& operator()(std::size_t i, std::size_t j) const { return data_[i * N + j]; }

    square_matrix& operator+=(const square_matrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
        return *this;
    }
    square_matrix& operator-=(const square_matrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
        return *this;
    }
    square_matrix& operator*=(complex s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend square_matrix operator+(square_matrix a, const square_matrix& b) { return a += b; }
    friend square_matrix operator-(square_matrix a, const square_matrix& b) { return a -= b; }
    friend square_matrix operator*(square_matrix a, complex s) { return a *= s; }
    friend square_matrix operator*(complex s, square_matrix a) { return a *= s; }
    friend square_matrix operator*(square_matrix a, double s) { return a *= complex(s); }
    friend square_matrix operator*(double s, square_matrix a) { return a *= complex(s); }

    friend square_matrix operator*(const square_matrix& a, const square_matrix& b) {
        square_matrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const complex aik = a(i, k);
                if (aik == complex{}) continue;
                for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend bool operator==(const square_matrix&, const square_matrix&) = default;

    square_matrix adjoint() const {
        square_matrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    complex trace() const {
        complex t{};
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    // max |M - M^dagger| over entries
    double hermitian_defect() const {
        double d = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j)
                d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return d;
    }

    bool is_hermitian(double tol = hermitian_tolerance) const { return hermitian_defect() <= tol; }

private:
    std::array<complex, N * N> data_{};
};

using op2 = square_matrix<2>;
using op4 = square_matrix<4>;

// Largest entrywise distance; the norm used for every matrix comparison.
template <std::size_t N>
double max_abs_diff(const square_matrix<N>& a, const square_matrix<N>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

namespace pauli {

inline op2 id() { return op2::identity(); }
inline op2 x() { return op2{{0.0, 1.0}, {1.0, 0.0}}; }
inline op2 y() { return op2{{0.0, complex(0.0, -1.0)}, {complex(0.0, 1.0), 0.0}}; }
inline op2 z() { return op2{{1.0, 0.0}, {0.0, -1.0}}; }

// sigma_k for k = 0, 1, 2 -> x, y, z
inline op2 axis(std::size_t k) {
    switch (k) {
    case 0: return x();
    case 1: return y();
    default: return z();
    }
}

// n . sigma
inline op2 along(const vec3& n) { return n[0] * x() + n[1] * y() + n[2] * z(); }

} // namespace pauli

inline op4 tensor(const op2& a, const op2& b) {
    op4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

// Lifts a single-qubit operator onto one side of the pair.
inline op4 on_side(const op2& a, side s) {
    return s == side::alice ? tensor(a, op2::identity()) : tensor(op2::identity(), a);
}

template <std::size_t N>
struct eigensystem {
    std::array<double, N> values{};      // ascending
    square_matrix<N> vectors;            // column j is the eigenvector of values[j]
};

// Cyclic complex Jacobi. Each rotation first removes the phase of the pivot
// and then applies a real Givens rotation to the resulting symmetric block.
template <std::size_t N>
eigensystem<N> hermitian_eigs(const square_matrix<N>& m) {
    if (const double d = m.hermitian_defect(); d > hermitian_tolerance)
        throw not_hermitian("asymmetry " + std::to_string(d));

    square_matrix<N> a = m;
    for (std::size_t i = 0; i < N; ++i) a(i, i) = a(i, i).real();
    square_matrix<N> v = square_matrix<N>::identity();

    auto off_norm = [&a] {
        double s = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    constexpr int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && off_norm() >= 1e-14; ++sweep) {
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0) continue;
                const complex phase = a(p, q) / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
                const double c = std::cos(theta);
                const double s = std::sin(theta);

                // u = diag(1, .., conj(phase) at q, ..) * givens(p, q)
                square_matrix<N> u = square_matrix<N>::identity();
                u(p, p) = c;
                u(p, q) = s;
                u(q, p) = -s * std::conj(phase);
                u(q, q) = c * std::conj(phase);

                a = u.adjoint() * a * u;
                v = v * u;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t i = 0; i < N; ++i) a(i, i) = a(i, i).real();
            }
        }
    }

    std::array<std::size_t, N> order{};
    for (std::size_t i = 0; i < N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&a](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    eigensystem<N> out;
    for (std::size_t j = 0; j < N; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < N; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const square_matrix<N>& m) {
    return hermitian_eigs(m).values;
}

// Traces out `traced`; the remaining factor is returned.
inline op2 partial_trace(const op4& m, side traced) {
    op2 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                r(i, j) += traced == side::bob ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
    return r;
}

// Transposes the indices of one factor. Applying it twice is the identity.
inline op4 partial_transpose(const op4& m, side transposed = side::alice) {
    op4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    if (transposed == side::alice)
                        r(2 * i + k, 2 * j + l) = m(2 * j + k, 2 * i + l);
                    else
                        r(2 * i + k, 2 * j + l) = m(2 * i + l, 2 * j + k);
                }
    return r;
}

// rho = 1/4 (I(x)I + r.sigma(x)I + I(x)s.sigma + sum_kl T_kl sigma_k(x)sigma_l)
struct pauli_form {
    vec3 r{};   // Alice Bloch vector
    vec3 s{};   // Bob Bloch vector
    mat3 t{};   // correlation matrix, t[k][l] = <sigma_k (x) sigma_l>

    friend bool operator==(const pauli_form&, const pauli_form&) = default;
};

inline pauli_form pauli_decompose(const op4& m) {
    if (const double d = m.hermitian_defect(); d > hermitian_tolerance)
        throw not_hermitian("asymmetry " + std::to_string(d));
    auto expect = [&m](const op4& o) { return (m * o).trace().real(); };
    pauli_form p;
    for (std::size_t k = 0; k < 3; ++k) {
        p.r[k] = expect(tensor(pauli::axis(k), pauli::id()));
        p.s[k] = expect(tensor(pauli::id(), pauli::axis(k)));
        for (std::size_t l = 0; l < 3; ++l) p.t[k][l] = expect(tensor(pauli::axis(k), pauli::axis(l)));
    }
    return p;
}

inline op4 pauli_compose(const pauli_form& p) {
    op4 m = op4::identity();
    for (std::size_t k = 0; k < 3; ++k) {
        m += p.r[k] * tensor(pauli::axis(k), pauli::id());
        m += p.s[k] * tensor(pauli::id(), pauli::axis(k));
        for (std::size_t l = 0; l < 3; ++l) m += p.t[k][l] * tensor(pauli::axis(k), pauli::axis(l));
    }
    return 0.25 * m;
}

// A validated two-qubit density operator: Hermitian, unit trace, and
// positive semidefinite up to psd_tolerance.
class two_qubit_state {
public:
    explicit two_qubit_state(const op4& rho) : rho_(rho) {
        if (const double d = rho.hermitian_defect(); d > hermitian_tolerance)
            throw invalid_state("asymmetry " + std::to_string(d));
        if (const double t = std::abs(rho.trace() - 1.0); t > trace_tolerance)
            throw invalid_state("trace deviates from 1 by " + std::to_string(t));
        if (const double lo = hermitian_eigenvalues(rho)[0]; lo < -psd_tolerance)
            throw invalid_state("negative eigenvalue " + std::to_string(lo));
    }

    static two_qubit_state from_pauli(const pauli_form& p) { return two_qubit_state(pauli_compose(p)); }

    // |psi><psi| for a normalized amplitude vector in the |00>,|01>,|10>,|11> basis.
    static two_qubit_state pure(const std::array<complex, 4>& psi) {
        double norm = 0.0;
        for (const auto& c : psi) norm += std::norm(c);
        if (norm <= 0.0) throw invalid_state("zero vector");
        op4 m;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = psi[i] * std::conj(psi[j]) / norm;
        return two_qubit_state(m);
    }

    const op4& op() const { return rho_; }
    pauli_form pauli() const { return pauli_decompose(rho_); }

private:
    op4 rho_;
};

namespace states {

// (|01> + |10>) / sqrt(2)
inline two_qubit_state psi_plus() {
    const double h = 1.0 / std::sqrt(2.0);
    return two_qubit_state::pure({0.0, h, h, 0.0});
}

inline two_qubit_state maximally_mixed() { return two_qubit_state(0.25 * op4::identity()); }

// a|01> + b|10> with a = sqrt(a2), b = sqrt(1 - a2).
inline two_qubit_state pure_01_10(double a2) {
    if (!(a2 >= 0.0 && a2 <= 1.0)) throw out_of_range("a^2 must lie in [0, 1]");
    return two_qubit_state::pure({0.0, std::sqrt(a2), std::sqrt(1.0 - a2), 0.0});
}

// p |psi+><psi+| + (1 - p) I/4
inline two_qubit_state werner(double p) {
    return two_qubit_state(p * psi_plus().op() + (1.0 - p) * 0.25 * op4::identity());
}

} // namespace states

} // namespace seqwit
