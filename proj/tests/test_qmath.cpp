#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "seqwit/qmath.hpp"
#include "seqwit/random.hpp"
#include "seqwit/witness.hpp"

using namespace seqwit;

namespace {

constexpr double tol = 1e-12;

template <std::size_t N>
void expect_matrix_near(const square_matrix<N>& a, const square_matrix<N>& b, double eps = tol) {
    EXPECT_LE(max_abs_diff(a, b), eps);
}

} // namespace

TEST(Tensor, IdentityTimesIdentity) {
    EXPECT_EQ(tensor(pauli::id(), pauli::id()), op4::identity());
}

TEST(Tensor, ZZIsDiagonal) {
    EXPECT_EQ(tensor(pauli::z(), pauli::z()), op4::diagonal({1, -1, -1, 1}));
}

TEST(Tensor, XYMatchesIndexFormula) {
    const op4 m = tensor(pauli::x(), pauli::y());
    EXPECT_EQ(m, oracle::kron(pauli::x(), pauli::y()));
    // anti-diagonal entries are +-i, everything else vanishes
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i + j == 3)
                EXPECT_DOUBLE_EQ(std::abs(m(i, j)), 1.0);
            else
                EXPECT_EQ(m(i, j), complex{});
        }
    EXPECT_EQ(m(0, 3), complex(0, -1));
    EXPECT_EQ(m(3, 0), complex(0, 1));
}

TEST(Tensor, RandomFactorsMatchIndexFormula) {
    random::engine rng(11);
    for (int k = 0; k < 50; ++k) {
        const auto a = random::ginibre<2>(rng);
        const auto b = random::ginibre<2>(rng);
        EXPECT_EQ(tensor(a, b), oracle::kron(a, b));
    }
}

TEST(HermitianEigs, Diagonal) {
    const auto e = hermitian_eigs(op4::diagonal({3, 1, 4, 2}));
    EXPECT_NEAR(e.values[0], 1, tol);
    EXPECT_NEAR(e.values[1], 2, tol);
    EXPECT_NEAR(e.values[2], 3, tol);
    EXPECT_NEAR(e.values[3], 4, tol);
}

TEST(HermitianEigs, WitnessSpectrum) {
    const auto v = hermitian_eigenvalues(w0());
    EXPECT_NEAR(v[0], -0.5, tol);
    for (int i = 1; i < 4; ++i) EXPECT_NEAR(v[i], 0.5, tol);
}

// W0 as written detects |psi+>, which makes it the partial transpose of
// |phi-><phi-| (|phi+> up to a local sigma_z); same spectrum either way.
TEST(HermitianEigs, WitnessIsPartialTransposeOfPhiMinus) {
    const double h = 1.0 / std::sqrt(2.0);
    const auto phi_minus = two_qubit_state::pure({h, 0.0, 0.0, -h});
    expect_matrix_near(partial_transpose(phi_minus.op(), side::alice), w0());
}

TEST(HermitianEigs, PureProjector) {
    const auto v = hermitian_eigenvalues(states::psi_plus().op());
    EXPECT_NEAR(v[0], 0, tol);
    EXPECT_NEAR(v[1], 0, tol);
    EXPECT_NEAR(v[2], 0, tol);
    EXPECT_NEAR(v[3], 1, tol);
}

TEST(HermitianEigs, RejectsNonHermitian) {
    op4 m = op4::identity();
    m(0, 1) = 1e-6;
    EXPECT_THROW(hermitian_eigs(m), not_hermitian);
}

TEST(HermitianEigs, TwoByTwoMatchesClosedForm) {
    random::engine rng(5);
    for (int k = 0; k < 200; ++k) {
        const op2 m = random::hermitian<2>(rng);
        const auto got = hermitian_eigenvalues(m);
        const auto want = oracle::eig2(m);
        EXPECT_NEAR(got[0], want[0], 1e-12);
        EXPECT_NEAR(got[1], want[1], 1e-12);
    }
}

TEST(HermitianEigs, RandomPropertyResidualAndReconstruction) {
    random::engine rng(2024);
    for (int k = 0; k < 1000; ++k) {
        const op4 m = random::hermitian<4>(rng);
        const auto e = hermitian_eigs(m);
        for (int j = 0; j + 1 < 4; ++j) EXPECT_LE(e.values[j], e.values[j + 1]);

        op4 rebuilt;
        for (int j = 0; j < 4; ++j) {
            for (int r = 0; r < 4; ++r) {
                complex mv{};
                for (int c = 0; c < 4; ++c) mv += m(r, c) * e.vectors(c, j);
                ASSERT_LE(std::abs(mv - e.values[j] * e.vectors(r, j)), 1e-10);
            }
        }
        rebuilt = e.vectors * op4::diagonal(e.values) * e.vectors.adjoint();
        ASSERT_LE(max_abs_diff(rebuilt, m), 1e-10);
        ASSERT_LE(max_abs_diff(e.vectors.adjoint() * e.vectors, op4::identity()), 1e-10);
    }
}

TEST(PartialTrace, BellMarginalIsMaximallyMixed) {
    expect_matrix_near(partial_trace(states::psi_plus().op(), side::alice), 0.5 * op2::identity());
    expect_matrix_near(partial_trace(states::psi_plus().op(), side::bob), 0.5 * op2::identity());
}

TEST(PartialTrace, ProductFactorizes) {
    random::engine rng(3);
    const auto ga = random::ginibre<2>(rng);
    const auto gb = random::ginibre<2>(rng);
    op2 a = ga * ga.adjoint();
    op2 b = gb * gb.adjoint();
    a = a * (1.0 / a.trace().real());
    b = b * (1.0 / b.trace().real());
    expect_matrix_near(partial_trace(tensor(a, b), side::bob), a);
    expect_matrix_near(partial_trace(tensor(a, b), side::alice), b);
}

TEST(PartialTrace, UnbalancedPureState) {
    // a|01> + b|10>, a^2 = 0.3: Alice holds |0> with weight 0.3.
    const auto rho = states::pure_01_10(0.3);
    expect_matrix_near(partial_trace(rho.op(), side::bob), op2::diagonal({0.3, 0.7}));
}

TEST(PartialTrace, PreservesTrace) {
    random::engine rng(9);
    for (int k = 0; k < 100; ++k) {
        const op4 m = random::ginibre<4>(rng);
        EXPECT_LE(std::abs(partial_trace(m, side::alice).trace() - m.trace()), tol);
        EXPECT_LE(std::abs(partial_trace(m, side::bob).trace() - m.trace()), tol);
    }
}

TEST(PartialTranspose, Identity) {
    EXPECT_EQ(partial_transpose(op4::identity()), op4::identity());
}

TEST(PartialTranspose, BellStateHasNegativeEigenvalue) {
    const auto v = hermitian_eigenvalues(partial_transpose(states::psi_plus().op()));
    EXPECT_NEAR(v[0], -0.5, tol);
}

TEST(PartialTranspose, DiagonalStateUnchanged) {
    const op4 d = op4::diagonal({0.25, 0.25, 0.25, 0.25});
    EXPECT_EQ(partial_transpose(d), d);
    EXPECT_GE(hermitian_eigenvalues(partial_transpose(d))[0], 0.0);
}

TEST(PartialTranspose, InvolutionOnRandomInputs) {
    random::engine rng(17);
    for (int k = 0; k < 1000; ++k) {
        const op4 m = random::ginibre<4>(rng);
        ASSERT_EQ(partial_transpose(partial_transpose(m, side::alice), side::alice), m);
        ASSERT_EQ(partial_transpose(partial_transpose(m, side::bob), side::bob), m);
    }
}

TEST(PartialTranspose, SidesDifferByFullTranspose) {
    random::engine rng(19);
    const op4 m = random::ginibre<4>(rng);
    op4 full;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) full(i, j) = m(j, i);
    EXPECT_EQ(partial_transpose(partial_transpose(m, side::alice), side::bob), full);
}

TEST(Pauli, BellState) {
    const auto p = pauli_decompose(states::psi_plus().op());
    for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(p.r[k], 0, tol);
        EXPECT_NEAR(p.s[k], 0, tol);
    }
    EXPECT_NEAR(p.t[0][0], 1, tol);
    EXPECT_NEAR(p.t[1][1], 1, tol);
    EXPECT_NEAR(p.t[2][2], -1, tol);
    EXPECT_NEAR(p.t[0][1], 0, tol);
    EXPECT_NEAR(p.t[1][0], 0, tol);
}

TEST(Pauli, MaximallyMixed) {
    const auto p = pauli_decompose(states::maximally_mixed().op());
    EXPECT_EQ(p, pauli_form{});
}

TEST(Pauli, UnbalancedPureState) {
    const double a2 = 0.3;
    const double ab = std::sqrt(a2 * (1 - a2));
    const auto p = pauli_decompose(states::pure_01_10(a2).op());
    EXPECT_NEAR(p.r[2], a2 - (1 - a2), tol);
    EXPECT_NEAR(p.s[2], (1 - a2) - a2, tol);
    EXPECT_NEAR(p.r[0], 0, tol);
    EXPECT_NEAR(p.s[1], 0, tol);
    EXPECT_NEAR(p.t[0][0], 2 * ab, tol);
    EXPECT_NEAR(p.t[1][1], 2 * ab, tol);
    EXPECT_NEAR(p.t[2][2], -1, tol);
}

TEST(Pauli, RejectsNonHermitian) {
    op4 m = op4::identity();
    m(1, 2) = complex(0, 1);
    EXPECT_THROW(pauli_decompose(m), not_hermitian);
}

TEST(Pauli, RoundTripOnRandomHermitian) {
    random::engine rng(23);
    for (int k = 0; k < 1000; ++k) {
        op4 m = random::hermitian<4>(rng);
        // Pauli form fixes the identity coefficient at 1/4.
        m += (0.25 * (1.0 - m.trace().real())) * op4::identity();
        ASSERT_LE(max_abs_diff(pauli_compose(pauli_decompose(m)), m), tol);
    }
}

TEST(Pauli, ComposeAlwaysHasUnitTrace) {
    random::engine rng(29);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int k = 0; k < 500; ++k) {
        pauli_form p;
        for (int i = 0; i < 3; ++i) {
            p.r[i] = u(rng);
            p.s[i] = u(rng);
            for (int j = 0; j < 3; ++j) p.t[i][j] = u(rng);
        }
        EXPECT_NEAR(pauli_compose(p).trace().real(), 1.0, tol);
        EXPECT_NEAR(pauli_compose(p).trace().imag(), 0.0, tol);
        EXPECT_LE(max_abs_diff(pauli_compose(pauli_decompose(pauli_compose(p))), pauli_compose(p)), tol);
    }
}

TEST(TwoQubitState, Validation) {
    EXPECT_THROW(two_qubit_state(op4::identity()), invalid_state);
    EXPECT_THROW(two_qubit_state(op4::diagonal({1.5, -0.5, 0, 0})), invalid_state);
    op4 m = 0.25 * op4::identity();
    m(0, 1) = 0.1;
    EXPECT_THROW(two_qubit_state{m}, invalid_state);
    EXPECT_NO_THROW(states::werner(0.4));
    EXPECT_LE(max_abs_diff(states::werner(0.4).op(), oracle::werner(0.4)), tol);
}
