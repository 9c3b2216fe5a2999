#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "seqwit/cascade.hpp"
#include "seqwit/correlations.hpp"
#include "seqwit/random.hpp"

using namespace seqwit;

namespace {

constexpr double tol = 1e-12;

two_qubit_state random_bell_diagonal(random::engine& rng) {
    // Convex weights over the four Bell projectors keep the state physical.
    std::exponential_distribution<double> expo(1.0);
    std::array<double, 4> w{};
    double total = 0.0;
    for (auto& x : w) total += (x = expo(rng));
    const double h = 1.0 / std::sqrt(2.0);
    const std::array<std::array<complex, 4>, 4> bell{{
        {h, 0, 0, h}, {h, 0, 0, -h}, {0, h, h, 0}, {0, h, -h, 0}}};
    op4 m;
    for (std::size_t k = 0; k < 4; ++k) m += (w[k] / total) * two_qubit_state::pure(bell[k]).op();
    return two_qubit_state(0.5 * (m + m.adjoint()));
}

two_qubit_state random_product(random::engine& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const op2 a = 0.5 * (op2::identity() + u(rng) * pauli::along(random::unit_vector(rng)));
    const op2 b = 0.5 * (op2::identity() + u(rng) * pauli::along(random::unit_vector(rng)));
    return two_qubit_state(tensor(a, b));
}

} // namespace

TEST(PureStateEntanglement, Values) {
    EXPECT_NEAR(pure_state_entanglement(0.5), 1.0, tol);
    EXPECT_EQ(pure_state_entanglement(0.0), 0.0);
    EXPECT_EQ(pure_state_entanglement(1.0), 0.0);
    EXPECT_NEAR(pure_state_entanglement(0.110027864438), 0.5, 1e-11);
    EXPECT_THROW(pure_state_entanglement(1.2), out_of_range);
}

TEST(PureStateEntanglement, EqualsLocalEntropy) {
    for (double a2 : {0.05, 0.2, 0.37, 0.5}) {
        const auto rho = states::pure_01_10(a2);
        EXPECT_NEAR(von_neumann_entropy(partial_trace(rho.op(), side::bob)), pure_state_entanglement(a2), 1e-12);
    }
}

TEST(Negativity, Values) {
    EXPECT_NEAR(negativity(states::psi_plus()), 0.5, tol);
    EXPECT_NEAR(negativity(states::werner(1.0 / 3.0)), 0.0, tol);
    EXPECT_NEAR(negativity(states::maximally_mixed()), 0.0, tol);
    // Werner: the PT spectrum has one eigenvalue (1 - 3p)/4
    EXPECT_NEAR(negativity(states::werner(0.6)), (3 * 0.6 - 1) / 4, tol);
}

TEST(VonNeumannEntropy, Values) {
    EXPECT_NEAR(von_neumann_entropy(0.5 * op2::identity()), 1.0, tol);
    EXPECT_NEAR(von_neumann_entropy(states::psi_plus()), 0.0, 1e-12);
    for (double p : {0.0, 0.2, 0.5, 0.9}) {
        const double big = (1 + 3 * p) / 4;
        const double small = (1 - p) / 4;
        double want = -big * std::log2(big);
        if (small > 0) want -= 3 * small * std::log2(small);
        EXPECT_NEAR(von_neumann_entropy(states::werner(p)), want, 1e-11) << p;
    }
    EXPECT_NEAR(von_neumann_entropy(states::maximally_mixed()), 2.0, tol);
}

TEST(VonNeumannEntropy, LocalUnitaryInvariance) {
    random::engine rng(101);
    for (int k = 0; k < 200; ++k) {
        const auto rho = random::density(rng);
        const op4 u = tensor(random::qubit_unitary(rng), random::qubit_unitary(rng));
        const op4 rotated = u * rho.op() * u.adjoint();
        EXPECT_NEAR(von_neumann_entropy(two_qubit_state(0.5 * (rotated + rotated.adjoint()))),
                    von_neumann_entropy(rho), 1e-10);
    }
}

TEST(Discord, ProductStateHasNone) {
    random::engine rng(103);
    for (int k = 0; k < 20; ++k) {
        const auto d = discord(random_product(rng));
        EXPECT_NEAR(d.discord, 0.0, 1e-8);
        EXPECT_NEAR(d.mutual_information, 0.0, 1e-10);
    }
}

TEST(Discord, BellStateHasOneBit) {
    const auto closed = discord(states::psi_plus());
    EXPECT_EQ(closed.method, discord_method::closed_form);
    EXPECT_NEAR(closed.discord, 1.0, 1e-10);
    EXPECT_NEAR(closed.mutual_information, 2.0, 1e-10);
    const auto numeric = discord_numeric(states::psi_plus());
    EXPECT_NEAR(numeric.discord, 1.0, 1e-8);
}

TEST(Discord, UnbalancedPureStateEqualsEntanglement) {
    for (double a2 : {0.1, 0.3}) {
        const auto d = discord(states::pure_01_10(a2));
        EXPECT_EQ(d.method, discord_method::numeric);
        EXPECT_NEAR(d.discord, pure_state_entanglement(a2), 1e-8);
    }
}

TEST(Discord, WernerClosedFormValue) {
    // Werner p: C = h((1+p)/2) complement, I from the spectrum
    const double p = 0.4;
    const auto d = discord(states::werner(p));
    const double big = (1 + 3 * p) / 4, small = (1 - p) / 4;
    const double mi = 2 + big * std::log2(big) + 3 * small * std::log2(small);
    const double cc = 1 - oracle::h2((1 + p) / 2);
    EXPECT_NEAR(d.mutual_information, mi, 1e-12);
    EXPECT_NEAR(d.classical_correlation, cc, 1e-12);
    EXPECT_NEAR(d.discord, mi - cc, 1e-12);
}

TEST(Discord, ClosedFormMatchesNumericOnBellDiagonal) {
    random::engine rng(107);
    for (int k = 0; k < 100; ++k) {
        const auto rho = random_bell_diagonal(rng);
        const auto closed = discord_bell_diagonal(rho);
        const auto numeric = discord_numeric(rho);
        ASSERT_NEAR(closed.discord, numeric.discord, 1e-6) << k;
        ASSERT_NEAR(closed.classical_correlation, numeric.classical_correlation, 1e-6) << k;
    }
}

TEST(Discord, ClosedFormRejectsGeneralStates) {
    EXPECT_THROW(discord_bell_diagonal(states::pure_01_10(0.2)), invalid_state);
}

TEST(Discord, NonNegativeOnRandomStates) {
    random::engine rng(109);
    for (int k = 0; k < 200; ++k) {
        const auto d = discord(random::density(rng));
        ASSERT_GE(d.discord, -1e-8);
        ASSERT_GE(d.classical_correlation, -1e-8);
        ASSERT_NEAR(d.discord, d.mutual_information - d.classical_correlation, 1e-8);
        const double len = std::hypot(d.best_direction[0], d.best_direction[1], d.best_direction[2]);
        ASSERT_NEAR(len, 1.0, 1e-12);
    }
}

TEST(Discord, SeparableMixturesNonNegative) {
    for (const auto& rho : separable_sampler(30, 5)) EXPECT_GE(discord(rho).discord, -1e-8);
}

TEST(Discord, AliceSideMatchesOnSymmetricState) {
    const auto rho = cascade_final_state(0.5, final_convention::all_threshold);
    EXPECT_NEAR(discord_numeric(rho, side::alice).discord, discord_numeric(rho, side::bob).discord, 1e-8);
}

TEST(CascadeNegativity, DecreasesToZero) {
    const auto rep = max_bobs_unequal(0.5);
    op4 rho = states::psi_plus().op();
    double prev = negativity(states::psi_plus());
    for (std::size_t k = 0; k < rep.thresholds.size(); ++k) {
        rho = averaged_channel(rho, rep.thresholds[k]);
        const double n = negativity(two_qubit_state(rho));
        EXPECT_LT(n, prev);
        if (k + 1 < rep.thresholds.size()) {
            EXPECT_GT(n, 0.0);
        }
        prev = n;
    }
    EXPECT_NEAR(prev, 0.0, 1e-10);
}

TEST(CascadeDiscord, FinalStateConventions) {
    // frozen from the Bell-diagonal closed form with p = product of shrink factors
    const auto all = cascade_final_state(0.5, final_convention::all_threshold);
    const auto last = cascade_final_state(0.5, final_convention::last_sharp);
    const auto alice = cascade_final_state(0.5, final_convention::post_alice);
    EXPECT_NEAR(all.pauli().t[0][0], 0.296091160787, 1e-12);
    EXPECT_NEAR(discord(all).discord, 0.101301865258, 1e-10);
    EXPECT_NEAR(discord(last).discord, 0.023961042056, 1e-10);
    EXPECT_NEAR(discord(alice).discord, 0.012860729880, 1e-10);
    for (const auto* s : {&all, &last, &alice}) {
        EXPECT_NEAR(negativity(*s), 0.0, 1e-10);
        EXPECT_GT(discord(*s).discord, 0.005);
    }
}
