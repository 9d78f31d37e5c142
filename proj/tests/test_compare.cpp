#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quasisep/compare.hpp"
#include "test_util.hpp"

using namespace quasisep;
using quasisep::testing::random_params;

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
}

TEST_CASE("balanced ± weights per picture") {
    for (PictureKind kind : {PictureKind::FF, PictureKind::BB}) {
        const auto [plus, minus] = plus_minus_modes(kind);
        CHECK(std::abs(plus[0] - kInvSqrt2) < 1e-15);
        CHECK(std::abs(plus[1] - kInvSqrt2) < 1e-15);
        CHECK(std::abs(minus[0] - kInvSqrt2) < 1e-15);
        CHECK(std::abs(minus[1] + kInvSqrt2) < 1e-15);
    }
    // the quasiparticle weights at delta = 0 are balanced too
    const auto [plus, minus] = plus_minus_modes(PictureKind::FBQuasi);
    CHECK(std::abs(plus[0] - kInvSqrt2) < 1e-12);
    CHECK(std::abs(plus[1] - kInvSqrt2) < 1e-12);
    CHECK(std::abs(minus[0] + kInvSqrt2) < 1e-12);
    CHECK(std::abs(minus[1] - kInvSqrt2) < 1e-12);
}

TEST_CASE("two-fermion ± number states") {
    SUBCASE("single excitations are the symmetric/antisymmetric pair") {
        const StateVector sym = pm_number_state(PictureKind::FF, 1, 0);
        CHECK(std::abs(sym.amplitude({0, 1}) - kInvSqrt2) < 1e-14);
        CHECK(std::abs(sym.amplitude({1, 0}) - kInvSqrt2) < 1e-14);

        const StateVector anti = pm_number_state(PictureKind::FF, 0, 1);
        CHECK(std::abs(anti.amplitude({0, 1}) - kInvSqrt2) < 1e-14);
        CHECK(std::abs(anti.amplitude({1, 0}) + kInvSqrt2) < 1e-14);
    }

    SUBCASE("double excitation collapses to the doubly occupied ket") {
        const StateVector full = pm_number_state(PictureKind::FF, 1, 1);
        CHECK(full.term_count() == 1);
        CHECK(std::abs(full.amplitude({1, 1}) - 1.0) < 1e-14);
    }

    SUBCASE("more than one quantum per ± mode is rejected") {
        CHECK_THROWS_AS(pm_number_state(PictureKind::FF, 2, 0),
                        std::invalid_argument);
        CHECK_THROWS_AS(pm_number_state(PictureKind::FF, 1, 2),
                        std::invalid_argument);
    }
}

TEST_CASE("two-boson beamsplitter coefficients") {
    SUBCASE("(1,1)") {
        const std::vector<double> c = bb_beamsplitter_coeffs(1, 1);
        REQUIRE(c.size() == 3);
        CHECK(std::abs(c[0] - kInvSqrt2) < 1e-14);
        CHECK(std::abs(c[1]) < 1e-14);
        CHECK(std::abs(c[2] + kInvSqrt2) < 1e-14);
    }

    SUBCASE("(2,0)") {
        const std::vector<double> c = bb_beamsplitter_coeffs(2, 0);
        REQUIRE(c.size() == 3);
        CHECK(std::abs(c[0] - 0.5) < 1e-14);
        CHECK(std::abs(c[1] - kInvSqrt2) < 1e-14);
        CHECK(std::abs(c[2] - 0.5) < 1e-14);
    }

    SUBCASE("coefficients are normalized for every (m, n)") {
        for (int m = 0; m <= 4; ++m) {
            for (int n = 0; n <= 4 - m; ++n) {
                if (m + n == 0) {
                    continue;
                }
                double sum = 0.0;
                for (double q : bb_beamsplitter_coeffs(m, n)) {
                    sum += q * q;
                }
                CHECK(std::abs(sum - 1.0) < 1e-12);
            }
        }
    }
}

TEST_CASE("orthogonality differs between pictures") {
    // bosonic ± modes are independent: same-sector number states are
    // orthogonal
    for (int m = 0; m <= 3; ++m) {
        for (int mp = m + 1; mp <= 3; ++mp) {
            const StateVector a = pm_number_state(PictureKind::BB, m, 3 - m);
            const StateVector b = pm_number_state(PictureKind::BB, mp, 3 - mp);
            CHECK(std::abs(inner_product(a, b)) < 1e-12);
        }
    }
    // the quasiparticle sector N = 3 is two dimensional, so its four ±
    // products cannot be mutually orthogonal
    const auto fb = [](int m) {
        return pm_number_state(PictureKind::FBQuasi, m, 3 - m);
    };
    CHECK(std::abs(inner_product(fb(3), fb(2))) > 1e-3);
    CHECK(std::abs(inner_product(fb(1), fb(0))) > 1e-3);
    CHECK(std::abs(inner_product(fb(3), fb(0))) > 1e-3);
    // while the two cross-branch pairs happen to be orthogonal at delta = 0
    CHECK(std::abs(inner_product(fb(3), fb(1))) < 1e-12);
    CHECK(std::abs(inner_product(fb(2), fb(0))) < 1e-12);
}

TEST_CASE("single-quantum states agree across all three pictures") {
    for (const auto& [m, n] : {std::pair{1, 0}, {0, 1}}) {
        const StateVector ff = pm_number_state(PictureKind::FF, m, n);
        const StateVector bb = pm_number_state(PictureKind::BB, m, n);
        const StateVector fb = pm_number_state(PictureKind::FBQuasi, m, n);
        for (const Ket& ket : {Ket{0, 1}, Ket{1, 0}}) {
            const Complex reference = ff.amplitude(ket);
            CHECK(std::abs(bb.amplitude(ket) - reference) < 1e-12);
            CHECK(std::abs(fb.amplitude(ket) - reference) < 1e-12);
        }
    }
}

TEST_CASE("truncation constraint") {
    const Constraint constraint = truncation_constraint(4, 4);
    CHECK(constraint.left_dim == 5);
    CHECK(constraint.right_dim == 5);
    CHECK(constraint.keep(0, 4));
    CHECK(constraint.keep(1, 0));
    CHECK_FALSE(constraint.keep(2, 0));
    CHECK_FALSE(constraint.keep(4, 3));

    SUBCASE("projector is idempotent on random two-boson states") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> uniform(-1.0, 1.0);
        StateVector state({ModeSpec::bosonic(4), ModeSpec::bosonic(4)});
        for (int i = 0; i <= 4; ++i) {
            for (int k = 0; k <= 4; ++k) {
                state.set_amplitude({i, k}, Complex{uniform(rng), uniform(rng)});
            }
        }
        const StateVector once = apply_constraint(state, constraint);
        const StateVector twice = apply_constraint(once, constraint);
        CHECK(distance(once, twice) == 0.0);
        for (const auto& [ket, amp] : once.amplitudes()) {
            CHECK(ket[0] <= 1);
        }
    }
}

TEST_CASE("restricted-boson product matches the quasiparticle product") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 6; ++trial) {
        const JCParams p = random_params(rng);
        for (int total = 0; total <= 5; ++total) {
            for (int m = 0; m <= total; ++m) {
                CHECK(verify_projection_identity(m, total - m, p) < 1e-12);
            }
        }
    }
}

TEST_CASE("projection identity at explicit cutoffs") {
    const JCParams p = derive_params(1.4, 0.8, Complex{0.9, 0.5});
    CHECK(verify_projection_identity(2, 3, p, 5) < 1e-12);
    CHECK_THROWS_AS(verify_projection_identity(3, 3, p, 4),
                    std::invalid_argument);
}
