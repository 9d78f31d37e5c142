#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quasisep/dense.hpp"
#include "quasisep/separability.hpp"
#include "test_util.hpp"

using namespace quasisep;
using quasisep::testing::random_params;

namespace {

const JCParams kBalanced = derive_params(1.0, 1.0, Complex{1.0, 0.0});

bool has_witness(const SeparabilityVerdict& verdict, int m, int n) {
    for (const auto& [wm, wn] : verdict.witnesses) {
        if (wm == m && wn == n) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("projected product with the all-pass constraint") {
    const Constraint constraint = all_pass_constraint(2, 2);
    const std::vector<Complex> x{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    const std::vector<Complex> y{Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    const StateVector state = projected_product(x, y, constraint);
    CHECK(state.term_count() == 1);
    CHECK(std::abs(state.amplitude({0, 1}) - 1.0) < 1e-14);
}

TEST_CASE("angular momentum constraint") {
    const Constraint constraint = angular_momentum_constraint(1.0);
    CHECK(constraint.left_dim == 2);   // j = 0, 1
    CHECK(constraint.right_dim == 3);  // m = -1, 0, 1

    // (j, m) = (1, 1) kept; (0, 1) dropped
    CHECK(constraint.keep(1, 2));
    CHECK_FALSE(constraint.keep(0, 2));
    CHECK(constraint.keep(0, 1));  // (0, 0)

    SUBCASE("projection of local states reproduces the four-ket example") {
        const double sx = 1.0 / std::sqrt(2.0);
        const double sy = 1.0 / std::sqrt(3.0);
        const std::vector<Complex> x{Complex{sx, 0.0}, Complex{sx, 0.0}};
        const std::vector<Complex> y{Complex{sy, 0.0}, Complex{sy, 0.0},
                                     Complex{sy, 0.0}};
        const StateVector state = projected_product(x, y, constraint);
        CHECK(state.term_count() == 4);
        for (const Ket& ket : {Ket{0, 1}, Ket{1, 0}, Ket{1, 1}, Ket{1, 2}}) {
            CHECK(std::abs(state.amplitude(ket) - 0.5) < 1e-14);
        }
    }

    SUBCASE("the projector is idempotent") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> uniform(-1.0, 1.0);
        StateVector state({ModeSpec::bosonic(1), ModeSpec::bosonic(2)});
        for (int i = 0; i <= 1; ++i) {
            for (int k = 0; k <= 2; ++k) {
                state.set_amplitude({i, k}, Complex{uniform(rng), uniform(rng)});
            }
        }
        const StateVector once = apply_constraint(state, constraint);
        const StateVector twice = apply_constraint(once, constraint);
        CHECK(distance(once, twice) == 0.0);
    }

    SUBCASE("projection annihilating the product is an error") {
        const std::vector<Complex> x{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
        const std::vector<Complex> y{Complex{1.0, 0.0}, Complex{0.0, 0.0},
                                     Complex{1.0, 0.0}};
        // only (0, 1) survives the constraint, where y vanishes
        CHECK_THROWS_AS(
            projected_product(
                x, y,
                Constraint{2, 3,
                           [](int i, int k) { return i == 0 && k == 1; }}),
            std::domain_error);
    }
}

TEST_CASE("fixed-N test certifies every product state") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const JCParams p = random_params(rng);
        for (int total = 1; total <= 12; ++total) {
            for (int m = 0; m <= total; ++m) {
                const SeparabilityVerdict verdict =
                    separability_fixed_N(product_state_pm(m, total - m, p), p);
                CHECK(verdict.status == SepStatus::Separable);
                CHECK(has_witness(verdict, m, total - m));
                CHECK(verdict.residual < 1e-9);
            }
        }
    }
}

TEST_CASE("fixed-N test on NOON combinations") {
    // coefficients matching Eq.-(22)-style decomposition for (m,n) = (3,2)
    const JCParams p = derive_params(1.7, 0.9, Complex{0.6, -0.4});
    const auto [c_n0, c_0n] = noon_coefficients(3, 2, p);
    const StateVector noon =
        (Complex{c_n0, 0.0} * product_state_pm(5, 0, p) +
         Complex{c_0n, 0.0} * product_state_pm(0, 5, p))
            .normalized();
    const SeparabilityVerdict verdict = separability_fixed_N(noon, p);
    CHECK(verdict.status == SepStatus::Separable);
    CHECK(has_witness(verdict, 3, 2));
}

TEST_CASE("fixed-N test flags entangled sector states") {
    const double r = 1.0 / std::sqrt(2.0);
    StateVector state(fb_modes(4));
    state.set_amplitude({0, 2}, Complex{r, 0.0});
    state.set_amplitude({1, 1}, Complex{r, 0.0});
    const SeparabilityVerdict verdict = separability_fixed_N(state, kBalanced);
    CHECK(verdict.status == SepStatus::Entangled);

    // c-only limit: |1, N-1⟩ alone is never of the product form
    StateVector conly(fb_modes(4));
    conly.set_amplitude({1, 2}, Complex{1.0, 0.0});
    CHECK(separability_fixed_N(conly, kBalanced).status ==
          SepStatus::Entangled);

    // |0,4⟩ at delta = 0: m = n = 2 solves m phi² = n beta²
    StateVector pure(fb_modes(8));
    pure.set_amplitude({0, 4}, Complex{1.0, 0.0});
    const SeparabilityVerdict sep = separability_fixed_N(pure, kBalanced);
    CHECK(sep.status == SepStatus::Separable);
    CHECK(has_witness(sep, 2, 2));
}

TEST_CASE("fixed-N test rejects invalid inputs") {
    StateVector multi(fb_modes(4));
    multi.set_amplitude({0, 1}, Complex{1.0, 0.0});
    multi.set_amplitude({0, 2}, Complex{1.0, 0.0});
    CHECK_THROWS_AS(separability_fixed_N(multi, kBalanced),
                    std::invalid_argument);
    CHECK_THROWS_AS(separability_fixed_N(StateVector(fb_modes(4)), kBalanced),
                    std::invalid_argument);
    CHECK_THROWS_AS(separability_fixed_N(vacuum(fb_modes(4)), kBalanced),
                    std::invalid_argument);
}

TEST_CASE("eigenstate factorization conditions") {
    SUBCASE("N = 1 always factorizes in both branches") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 10; ++trial) {
            const auto solutions =
                eigenstate_factorization_conditions(1, random_params(rng));
            bool plus = false, minus = false;
            for (const auto& sol : solutions) {
                plus = plus || sol.branch == Branch::Plus;
                minus = minus || sol.branch == Branch::Minus;
            }
            CHECK(plus);
            CHECK(minus);
        }
    }
    SUBCASE("delta = 0, N = 4 gives m in {3, 1}") {
        const auto solutions =
            eigenstate_factorization_conditions(4, kBalanced);
        REQUIRE(solutions.size() == 2);
        bool m3 = false, m1 = false;
        for (const auto& sol : solutions) {
            m3 = m3 || (sol.m == 3 && sol.n == 1 && sol.branch == Branch::Plus);
            m1 = m1 || (sol.m == 1 && sol.n == 3 && sol.branch == Branch::Minus);
        }
        CHECK(m3);
        CHECK(m1);
    }
    SUBCASE("perfect-square criterion over N = 1..100") {
        for (int N = 1; N <= 100; ++N) {
            const int root = static_cast<int>(std::lround(std::sqrt(N)));
            const bool square = root * root == N;
            CHECK(eigenstate_factorization_conditions(N, kBalanced).empty() !=
                  square);
        }
    }
    SUBCASE("generic detuned parameters give no solutions for N > 1") {
        const JCParams p = derive_params(1.9, 0.6, Complex{0.8, 0.3});
        for (int N = 2; N <= 12; ++N) {
            CHECK(eigenstate_factorization_conditions(N, p).empty());
        }
    }
    SUBCASE("kappa = 0: every sector eigenstate is a product") {
        const JCParams p = derive_params(2.0, 1.0, Complex{0.0, 0.0});
        for (int N = 1; N <= 5; ++N) {
            CHECK_FALSE(eigenstate_factorization_conditions(N, p).empty());
        }
    }
}

TEST_CASE("bilinear solver recovers product states") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3; ++trial) {
        const JCParams p = random_params(rng);
        for (const auto& [m, n] : {std::pair{1, 0}, {0, 2}, {2, 1}, {3, 2}}) {
            const StateVector state = product_state_pm(m, n, p);
            const SeparabilityVerdict verdict =
                separability_bilinear(state, m, n, p);
            CHECK(verdict.status == SepStatus::Separable);
            CHECK(verdict.residual <= 1e-9);
        }
    }
}

TEST_CASE("bilinear solver never certifies entanglement") {
    const StateVector phi3 = eigenstate(3, Branch::Plus, kBalanced);
    const SeparabilityVerdict verdict =
        separability_bilinear(phi3, 3, 3, kBalanced);
    CHECK(verdict.status == SepStatus::Inconclusive);
    CHECK(verdict.residual > 1e-5);
}

TEST_CASE("bilinear solver agrees with the closed-form test") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const JCParams p = random_params(rng);
        const int N = 2 + static_cast<int>(trial % 3);
        StateVector state(fb_modes(default_cutoff(N)));
        if (trial % 2 == 0) {
            const int m = static_cast<int>(rng() % (N + 1));
            state = product_state_pm(m, N - m, p);
        } else {
            state.set_amplitude({0, N}, Complex{uniform(rng), uniform(rng)});
            state.set_amplitude({1, N - 1},
                                Complex{uniform(rng), uniform(rng)});
            state = state.normalized();
        }
        const SeparabilityVerdict closed = separability_fixed_N(state, p);
        const SeparabilityVerdict numeric =
            separability_bilinear(state, N, N, p);
        if (closed.status == SepStatus::Separable) {
            CHECK(numeric.residual <= 1e-9);
        } else {
            CHECK(numeric.residual > 1e-5);
        }
    }
}

TEST_CASE("bilinear solver is deterministic given its seed") {
    const StateVector state = eigenstate(2, Branch::Minus, kBalanced);
    const SeparabilityVerdict a = separability_bilinear(state, 2, 2, kBalanced);
    const SeparabilityVerdict b = separability_bilinear(state, 2, 2, kBalanced);
    CHECK(a.residual == b.residual);
    REQUIRE(a.factor_x.size() == b.factor_x.size());
    for (std::size_t i = 0; i < a.factor_x.size(); ++i) {
        CHECK(a.factor_x[i] == b.factor_x[i]);
    }
}

TEST_CASE("bilinear degree bounds respect the cutoff") {
    const StateVector state = product_state_pm(1, 1, kBalanced, 4);
    CHECK_THROWS_AS(separability_bilinear(state, 3, 3, kBalanced),
                    std::invalid_argument);
}

TEST_CASE("separable mixtures") {
    const Constraint constraint = all_pass_constraint(2, 3);
    const std::vector<Complex> x{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    const std::vector<Complex> y{Complex{0.0, 0.0}, Complex{1.0, 0.0},
                                 Complex{0.0, 0.0}};

    SUBCASE("single component is a pure projected product") {
        const MixedSeparableEnsemble ensemble =
            separable_mixture({{1.0, x, y}}, constraint);
        const Eigen::MatrixXcd rho = ensemble.density_matrix();
        CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
        CHECK((rho * rho - rho).cwiseAbs().maxCoeff() < 1e-12);  // pure
    }

    SUBCASE("equal mixture has unit trace") {
        const std::vector<Complex> x2{Complex{0.0, 0.0}, Complex{1.0, 0.0}};
        const MixedSeparableEnsemble ensemble =
            separable_mixture({{0.5, x, y}, {0.5, x2, y}}, constraint);
        const Eigen::MatrixXcd rho = ensemble.density_matrix();
        CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
    }

    SUBCASE("weights must sum to one") {
        CHECK_THROWS_AS(separable_mixture({{0.7, x, y}, {0.4, x, y}},
                                          constraint),
                        std::invalid_argument);
    }

    SUBCASE("negative weights rejected") {
        CHECK_THROWS_AS(separable_mixture({{1.5, x, y}, {-0.5, x, y}},
                                          constraint),
                        std::invalid_argument);
    }
}

TEST_CASE("mixture of two-quasiparticle products") {
    // equal mixture of |2,0⟩± and |0,2⟩± realized on the FB space directly
    const StateVector a = product_state_pm(2, 0, kBalanced, 2);
    const StateVector b = product_state_pm(0, 2, kBalanced, 2);
    const std::vector<Ket> kets = enumerate_kets(a.modes());
    const Eigen::VectorXcd va = to_dense(a, kets);
    const Eigen::VectorXcd vb = to_dense(b, kets);
    const Eigen::MatrixXcd rho =
        0.5 * (va * va.adjoint()) + 0.5 * (vb * vb.adjoint());
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
}
