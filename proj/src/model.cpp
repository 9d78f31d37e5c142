#include "quasisep/model.hpp"

#include <cmath>
#include <stdexcept>

namespace quasisep {

JCParams derive_params(double omega_f, double omega_b, Complex kappa) {
    JCParams p;
    p.omega_f = omega_f;
    p.omega_b = omega_b;
    p.kappa = kappa;
    p.Omega = omega_f + omega_b;
    p.delta = omega_f - omega_b;
    const double abs_kappa = std::abs(kappa);
    p.Delta = std::hypot(p.delta, abs_kappa);
    if (p.Delta == 0.0) {
        throw std::invalid_argument(
            "degenerate parameters: delta = 0 and kappa = 0 give Delta = 0");
    }
    p.theta = abs_kappa == 0.0 ? 0.0 : std::arg(kappa);
    p.phi = std::sqrt((p.Delta + p.delta) / (2.0 * p.Delta));
    p.beta = std::sqrt((p.Delta - p.delta) / (2.0 * p.Delta));
    return p;
}

IndexedParams indexed_params(const JCParams& params, int N) {
    if (N < 1) {
        throw std::invalid_argument("sector index N must be positive");
    }
    IndexedParams ip;
    ip.N = N;
    ip.Delta_N =
        std::hypot(params.delta, std::sqrt(static_cast<double>(N)) *
                                     std::abs(params.kappa));
    ip.phi_N = std::sqrt((ip.Delta_N + params.delta) / (2.0 * ip.Delta_N));
    ip.beta_N = std::sqrt((ip.Delta_N - params.delta) / (2.0 * ip.Delta_N));
    return ip;
}

EnergyPair energy_bands(const JCParams& params) {
    return {(params.Omega + params.Delta) / 2.0,
            (params.Omega - params.Delta) / 2.0};
}

std::pair<std::vector<Complex>, std::vector<Complex>> quasiparticle_weights(
    const JCParams& params) {
    const Complex phase{std::cos(params.theta), std::sin(params.theta)};
    std::vector<Complex> plus{Complex{params.phi, 0.0},
                              params.beta * std::conj(phase)};
    std::vector<Complex> minus{-params.beta * phase, Complex{params.phi, 0.0}};
    return {plus, minus};
}

std::vector<ModeSpec> fb_modes(int boson_cutoff) {
    return {ModeSpec::fermionic(), ModeSpec::bosonic(boson_cutoff)};
}

int default_cutoff(int n) { return std::max(2 * n, 8); }

StateVector hamiltonian_apply(const StateVector& state,
                              const JCParams& params) {
    const auto& modes = state.modes();
    if (modes.size() != 2 || modes[0].kind != ModeKind::Fermionic ||
        modes[1].kind != ModeKind::Bosonic) {
        throw std::invalid_argument(
            "hamiltonian_apply expects [fermionic, bosonic] modes");
    }
    // omega_f f†f
    StateVector result =
        Complex{params.omega_f, 0.0} *
        apply_creation(apply_annihilation(state, 0), 0);
    // omega_b b†b
    result += Complex{params.omega_b, 0.0} *
              apply_creation(apply_annihilation(state, 1), 1);
    // (kappa/2) f†b
    result += (params.kappa / 2.0) *
              apply_creation(apply_annihilation(state, 1), 0);
    // (kappa*/2) b†f
    result += (std::conj(params.kappa) / 2.0) *
              apply_creation(apply_annihilation(state, 0), 1);
    return result;
}

StateVector eigenstate(int N, Branch branch, const JCParams& params,
                       int boson_cutoff) {
    if (N < 1) {
        throw std::invalid_argument("eigenstate requires N >= 1");
    }
    if (boson_cutoff < 0) {
        boson_cutoff = default_cutoff(N);
    }
    if (boson_cutoff < N) {
        throw std::invalid_argument("boson cutoff too small for sector N");
    }
    const IndexedParams ip = indexed_params(params, N);
    const Complex phase{std::cos(params.theta), std::sin(params.theta)};
    StateVector state(fb_modes(boson_cutoff));
    if (branch == Branch::Plus) {
        state.set_amplitude({0, N}, Complex{ip.beta_N, 0.0});
        state.set_amplitude({1, N - 1}, ip.phi_N * phase);
    } else {
        state.set_amplitude({0, N}, Complex{ip.phi_N, 0.0});
        state.set_amplitude({1, N - 1}, -ip.beta_N * phase);
    }
    return state;
}

double eigenenergy(int N, Branch branch, const JCParams& params) {
    if (N < 1) {
        throw std::invalid_argument("eigenenergy requires N >= 1");
    }
    const IndexedParams ip = indexed_params(params, N);
    const double sign = branch == Branch::Plus ? 1.0 : -1.0;
    return (N * params.Omega - N * params.delta + params.delta +
            sign * ip.Delta_N) /
           2.0;
}

StateVector product_state_pm(int m, int n, const JCParams& params,
                             int boson_cutoff) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("monomial powers must be nonnegative");
    }
    if (boson_cutoff < 0) {
        boson_cutoff = default_cutoff(m + n);
    }
    if (boson_cutoff < m + n) {
        throw std::invalid_argument("boson cutoff too small for m+n quanta");
    }
    const auto [plus, minus] = quasiparticle_weights(params);
    StateVector state = vacuum(fb_modes(boson_cutoff));
    for (int k = 0; k < n; ++k) {
        state = apply_mixed_creation(state, minus);
    }
    for (int k = 0; k < m; ++k) {
        state = apply_mixed_creation(state, plus);
    }
    if (state.is_zero()) {
        throw std::domain_error("product state vanished");
    }
    return canonical_phase(state.normalized());
}

StateVector product_state_pm_closed_form(int m, int n, const JCParams& params,
                                         int boson_cutoff) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("monomial powers must be nonnegative");
    }
    const int N = m + n;
    if (boson_cutoff < 0) {
        boson_cutoff = default_cutoff(N);
    }
    if (boson_cutoff < N) {
        throw std::invalid_argument("boson cutoff too small for m+n quanta");
    }
    if (N == 0) {
        return vacuum(fb_modes(boson_cutoff));
    }
    const double bp = params.beta * params.phi;
    if (bp <= 0.0) {
        throw std::domain_error(
            "closed form requires beta*phi > 0 (nonzero coupling)");
    }
    const double ratio = (m * params.phi * params.phi -
                          n * params.beta * params.beta) /
                         (bp * std::sqrt(static_cast<double>(N)));
    const Complex phase{std::cos(params.theta), std::sin(params.theta)};
    StateVector state(fb_modes(boson_cutoff));
    state.set_amplitude({0, N}, Complex{1.0, 0.0});
    state.set_amplitude({1, N - 1}, ratio * phase);
    return canonical_phase(state.normalized());
}

std::pair<double, double> noon_coefficients(int m, int n,
                                            const JCParams& params) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument(
            "noon_coefficients requires m >= 1 and n >= 1");
    }
    const double N = m + n;
    const double p2 = params.phi * params.phi;
    const double b2 = params.beta * params.beta;
    const double common = N * p2 * b2;
    const double diff = m * p2 - n * b2;
    const double denom = common + diff * diff;
    const double c_N0 =
        (m / N) * std::sqrt((common + N * N * p2 * p2) / denom);
    const double c_0N =
        (n / N) * std::sqrt((common + N * N * b2 * b2) / denom);
    return {c_N0, c_0N};
}

}  // namespace quasisep
