#include "quasisep/compare.hpp"

#include <cmath>
#include <stdexcept>

namespace quasisep {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

std::vector<ModeSpec> picture_modes(PictureKind kind, int cutoff) {
    switch (kind) {
        case PictureKind::FF:
            return {ModeSpec::fermionic(), ModeSpec::fermionic()};
        case PictureKind::BB:
            return {ModeSpec::bosonic(cutoff), ModeSpec::bosonic(cutoff)};
        case PictureKind::FBQuasi:
            return fb_modes(cutoff);
    }
    throw std::invalid_argument("unknown picture kind");
}

}  // namespace

std::pair<std::vector<Complex>, std::vector<Complex>> plus_minus_modes(
    PictureKind kind) {
    if (kind == PictureKind::FBQuasi) {
        // delta = 0, theta = 0 convention of the balanced comparison.
        return quasiparticle_weights(derive_params(1.0, 1.0, Complex{1.0, 0.0}));
    }
    std::vector<Complex> plus{Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}};
    std::vector<Complex> minus{Complex{kInvSqrt2, 0.0},
                               Complex{-kInvSqrt2, 0.0}};
    return {plus, minus};
}

StateVector pm_number_state(PictureKind kind, int m, int n, int cutoff) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("occupations must be nonnegative");
    }
    if (kind == PictureKind::FF && (m > 1 || n > 1)) {
        throw std::invalid_argument(
            "FF picture admits at most one excitation per ± mode");
    }
    if (cutoff < 0) {
        cutoff = default_cutoff(m + n);
    }
    if (kind != PictureKind::FF && cutoff < m + n) {
        throw std::invalid_argument("cutoff too small for m+n quanta");
    }
    const auto [plus, minus] = plus_minus_modes(kind);
    StateVector state = vacuum(picture_modes(kind, cutoff));
    for (int k = 0; k < n; ++k) {
        state = apply_mixed_creation(state, minus);
    }
    for (int k = 0; k < m; ++k) {
        state = apply_mixed_creation(state, plus);
    }
    if (state.is_zero()) {
        throw std::domain_error("± number state vanished");
    }
    return canonical_phase(state.normalized());
}

std::vector<double> bb_beamsplitter_coeffs(int m, int n) {
    const int N = m + n;
    const StateVector state =
        pm_number_state(PictureKind::BB, m, n, std::max(N, 1));
    std::vector<double> coeffs(N + 1, 0.0);
    for (int s = 0; s <= N; ++s) {
        const Complex amp = state.amplitude({s, N - s});
        if (std::abs(amp.imag()) > 1e-12) {
            throw std::logic_error("beamsplitter amplitude is not real");
        }
        coeffs[s] = amp.real();
    }
    return coeffs;
}

Constraint truncation_constraint(int first_cutoff, int second_cutoff) {
    if (first_cutoff < 0 || second_cutoff < 0) {
        throw std::invalid_argument("cutoffs must be nonnegative");
    }
    return {first_cutoff + 1, second_cutoff + 1,
            [](int n1, int) { return n1 <= 1; }};
}

double verify_projection_identity(int m, int n, const JCParams& params,
                                  int cutoff) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("occupations must be nonnegative");
    }
    if (cutoff < 0) {
        cutoff = default_cutoff(m + n);
    }
    if (cutoff < m + n) {
        throw std::invalid_argument("cutoff too small for m+n quanta");
    }
    if (m + n == 0) {
        return 0.0;  // vacuum fixed point
    }

    // |m⟩+ ⊗ |n⟩- in the two-boson picture, using the ± rows of the
    // fermion-boson transform applied to (b1, b2).
    const auto [plus, minus] = quasiparticle_weights(params);
    StateVector bosonic =
        vacuum({ModeSpec::bosonic(cutoff), ModeSpec::bosonic(cutoff)});
    for (int k = 0; k < n; ++k) {
        bosonic = apply_mixed_creation(bosonic, minus);
    }
    for (int k = 0; k < m; ++k) {
        bosonic = apply_mixed_creation(bosonic, plus);
    }

    const StateVector projected =
        apply_constraint(bosonic, truncation_constraint(cutoff, cutoff));
    if (projected.is_zero()) {
        throw std::domain_error("projection annihilates the ± product");
    }

    // Positional relabeling: first mode occupancy (now <= 1) becomes the
    // fermionic mode.
    StateVector mapped(fb_modes(cutoff));
    for (const auto& [ket, amp] : projected.amplitudes()) {
        mapped.set_amplitude(ket, amp);
    }
    const StateVector lhs = canonical_phase(mapped.normalized());
    return distance(lhs, product_state_pm(m, n, params, cutoff));
}

}  // namespace quasisep
