#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quasisep/compare.hpp"
#include "quasisep/io.hpp"
#include "quasisep/model.hpp"
#include "quasisep/separability.hpp"

using namespace quasisep;

namespace {

std::string fmt(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& table) {
    std::string text;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        text += (c ? "," : "") + table.header[c];
    }
    text += "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            text += (c ? "," : "") + row[c];
        }
        text += "\n";
    }
    return text;
}

std::string to_json_text(const Table& table) {
    Json array = Json::array();
    for (const auto& row : table.rows) {
        Json object = Json::object();
        for (std::size_t c = 0; c < table.header.size(); ++c) {
            object[table.header[c]] = row[c];
        }
        array.push_back(object);
    }
    return array.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    out << text;
}

void emit_table(const Table& table, const std::string& format,
                const std::string& out_path) {
    emit(format == "json" ? to_json_text(table) : to_csv(table), out_path);
}

std::string status_name(SepStatus status) {
    switch (status) {
        case SepStatus::Separable:
            return "separable";
        case SepStatus::Entangled:
            return "entangled";
        case SepStatus::Inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

std::string ket_label(const Ket& ket) {
    std::string label;
    for (std::size_t i = 0; i < ket.size(); ++i) {
        label += (i ? " " : "") + std::to_string(ket[i]);
    }
    return label;
}

struct ParamFlags {
    double omega_f = 1.0;
    double omega_b = 1.0;
    double kappa_re = 1.0;
    double kappa_im = 0.0;

    JCParams derive() const {
        return derive_params(omega_f, omega_b, Complex{kappa_re, kappa_im});
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
    cmd->add_option("--omega-f", flags.omega_f, "fermionic mode frequency");
    cmd->add_option("--omega-b", flags.omega_b, "bosonic mode frequency");
    cmd->add_option("--kappa-re", flags.kappa_re, "Re(kappa)");
    cmd->add_option("--kappa-im", flags.kappa_im, "Im(kappa)");
}

void add_format_flags(CLI::App* cmd, std::string& format,
                      std::string& out_path) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out_path, "output file (default: stdout)");
}

void run_bands(double omega_f, double omega_b, double ratio_min,
               double ratio_max, int steps, const std::string& format,
               const std::string& out_path) {
    const double delta = omega_f - omega_b;
    if (delta == 0.0) {
        throw std::invalid_argument(
            "band sweep needs nonzero detuning (omega-f != omega-b)");
    }
    if (steps < 1 || ratio_max < ratio_min) {
        throw std::invalid_argument("empty band sweep range");
    }
    Table table;
    table.header = {"kappa_over_delta", "E_plus_over_hbar_delta",
                    "E_minus_over_hbar_delta"};
    for (int i = 0; i < steps; ++i) {
        const double ratio =
            steps == 1 ? ratio_min
                       : ratio_min +
                             (ratio_max - ratio_min) * i / (steps - 1.0);
        const JCParams p =
            derive_params(omega_f, omega_b, Complex{ratio * delta, 0.0});
        const EnergyPair bands = energy_bands(p);
        table.rows.push_back(
            {fmt(ratio), fmt(bands.e_plus / delta), fmt(bands.e_minus / delta)});
    }
    emit_table(table, format, out_path);
}

void run_noon_circle(int N, int samples, const ParamFlags& flags, int cutoff,
                     const std::string& format, const std::string& out_path) {
    if (N < 1) {
        throw std::invalid_argument("excitation number must be at least 1");
    }
    if (samples < 1) {
        throw std::invalid_argument("need at least one circle sample");
    }
    const JCParams p = flags.derive();
    if (cutoff < 0) {
        cutoff = default_cutoff(N);
    }
    const StateVector pole_n0 = product_state_pm(N, 0, p, cutoff);
    const StateVector pole_0n = product_state_pm(0, N, p, cutoff);

    Table table;
    table.header = {"sample_kind", "t",         "psi_n0",   "psi_0n",
                    "status",      "witness_m", "witness_n"};
    const auto add_point = [&](const std::string& kind, double t, double a,
                               double b) {
        StateVector state = Complex{a, 0.0} * pole_n0;
        state += Complex{b, 0.0} * pole_0n;
        const SeparabilityVerdict verdict =
            separability_fixed_N(state.normalized(), p);
        std::string witness_m, witness_n;
        if (verdict.status == SepStatus::Separable) {
            witness_m = std::to_string(verdict.witnesses.front().first);
            witness_n = std::to_string(verdict.witnesses.front().second);
        }
        table.rows.push_back({kind, fmt(t), fmt(a), fmt(b),
                              status_name(verdict.status), witness_m,
                              witness_n});
    };

    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * M_PI * i / samples;
        add_point("sample", t, std::cos(t), std::sin(t));
    }
    for (int m = 0; m <= N; ++m) {
        double a = 0.0, b = 0.0;
        if (m == N) {
            a = 1.0;
        } else if (m == 0) {
            b = 1.0;
        } else {
            std::tie(a, b) = noon_coefficients(m, N - m, p);
        }
        add_point("exact", std::atan2(b, a), a, b);
    }
    emit_table(table, format, out_path);
}

void run_expand(const std::string& picture, int m, int n,
                const ParamFlags& flags, int cutoff, const std::string& format,
                const std::string& out_path) {
    StateVector state = [&] {
        if (picture == "fb-quasi") {
            return product_state_pm(m, n, flags.derive(), cutoff);
        }
        const PictureKind kind =
            picture == "ff" ? PictureKind::FF : PictureKind::BB;
        return pm_number_state(kind, m, n, cutoff);
    }();

    Table table;
    table.header = {"picture", "m", "n", "ket", "re", "im"};
    for (const auto& [ket, amp] : state.amplitudes()) {
        table.rows.push_back({picture, std::to_string(m), std::to_string(n),
                              ket_label(ket), fmt(amp.real()),
                              fmt(amp.imag())});
    }
    emit_table(table, format, out_path);
}

int run_separable(const std::string& file, const std::string& method,
                  const ParamFlags& flags, double tol, std::uint64_t seed,
                  int restarts, int left_degree, int right_degree,
                  const std::string& out_path) {
    const StateVector state = load_state(file);
    const JCParams p = flags.derive();

    SeparabilityVerdict verdict;
    if (method == "closed-form") {
        verdict = separability_fixed_N(state, p, tol);
    } else if (method == "condition") {
        const int N = single_sector(state);
        if (N < 1) {
            throw std::invalid_argument(
                "condition method needs a fixed-number sector state");
        }
        const Complex a = state.amplitude(Ket{0, N});
        const Complex c = state.amplitude(Ket{1, N - 1});
        const double norm = std::sqrt(std::norm(a) + std::norm(c));
        const IndexedParams ip = indexed_params(p, N);
        const Complex phase{std::cos(p.theta), std::sin(p.theta)};
        const Complex overlap_plus =
            (std::conj(a) * ip.beta_N + std::conj(c) * ip.phi_N * phase) / norm;
        const Complex overlap_minus =
            (std::conj(a) * ip.phi_N - std::conj(c) * ip.beta_N * phase) / norm;
        Branch branch;
        if (std::abs(overlap_plus) > 1.0 - 1e-8) {
            branch = Branch::Plus;
        } else if (std::abs(overlap_minus) > 1.0 - 1e-8) {
            branch = Branch::Minus;
        } else {
            throw std::invalid_argument(
                "condition method needs a sector eigenstate of the model");
        }
        verdict.method = SepMethod::EigenstateCondition;
        verdict.status = SepStatus::Entangled;
        for (const FactorizationSolution& solution :
             eigenstate_factorization_conditions(N, p, tol)) {
            if (solution.branch == branch) {
                verdict.status = SepStatus::Separable;
                verdict.witnesses.emplace_back(solution.m, solution.n);
            }
        }
    } else {
        int left = left_degree, right = right_degree;
        if (left < 0 || right < 0) {
            const int N = single_sector(state);
            if (N < 0) {
                throw std::invalid_argument(
                    "bilinear method needs explicit factor degrees for "
                    "multi-sector states");
            }
            left = left < 0 ? N : left;
            right = right < 0 ? N : right;
        }
        BilinearOptions options;
        options.tol = tol;
        options.restarts = restarts;
        options.seed = seed;
        verdict = separability_bilinear(state, left, right, p, options);
    }

    emit(verdict_to_json(verdict).dump(2) + "\n", out_path);
    switch (verdict.status) {
        case SepStatus::Separable:
            return 0;
        case SepStatus::Entangled:
            return 1;
        case SepStatus::Inconclusive:
            return 2;
    }
    return 2;
}

void run_eigencheck(int max_N, const ParamFlags& flags,
                    const std::string& format, const std::string& out_path) {
    if (max_N < 1) {
        throw std::invalid_argument("excitation range must reach at least 1");
    }
    const JCParams p = flags.derive();
    Table table;
    table.header = {"N", "branch", "separable", "witness_m", "witness_n"};
    for (int N = 1; N <= max_N; ++N) {
        const auto solutions = eigenstate_factorization_conditions(N, p);
        for (const Branch branch : {Branch::Plus, Branch::Minus}) {
            std::string separable = "0", witness_m, witness_n;
            for (const FactorizationSolution& solution : solutions) {
                if (solution.branch == branch) {
                    separable = "1";
                    witness_m = std::to_string(solution.m);
                    witness_n = std::to_string(solution.n);
                }
            }
            table.rows.push_back({std::to_string(N),
                                  branch == Branch::Plus ? "plus" : "minus",
                                  separable, witness_m, witness_n});
        }
    }
    emit_table(table, format, out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasiparticle state expansion and separability toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // bands
    auto* bands = app.add_subcommand(
        "bands", "energy band sweep over the coupling/detuning ratio");
    auto bands_omega_f = std::make_shared<double>(1.0);
    auto bands_omega_b = std::make_shared<double>(0.0);
    auto bands_min = std::make_shared<double>(0.0);
    auto bands_max = std::make_shared<double>(3.0);
    auto bands_steps = std::make_shared<int>(31);
    auto bands_format = std::make_shared<std::string>("csv");
    auto bands_out = std::make_shared<std::string>();
    bands->add_option("--omega-f", *bands_omega_f, "fermionic mode frequency");
    bands->add_option("--omega-b", *bands_omega_b, "bosonic mode frequency");
    bands->add_option("--ratio-min", *bands_min, "lowest |kappa|/delta");
    bands->add_option("--ratio-max", *bands_max, "highest |kappa|/delta");
    bands->add_option("--steps", *bands_steps, "number of sweep points");
    add_format_flags(bands, *bands_format, *bands_out);
    bands->callback([=] {
        run_bands(*bands_omega_f, *bands_omega_b, *bands_min, *bands_max,
                  *bands_steps, *bands_format, *bands_out);
    });

    // noon-circle
    auto* noon = app.add_subcommand(
        "noon-circle", "separability scan of the two-pole superposition circle");
    auto noon_params = std::make_shared<ParamFlags>();
    auto noon_N = std::make_shared<int>(5);
    auto noon_samples = std::make_shared<int>(360);
    auto noon_cutoff = std::make_shared<int>(-1);
    auto noon_format = std::make_shared<std::string>("csv");
    auto noon_out = std::make_shared<std::string>();
    add_param_flags(noon, *noon_params);
    noon->add_option("--n", *noon_N, "total excitation number");
    noon->add_option("--samples", *noon_samples, "circle sample count");
    noon->add_option("--cutoff", *noon_cutoff, "boson cutoff");
    add_format_flags(noon, *noon_format, *noon_out);
    noon->callback([=] {
        run_noon_circle(*noon_N, *noon_samples, *noon_params, *noon_cutoff,
                        *noon_format, *noon_out);
    });

    // expand
    auto* expand = app.add_subcommand(
        "expand", "expansion of a two-mode product state in the number basis");
    auto expand_params = std::make_shared<ParamFlags>();
    auto expand_picture = std::make_shared<std::string>();
    auto expand_m = std::make_shared<int>(0);
    auto expand_n = std::make_shared<int>(0);
    auto expand_cutoff = std::make_shared<int>(-1);
    auto expand_format = std::make_shared<std::string>("csv");
    auto expand_out = std::make_shared<std::string>();
    expand->add_option("--picture", *expand_picture, "mode picture")
        ->check(CLI::IsMember({"ff", "bb", "fb-quasi"}))
        ->required();
    expand->add_option("--m", *expand_m, "plus-mode occupation")->required();
    expand->add_option("--n", *expand_n, "minus-mode occupation")->required();
    expand->add_option("--cutoff", *expand_cutoff, "boson cutoff");
    add_param_flags(expand, *expand_params);
    add_format_flags(expand, *expand_format, *expand_out);
    expand->callback([=] {
        run_expand(*expand_picture, *expand_m, *expand_n, *expand_params,
                   *expand_cutoff, *expand_format, *expand_out);
    });

    // separable
    auto* separable = app.add_subcommand(
        "separable", "separability verdict for a state file");
    auto sep_params = std::make_shared<ParamFlags>();
    auto sep_file = std::make_shared<std::string>();
    auto sep_method = std::make_shared<std::string>("closed-form");
    auto sep_tol = std::make_shared<double>(1e-9);
    auto sep_seed = std::make_shared<std::uint64_t>(20240915);
    auto sep_restarts = std::make_shared<int>(32);
    auto sep_m = std::make_shared<int>(-1);
    auto sep_n = std::make_shared<int>(-1);
    auto sep_out = std::make_shared<std::string>();
    separable->add_option("file", *sep_file, "JSON state file")->required();
    separable->add_option("--method", *sep_method, "decision method")
        ->check(CLI::IsMember({"closed-form", "condition", "bilinear"}));
    add_param_flags(separable, *sep_params);
    separable->add_option("--tol", *sep_tol, "acceptance tolerance");
    separable->add_option("--seed", *sep_seed, "solver seed")
        ->envname("QUASISEP_SEED");
    separable->add_option("--restarts", *sep_restarts, "solver restarts");
    separable->add_option("--m", *sep_m, "bilinear plus-factor degree");
    separable->add_option("--n", *sep_n, "bilinear minus-factor degree");
    separable->add_option("--out", *sep_out, "output file (default: stdout)");
    separable->callback([=, &exit_code] {
        exit_code = run_separable(*sep_file, *sep_method, *sep_params,
                                  *sep_tol, *sep_seed, *sep_restarts, *sep_m,
                                  *sep_n, *sep_out);
    });

    // eigencheck
    auto* eigencheck = app.add_subcommand(
        "eigencheck", "factorization conditions for sector eigenstates");
    auto eig_params = std::make_shared<ParamFlags>();
    auto eig_N = std::make_shared<int>(20);
    auto eig_format = std::make_shared<std::string>("csv");
    auto eig_out = std::make_shared<std::string>();
    add_param_flags(eigencheck, *eig_params);
    eigencheck->add_option("--n", *eig_N, "highest excitation number");
    add_format_flags(eigencheck, *eig_format, *eig_out);
    eigencheck->callback([=] {
        run_eigencheck(*eig_N, *eig_params, *eig_format, *eig_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
