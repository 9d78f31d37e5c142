#include "quasisep/io.hpp"

#include <fstream>
#include <stdexcept>

namespace quasisep {

namespace {

std::string kind_name(ModeKind kind) {
    return kind == ModeKind::Fermionic ? "fermionic" : "bosonic";
}

ModeKind kind_from_name(const std::string& name) {
    if (name == "fermionic") {
        return ModeKind::Fermionic;
    }
    if (name == "bosonic") {
        return ModeKind::Bosonic;
    }
    throw std::invalid_argument("unknown mode kind: " + name);
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
    throw std::logic_error("unknown status");
}

std::string method_name(SepMethod method) {
    switch (method) {
        case SepMethod::ClosedFormFixedN:
            return "closed_form_fixed_N";
        case SepMethod::EigenstateCondition:
            return "eigenstate_condition";
        case SepMethod::Bilinear:
            return "bilinear";
    }
    throw std::logic_error("unknown method");
}

}  // namespace

Json state_to_json(const StateVector& state) {
    Json json;
    json["modes"] = Json::array();
    for (const ModeSpec& mode : state.modes()) {
        json["modes"].push_back(
            {{"kind", kind_name(mode.kind)}, {"cutoff", mode.cutoff}});
    }
    json["amplitudes"] = Json::array();
    // std::map iteration already gives lexicographic ket order.
    for (const auto& [ket, amp] : state.amplitudes()) {
        json["amplitudes"].push_back(
            {{"occ", ket}, {"re", amp.real()}, {"im", amp.imag()}});
    }
    return json;
}

StateVector state_from_json(const Json& json) {
    std::vector<ModeSpec> modes;
    for (const Json& entry : json.at("modes")) {
        const ModeKind kind = kind_from_name(entry.at("kind"));
        const int cutoff = entry.at("cutoff");
        modes.push_back(kind == ModeKind::Fermionic
                            ? ModeSpec::fermionic()
                            : ModeSpec::bosonic(cutoff));
        if (kind == ModeKind::Fermionic && cutoff != 1) {
            throw std::invalid_argument("fermionic modes must have cutoff 1");
        }
    }
    StateVector state(modes);
    for (const Json& entry : json.at("amplitudes")) {
        const Ket ket = entry.at("occ").get<Ket>();
        state.validate_ket(ket);  // rejects cutoff violations
        state.set_amplitude(
            ket, Complex{entry.at("re").get<double>(),
                         entry.at("im").get<double>()});
    }
    return state;
}

StateVector load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open state file: " + path);
    }
    Json json;
    in >> json;
    return state_from_json(json);
}

void save_state(const StateVector& state, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write state file: " + path);
    }
    out << state_to_json(state).dump(2) << "\n";
}

Json verdict_to_json(const SeparabilityVerdict& verdict) {
    Json json;
    json["status"] = status_name(verdict.status);
    json["method"] = method_name(verdict.method);
    if (!verdict.witnesses.empty()) {
        json["witness"] = {{"m", verdict.witnesses.front().first},
                           {"n", verdict.witnesses.front().second}};
        if (verdict.witnesses.size() > 1) {
            json["all_witnesses"] = Json::array();
            for (const auto& [m, n] : verdict.witnesses) {
                json["all_witnesses"].push_back({{"m", m}, {"n", n}});
            }
        }
    }
    if (!verdict.factor_x.empty()) {
        Json x = Json::array(), y = Json::array();
        for (const Complex& v : verdict.factor_x) {
            x.push_back({{"re", v.real()}, {"im", v.imag()}});
        }
        for (const Complex& v : verdict.factor_y) {
            y.push_back({{"re", v.real()}, {"im", v.imag()}});
        }
        json["factors"] = {{"x", x}, {"y", y}};
    }
    json["residual"] = verdict.residual;
    return json;
}

Json mode_matrix_to_json(const ModeMatrix& matrix) {
    Json json;
    json["M"] = matrix.mode_pairs();
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < matrix.entries.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < matrix.entries.cols(); ++c) {
            row.push_back({{"re", matrix.entries(r, c).real()},
                           {"im", matrix.entries(r, c).imag()}});
        }
        rows.push_back(row);
    }
    json["rows"] = rows;
    return json;
}

ModeMatrix mode_matrix_from_json(const Json& json) {
    const int m = json.at("M");
    const int dim = 2 * m;
    Eigen::MatrixXcd entries(dim, dim);
    const Json& rows = json.at("rows");
    if (static_cast<int>(rows.size()) != dim) {
        throw std::invalid_argument("mode matrix row count must be 2M");
    }
    for (int r = 0; r < dim; ++r) {
        const Json& row = rows.at(r);
        if (static_cast<int>(row.size()) != dim) {
            throw std::invalid_argument("mode matrix must be square");
        }
        for (int c = 0; c < dim; ++c) {
            entries(r, c) = Complex{row.at(c).at("re").get<double>(),
                                    row.at(c).at("im").get<double>()};
        }
    }
    return ModeMatrix(entries);
}

Json factor_spec_to_json(const FactorSpec& spec) {
    Json json = Json::array();
    for (const auto& factor : spec) {
        Json coeffs = Json::array();
        for (const Complex& v : factor) {
            coeffs.push_back({{"re", v.real()}, {"im", v.imag()}});
        }
        json.push_back(coeffs);
    }
    return json;
}

FactorSpec factor_spec_from_json(const Json& json) {
    FactorSpec spec;
    for (const Json& factor : json) {
        std::vector<Complex> coeffs;
        for (const Json& v : factor) {
            coeffs.emplace_back(v.at("re").get<double>(),
                                v.at("im").get<double>());
        }
        spec.push_back(std::move(coeffs));
    }
    return spec;
}

}  // namespace quasisep
