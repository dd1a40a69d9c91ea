#include "qco/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qco {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json gate_to_json(const ProjectiveGate& g) {
    const Matrix2& u = g.matrix();
    json rows = json::array();
    for (int r = 0; r < 2; ++r) {
        json row = json::array();
        for (int c = 0; c < 2; ++c) row.push_back({u(r, c).real(), u(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

Matrix2 matrix_from_json(const json& rows) {
    if (!rows.is_array() || rows.size() != 2)
        throw InputError("gate entry must be a 2x2 matrix");
    Matrix2 m;
    for (int r = 0; r < 2; ++r) {
        const json& row = rows.at(static_cast<std::size_t>(r));
        if (!row.is_array() || row.size() != 2) throw InputError("gate row must have 2 entries");
        for (int c = 0; c < 2; ++c) {
            const json& e = row.at(static_cast<std::size_t>(c));
            if (!e.is_array() || e.size() != 2)
                throw InputError("matrix entry must be [re, im]");
            m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return m;
}

json provenance_to_json(const Provenance& p) {
    return {{"kind", p.kind}, {"order", p.order}, {"seed", p.seed}, {"detail", p.detail}};
}

std::string flags_string(const OverheadReport& rep) {
    std::string flags;
    auto add = [&](const char* f) {
        if (!flags.empty()) flags += ';';
        flags += f;
    };
    if (rep.no_gap) add("no_gap");
    if (rep.degenerate_delta) add("degenerate_delta");
    if (!rep.norms_converged) add("norms_not_converged");
    return flags.empty() ? "ok" : flags;
}

json report_to_json_obj(const OverheadReport& rep) {
    json j{{"variant", rep.variant == Variant::QT ? "Q_T" : "Q"},
           {"label", rep.label},
           {"set_size", rep.set_size},
           {"d", rep.d},
           {"t", rep.t},
           {"delta", rep.delta},
           {"q", std::isfinite(rep.q) ? json(rep.q) : json("inf")},
           {"q_opt_bar", rep.q_opt_bar},
           {"delta_opt", rep.delta_opt},
           {"flags", flags_string(rep)}};
    if (rep.epsilon) j["epsilon"] = *rep.epsilon;
    if (rep.ell_vol) j["ell_vol"] = *rep.ell_vol;
    if (rep.ell_delta) j["ell_delta"] = *rep.ell_delta;
    return j;
}

}  // namespace

std::string gateset_to_json(const GateSet& set) {
    json j{{"label", set.label},
           {"provenance", provenance_to_json(set.provenance)}};
    json gates = json::array();
    for (const auto& g : set.gates) gates.push_back(gate_to_json(g));
    j["gates"] = gates;
    return j.dump(2) + "\n";
}

GateSet gateset_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("gate-set JSON parse error: ") + e.what());
    }
    GateSet set;
    set.label = j.value("label", "unnamed");
    if (j.contains("provenance")) {
        const json& p = j["provenance"];
        set.provenance.kind = p.value("kind", "file");
        set.provenance.order = p.value("order", 0);
        set.provenance.seed = p.value("seed", std::uint64_t{0});
        set.provenance.detail = p.value("detail", "");
    } else {
        set.provenance.kind = "file";
    }
    if (!j.contains("gates") || !j["gates"].is_array() || j["gates"].empty())
        throw InputError("gate-set JSON needs a non-empty \"gates\" array");
    for (const auto& g : j["gates"])
        set.gates.push_back(ProjectiveGate::from_matrix(matrix_from_json(g)));
    return set;
}

void save_gateset(const GateSet& set, const std::string& path) {
    write_file(path, gateset_to_json(set));
}

GateSet load_gateset(const std::string& path) {
    return gateset_from_json(read_file(path));
}

std::vector<ProjectiveGate> load_generators(const std::string& path) {
    return load_gateset(path).gates;
}

std::string profile_to_csv(const DeltaProfile& profile) {
    std::ostringstream out;
    out << "s,norm,delta,converged\n";
    for (std::size_t i = 0; i < profile.per_spin_norms.size(); ++i)
        out << (i + 1) << ',' << fmt17(profile.per_spin_norms[i]) << ','
            << fmt17(profile.delta_of_t[i]) << ',' << int(profile.converged[i]) << '\n';
    return out.str();
}

std::string profile_to_json(const DeltaProfile& profile) {
    json j{{"label", profile.label},
           {"seed", profile.seed},
           {"t_max", profile.t_max},
           {"set_size", profile.set_size},
           {"wall_time", profile.wall_time},
           {"per_spin_norms", profile.per_spin_norms},
           {"delta_of_t", profile.delta_of_t},
           {"converged", profile.converged}};
    return j.dump(2) + "\n";
}

std::string report_csv_header() {
    return "variant,label,n,t,delta,q,q_opt_bar,delta_opt,flags\n";
}

std::string report_to_csv_row(const OverheadReport& rep) {
    std::ostringstream out;
    out << (rep.variant == Variant::QT ? "Q_T" : "Q") << ',' << rep.label << ','
        << rep.set_size << ',' << rep.t << ',' << fmt17(rep.delta) << ','
        << (std::isfinite(rep.q) ? fmt17(rep.q) : "inf") << ',' << fmt17(rep.q_opt_bar)
        << ',' << fmt17(rep.delta_opt) << ',' << flags_string(rep) << '\n';
    return out.str();
}

std::string report_to_json(const OverheadReport& rep) {
    return report_to_json_obj(rep).dump(2) + "\n";
}

std::string histogram_to_csv(const Histogram& h) {
    std::ostringstream out;
    out << "bin_left,bin_right,density\n";
    for (std::size_t b = 0; b < h.density.size(); ++b)
        out << fmt17(h.edges[b]) << ',' << fmt17(h.edges[b + 1]) << ','
            << fmt17(h.density[b]) << '\n';
    return out.str();
}

std::string spectrum_to_csv(const SpectrumSample& s) {
    std::ostringstream out;
    out << "value,weight\n";
    for (const auto& [v, w] : s.values) out << fmt17(v) << ',' << fmt17(w) << '\n';
    return out.str();
}

std::string km_to_csv(const KMDensity& km, int points) {
    std::ostringstream out;
    out << "x,density\n";
    for (int i = 0; i < points; ++i) {
        double x = km.support_edge * i / (points - 1);
        out << fmt17(x) << ',' << fmt17(km(x)) << '\n';
    }
    return out.str();
}

std::string sweep_csv_header() {
    // wall times stay in the manifest so reruns are byte-identical
    return "member_index,member_seed,variant,label,n,t,delta,q,q_opt_bar,delta_opt,flags\n";
}

std::string sweep_to_csv(const std::vector<RunResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        if (r.failed) continue;
        for (const auto& rep : r.reports) {
            out << r.member_index << ',' << r.member_seed << ','
                << (rep.variant == Variant::QT ? "Q_T" : "Q") << ',' << rep.label << ','
                << rep.set_size << ',' << rep.t << ',' << fmt17(rep.delta) << ','
                << (std::isfinite(rep.q) ? fmt17(rep.q) : "inf") << ','
                << fmt17(rep.q_opt_bar) << ',' << fmt17(rep.delta_opt) << ','
                << flags_string(rep) << '\n';
        }
    }
    return out.str();
}

std::string sweep_manifest_json(const EnsembleSpec& spec, Variant variant,
                                int shard_index, int shard_total,
                                const std::vector<RunResult>& results) {
    const char* kind = spec.kind == EnsembleKind::Haar ? "haar"
                       : spec.kind == EnsembleKind::GroupCompletion ? "group-completion"
                                                                    : "fixed-completion";
    json members = json::array();
    for (const auto& r : results) {
        json m{{"member_index", r.member_index},
               {"member_seed", r.member_seed},
               {"wall_time", r.wall_time}};
        if (r.failed) m["error"] = r.error;
        members.push_back(m);
    }
    json j{{"tool", "qco"},
           {"version", "0.1.0"},
           {"variant", variant == Variant::QT ? "Q_T" : "Q"},
           {"spec",
            {{"kind", kind},
             {"label", spec.label},
             {"n", spec.n},
             {"order", spec.order},
             {"base_group", spec.base_group.label},
             {"size", spec.size},
             {"seed", spec.seed},
             {"t_list", spec.t_list}}},
           {"shard_index", shard_index},
           {"shard_total", shard_total},
           {"members", members}};
    return j.dump(2) + "\n";
}

std::string search_to_json(const SearchResult& res, bool include_trace) {
    AxisAngle aa = axis_angle(res.best);
    json j{{"q", res.q},
           {"best_gate", gate_to_json(res.best)},
           {"best_axis", {aa.axis[0], aa.axis[1], aa.axis[2]}},
           {"best_angle", aa.angle}};
    if (include_trace) {
        json trace = json::array();
        for (const auto& c : res.trace)
            trace.push_back({{"gate", gate_to_json(c.gate)},
                             {"q", std::isfinite(c.q) ? json(c.q) : json("inf")},
                             {"delta", c.delta}});
        j["trace"] = trace;
    }
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open for writing: " + path);
    out << content;
    if (!out) throw InputError("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qco
