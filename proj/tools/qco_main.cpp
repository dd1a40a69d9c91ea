// qco: compute discrepancies, circuit-overhead bounds, ensemble sweeps,
// spectra, and completion searches for single-qubit gate sets.
//
// Exit codes: 0 success (soft conditions like a missing gap are flagged in
// the output itself), 1 usage error, 2 input error, 3 numerical failure.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qco/ensembles.hpp"
#include "qco/io.hpp"

using namespace qco;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Output directory for relative -o paths; QCO_OUT_DIR overrides.
std::string resolve_output(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("QCO_OUT_DIR");
    if (!dir || !*dir) return path;
    std::string d = dir;
    if (d.back() != '/') d += '/';
    return d + path;
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty())
        std::fputs(content.c_str(), stdout);
    else
        write_file(resolve_output(out), content);
}

GateSet named_or_file_group(const std::string& source) {
    if (source == "clifford") return clifford_group();
    if (source == "hurwitz") return hurwitz_group();
    return load_gateset(source);
}

ProjectiveGate completion_gate(const std::string& gate, int order, std::uint64_t seed) {
    if (gate == "p4") return phase_gate(kPi / 4);
    if (gate == "t24") return t24_gate();
    if (gate == "t12") return t12_gate();
    if (!gate.empty()) {
        auto gates = load_generators(gate);
        if (gates.size() != 1)
            throw InputError("completion file must contain exactly one gate");
        return gates[0];
    }
    if (order < 2)
        throw InputError("no completion given: use --gate or --order with --seed");
    Rng rng = Rng::stream(seed, 0, Rng::kMember);
    return finite_order_sample(rng, order);
}

int resolve_t(std::optional<int> t, std::optional<double> epsilon) {
    if (t.has_value() == epsilon.has_value())
        throw CLI::ValidationError("exactly one of --t / --epsilon is required");
    return t ? *t : t_of_eps(*epsilon, 2);
}

struct ShardSpec {
    int index = 0;
    int total = 1;
};

ShardSpec parse_shard(const std::string& text) {
    ShardSpec s;
    if (text.empty()) return s;
    if (std::sscanf(text.c_str(), "%d/%d", &s.index, &s.total) != 2 || s.total < 1 ||
        s.index < 0 || s.index >= s.total)
        throw CLI::ValidationError("--shard expects i/N with 0 <= i < N");
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum circuit overhead bounds for single-qubit gate sets"};
    app.require_subcommand(1);

    // group ----------------------------------------------------------------
    std::string group_source, group_file, group_out;
    int group_cap = 100000;
    auto* cmd_group = app.add_subcommand("group", "generate a finite group closure");
    cmd_group->add_option("name", group_source, "built-in generators: clifford | hurwitz");
    cmd_group->add_option("--file", group_file, "JSON generator file");
    cmd_group->add_option("--cap", group_cap, "closure size cap");
    cmd_group->add_option("-o,--output", group_out, "output gate-set JSON path");

    // delta ----------------------------------------------------------------
    std::string delta_set, delta_out;
    int delta_t = 0, delta_workers = 0;
    auto* cmd_delta = app.add_subcommand("delta", "per-spin norms and running discrepancy");
    cmd_delta->add_option("--set", delta_set, "gate-set JSON file")->required();
    cmd_delta->add_option("--t", delta_t, "largest moment order")->required();
    cmd_delta->add_option("--workers", delta_workers, "worker threads (0 = auto)");
    cmd_delta->add_option("-o,--output", delta_out, "output CSV path");

    // qco ------------------------------------------------------------------
    std::string qco_set, qco_out, qco_format = "csv";
    std::optional<int> qco_t;
    std::optional<double> qco_eps;
    int qco_workers = 0;
    auto* cmd_qco = app.add_subcommand("qco", "overhead bound for a gate-set file");
    cmd_qco->add_option("--set", qco_set, "gate-set JSON file")->required();
    cmd_qco->add_option("--t", qco_t, "moment order");
    cmd_qco->add_option("--epsilon", qco_eps, "target approximation scale");
    cmd_qco->add_option("--format", qco_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_qco->add_option("--workers", qco_workers, "worker threads");
    cmd_qco->add_option("-o,--output", qco_out, "output path");

    // tqco -----------------------------------------------------------------
    std::string tqco_group, tqco_gate, tqco_out, tqco_format = "csv";
    std::optional<int> tqco_t;
    std::optional<double> tqco_eps;
    int tqco_order = 0, tqco_workers = 0;
    std::uint64_t tqco_seed = 0;
    auto* cmd_tqco = app.add_subcommand("tqco", "T-variant bound for a derived set");
    cmd_tqco->add_option("--group", tqco_group, "clifford | hurwitz | gate-set file")
        ->required();
    cmd_tqco->add_option("--gate", tqco_gate, "p4 | t24 | t12 | single-gate file");
    cmd_tqco->add_option("--order", tqco_order, "sample a completion of this order");
    cmd_tqco->add_option("--seed", tqco_seed, "seed for a sampled completion");
    cmd_tqco->add_option("--t", tqco_t, "moment order");
    cmd_tqco->add_option("--epsilon", tqco_eps, "target approximation scale");
    cmd_tqco->add_option("--format", tqco_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_tqco->add_option("--workers", tqco_workers, "worker threads");
    cmd_tqco->add_option("-o,--output", tqco_out, "output path");

    // sweep ----------------------------------------------------------------
    std::string sw_kind = "group-completion", sw_group, sw_gate, sw_variant = "Q_T";
    std::string sw_t_list = "5,50,100", sw_shard, sw_out;
    int sw_n = 0, sw_order = 0, sw_size = 200, sw_workers = 0;
    std::uint64_t sw_seed = 0;
    auto* cmd_sweep = app.add_subcommand("sweep", "ensemble sweep of Q or Q_T");
    cmd_sweep->add_option("--kind", sw_kind, "haar | group-completion | fixed-completion")
        ->check(CLI::IsMember({"haar", "group-completion", "fixed-completion"}));
    cmd_sweep->add_option("--group", sw_group, "base group for completion kinds");
    cmd_sweep->add_option("--gate", sw_gate, "fixed completion gate");
    cmd_sweep->add_option("--n", sw_n, "gates per member (haar kind)");
    cmd_sweep->add_option("--order", sw_order, "completion/gate order (0 = infinite)");
    cmd_sweep->add_option("--size", sw_size, "ensemble size");
    cmd_sweep->add_option("--seed", sw_seed, "ensemble seed");
    cmd_sweep->add_option("--t", sw_t_list, "comma-separated t list");
    cmd_sweep->add_option("--variant", sw_variant, "Q | Q_T")
        ->check(CLI::IsMember({"Q", "Q_T"}));
    cmd_sweep->add_option("--shard", sw_shard, "i/N member subset");
    cmd_sweep->add_option("--workers", sw_workers, "worker threads");
    cmd_sweep->add_option("-o,--output", sw_out,
                          "output prefix (<prefix>.csv, <prefix>.manifest.json)");

    // spectrum -------------------------------------------------------------
    std::string sp_group, sp_weighting = "multiplicity", sp_out;
    int sp_order = 0, sp_size = 20, sp_t = 50, sp_workers = 0, sp_n = 0;
    std::string sp_kind = "group-completion";
    std::uint64_t sp_seed = 0;
    auto* cmd_spectrum =
        app.add_subcommand("spectrum", "ensemble singular spectrum with KM overlay");
    cmd_spectrum->add_option("--kind", sp_kind, "haar | group-completion")
        ->check(CLI::IsMember({"haar", "group-completion"}));
    cmd_spectrum->add_option("--group", sp_group, "base group for completions");
    cmd_spectrum->add_option("--n", sp_n, "gates per member (haar kind)");
    cmd_spectrum->add_option("--order", sp_order, "completion order (0 = infinite)");
    cmd_spectrum->add_option("--size", sp_size, "ensemble size");
    cmd_spectrum->add_option("--seed", sp_seed, "ensemble seed");
    cmd_spectrum->add_option("--t", sp_t, "moment order");
    cmd_spectrum->add_option("--weighting", sp_weighting, "multiplicity | uniform")
        ->check(CLI::IsMember({"multiplicity", "uniform"}));
    cmd_spectrum->add_option("--workers", sp_workers, "worker threads");
    cmd_spectrum->add_option("-o,--output", sp_out,
                             "output prefix (<prefix>.spectrum.csv, <prefix>.km.csv)");

    // search ---------------------------------------------------------------
    std::string se_group, se_strategy = "random", se_out;
    int se_order = 0, se_t = 50, se_budget = 500, se_workers = 0;
    std::uint64_t se_seed = 0;
    bool se_trace = false;
    auto* cmd_search = app.add_subcommand("search", "best completion gate of a given order");
    cmd_search->add_option("--group", se_group, "clifford | hurwitz | gate-set file")
        ->required();
    cmd_search->add_option("--order", se_order, "completion order")->required();
    cmd_search->add_option("--t", se_t, "moment order");
    cmd_search->add_option("--budget", se_budget, "candidate budget");
    cmd_search->add_option("--strategy", se_strategy, "random | axis-grid")
        ->check(CLI::IsMember({"random", "axis-grid"}));
    cmd_search->add_option("--seed", se_seed, "search seed");
    cmd_search->add_option("--workers", se_workers, "worker threads");
    cmd_search->add_flag("--trace", se_trace, "include the full evaluation trace");
    cmd_search->add_option("-o,--output", se_out, "output JSON path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_group->parsed()) {
            GateSet set;
            if (!group_file.empty()) {
                set = group_closure(load_generators(group_file), group_cap,
                                    group_file);
            } else if (group_source == "clifford") {
                set = clifford_group();
            } else if (group_source == "hurwitz") {
                set = hurwitz_group();
            } else {
                throw CLI::ValidationError("group: give clifford, hurwitz, or --file");
            }
            std::printf("%zu elements\n", set.size());
            if (!group_out.empty()) save_gateset(set, resolve_output(group_out));
        } else if (cmd_delta->parsed()) {
            auto set = load_gateset(delta_set);
            auto profile = delta_profile(set, delta_t, delta_workers);
            emit(delta_out, profile_to_csv(profile));
        } else if (cmd_qco->parsed()) {
            auto set = load_gateset(qco_set);
            int t = resolve_t(qco_t, qco_eps);
            auto rep = q_report(set, t, qco_eps, qco_workers);
            emit(qco_out, qco_format == "json"
                              ? report_to_json(rep)
                              : report_csv_header() + report_to_csv_row(rep));
        } else if (cmd_tqco->parsed()) {
            auto group = named_or_file_group(tqco_group);
            auto gate = completion_gate(tqco_gate, tqco_order, tqco_seed);
            int t = resolve_t(tqco_t, tqco_eps);
            auto rep = q_t(group, gate, t, tqco_eps, tqco_workers);
            emit(tqco_out, tqco_format == "json"
                               ? report_to_json(rep)
                               : report_csv_header() + report_to_csv_row(rep));
        } else if (cmd_sweep->parsed()) {
            EnsembleSpec spec;
            spec.seed = sw_seed;
            spec.size = sw_size;
            spec.order = sw_order;
            spec.n = sw_n;
            for (const auto& piece : CLI::detail::split(sw_t_list, ','))
                spec.t_list.push_back(std::stoi(piece));
            if (sw_kind == "haar") {
                spec.kind = EnsembleKind::Haar;
            } else {
                spec.kind = sw_kind == "fixed-completion" ? EnsembleKind::FixedCompletion
                                                          : EnsembleKind::GroupCompletion;
                spec.base_group = named_or_file_group(sw_group);
                if (spec.kind == EnsembleKind::FixedCompletion)
                    spec.fixed_completion = completion_gate(sw_gate, sw_order, sw_seed);
            }
            ShardSpec shard = parse_shard(sw_shard);
            Variant variant = sw_variant == "Q_T" ? Variant::QT : Variant::Q;
            auto results =
                run_sweep(spec, variant, shard.index, shard.total, sw_workers);
            for (const auto& r : results)
                if (r.failed)
                    std::fprintf(stderr, "member %d failed: %s\n", r.member_index,
                                 r.error.c_str());
            if (sw_out.empty()) {
                std::fputs((sweep_csv_header() + sweep_to_csv(results)).c_str(), stdout);
            } else {
                write_file(resolve_output(sw_out) + ".csv",
                           sweep_csv_header() + sweep_to_csv(results));
                write_file(resolve_output(sw_out) + ".manifest.json",
                           sweep_manifest_json(spec, variant, shard.index, shard.total,
                                               results));
            }
        } else if (cmd_spectrum->parsed()) {
            EnsembleSpec spec;
            spec.seed = sp_seed;
            spec.size = sp_size;
            spec.order = sp_order;
            spec.n = sp_n;
            spec.t_list = {sp_t};
            if (sp_kind == "haar") {
                spec.kind = EnsembleKind::Haar;
            } else {
                spec.kind = EnsembleKind::GroupCompletion;
                spec.base_group = named_or_file_group(sp_group);
            }
            Weighting weighting = sp_weighting == "uniform" ? Weighting::Uniform
                                                            : Weighting::Multiplicity;
            auto [sample, km] = spectrum_ensemble(spec, sp_t, weighting, sp_workers);
            if (sp_out.empty()) {
                std::fputs(spectrum_to_csv(sample).c_str(), stdout);
            } else {
                write_file(resolve_output(sp_out) + ".spectrum.csv",
                           spectrum_to_csv(sample));
                write_file(resolve_output(sp_out) + ".km.csv", km_to_csv(km));
            }
        } else if (cmd_search->parsed()) {
            auto group = named_or_file_group(se_group);
            SearchStrategy strategy = se_strategy == "axis-grid" ? SearchStrategy::AxisGrid
                                                                 : SearchStrategy::Random;
            auto res = search_best_completion(group, se_order, se_t, se_budget, strategy,
                                              se_seed, se_workers);
            emit(se_out, search_to_json(res, se_trace));
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    }
    return 0;
}
