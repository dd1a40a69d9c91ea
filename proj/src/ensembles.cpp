#include "qco/ensembles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

namespace qco {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

void EnsembleSpec::validate() const {
    if (size < 1) throw InputError("ensemble spec: size must be >= 1");
    for (std::size_t i = 0; i + 1 < t_list.size(); ++i)
        if (t_list[i] >= t_list[i + 1])
            throw InputError("ensemble spec: t_list must be strictly increasing");
    for (int t : t_list)
        if (t < 1) throw InputError("ensemble spec: t values must be >= 1");
    if (kind == EnsembleKind::Haar && n < 1)
        throw InputError("ensemble spec: haar kind needs n >= 1");
    if (kind != EnsembleKind::Haar && base_group.gates.empty())
        throw InputError("ensemble spec: completion kinds need a base group");
    if (kind == EnsembleKind::FixedCompletion && !fixed_completion)
        throw InputError("ensemble spec: fixed-completion needs a gate");
    if (order != 0 && order < 2) throw InvalidOrder("ensemble spec: order must be 0 or >= 2");
}

ProjectiveGate member_completion(const EnsembleSpec& spec, int index) {
    if (spec.kind == EnsembleKind::FixedCompletion) return *spec.fixed_completion;
    Rng rng = Rng::stream(spec.seed, static_cast<std::uint64_t>(index), Rng::kMember);
    return spec.order == 0 ? haar_sample(rng) : finite_order_sample(rng, spec.order);
}

GateSet ensemble_member(const EnsembleSpec& spec, int index) {
    spec.validate();
    GateSet out;
    out.provenance.seed = spec.seed;
    out.provenance.order = spec.order;
    out.provenance.detail = "member " + std::to_string(index);
    if (spec.kind == EnsembleKind::Haar) {
        Rng rng = Rng::stream(spec.seed, static_cast<std::uint64_t>(index), Rng::kMember);
        out.label = spec.label.empty() ? "haar" : spec.label;
        out.provenance.kind = "haar";
        out.gates.reserve(static_cast<std::size_t>(spec.n));
        for (int i = 0; i < spec.n; ++i)
            out.gates.push_back(spec.order == 0 ? haar_sample(rng)
                                                : finite_order_sample(rng, spec.order));
        return out;
    }
    out = spec.base_group;
    out.label = spec.label.empty() ? spec.base_group.label + "_completed" : spec.label;
    out.provenance.kind =
        spec.kind == EnsembleKind::FixedCompletion ? "fixed-completion" : "group-completion";
    out.provenance.seed = spec.seed;
    out.provenance.order = spec.order;
    out.gates.push_back(member_completion(spec, index));
    return out;
}

std::vector<GateSet> sample_ensemble(const EnsembleSpec& spec) {
    spec.validate();
    std::vector<GateSet> out;
    out.reserve(static_cast<std::size_t>(spec.size));
    for (int i = 0; i < spec.size; ++i) out.push_back(ensemble_member(spec, i));
    return out;
}

namespace {

OverheadReport report_at(const DeltaProfile& profile, int t, std::size_t numerator,
                         Variant variant) {
    DeltaProfile head = profile;
    head.t_max = t;
    head.per_spin_norms.resize(static_cast<std::size_t>(t));
    head.delta_of_t.resize(static_cast<std::size_t>(t));
    head.converged.resize(static_cast<std::size_t>(t));
    return q_report(head, numerator, variant);
}

RunResult run_member(const EnsembleSpec& spec, Variant variant, int index, int workers) {
    RunResult res;
    res.member_index = index;
    res.member_seed = Rng::stream(spec.seed, static_cast<std::uint64_t>(index),
                                  Rng::kMember).next_u64();
    auto start = std::chrono::steady_clock::now();
    try {
        const int t_max = spec.t_list.back();
        std::size_t numerator;
        GateSet target;
        if (variant == Variant::QT) {
            if (spec.kind == EnsembleKind::Haar)
                throw InputError("Q_T sweep requires a completion kind");
            target = derived_set(spec.base_group, member_completion(spec, index));
            target.label = spec.base_group.label + "_T";
            target.provenance.seed = spec.seed;
            numerator = spec.base_group.gates.size();
        } else {
            target = ensemble_member(spec, index);
            numerator = target.gates.size();
        }
        res.profile = delta_profile(target, t_max, workers);
        for (int t : spec.t_list)
            res.reports.push_back(report_at(res.profile, t, numerator, variant));
    } catch (const std::exception& e) {
        res.failed = true;
        res.error = e.what();
    }
    res.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace

std::vector<RunResult> run_sweep(const EnsembleSpec& spec, Variant variant,
                                 int shard_index, int shard_total, int workers) {
    spec.validate();
    if (spec.t_list.empty()) throw InputError("run_sweep: empty t_list");
    if (shard_total < 1 || shard_index < 0 || shard_index >= shard_total)
        throw InputError("run_sweep: invalid shard");

    std::vector<int> members;
    for (int i = 0; i < spec.size; ++i)
        if (i % shard_total == shard_index) members.push_back(i);

    std::vector<RunResult> out(members.size());
    parallel_for(members.size(), [&](std::size_t k) {
        out[k] = run_member(spec, variant, members[k], 1);
    }, workers);
    return out;
}

Histogram histogram(std::span<const double> values, int bins,
                    std::optional<std::pair<double, double>> range) {
    if (bins < 1) throw InputError("histogram: bins must be >= 1");
    std::vector<double> finite;
    finite.reserve(values.size());
    for (double v : values)
        if (std::isfinite(v)) finite.push_back(v);
    if (finite.empty()) throw EmptyInput("histogram: no finite values");

    double lo, hi;
    if (range) {
        lo = range->first;
        hi = range->second;
        if (!(lo < hi)) throw InputError("histogram: invalid range");
    } else {
        auto [mn, mx] = std::minmax_element(finite.begin(), finite.end());
        lo = *mn;
        hi = *mx;
        if (hi - lo < 1e-12) {  // degenerate sample
            lo -= 0.5;
            hi += 0.5;
        }
    }

    Histogram h;
    h.edges.resize(static_cast<std::size_t>(bins) + 1);
    double width = (hi - lo) / bins;
    for (int b = 0; b <= bins; ++b) h.edges[static_cast<std::size_t>(b)] = lo + b * width;
    h.density.assign(static_cast<std::size_t>(bins), 0.0);

    std::size_t counted = 0;
    for (double v : finite) {
        if (v < lo || v > hi) continue;
        int b = std::min(bins - 1, static_cast<int>((v - lo) / width));
        h.density[static_cast<std::size_t>(b)] += 1.0;
        ++counted;
    }
    if (counted == 0) throw EmptyInput("histogram: no values inside range");
    for (double& d : h.density) d /= static_cast<double>(counted) * width;
    h.sample_count = counted;
    return h;
}

namespace {

// cumulative distribution of a histogram, piecewise linear in x
double hist_cdf(const Histogram& h, double x) {
    if (x <= h.edges.front()) return 0.0;
    if (x >= h.edges.back()) return 1.0;
    double acc = 0.0;
    for (std::size_t b = 0; b < h.density.size(); ++b) {
        double l = h.edges[b], r = h.edges[b + 1];
        if (x >= r) {
            acc += h.density[b] * (r - l);
        } else {
            acc += h.density[b] * (x - l);
            break;
        }
    }
    return std::min(acc, 1.0);
}

}  // namespace

double stabilization_distance(const Histogram& h1, const Histogram& h2) {
    std::vector<double> xs;
    xs.insert(xs.end(), h1.edges.begin(), h1.edges.end());
    xs.insert(xs.end(), h2.edges.begin(), h2.edges.end());
    std::sort(xs.begin(), xs.end());
    double sup = 0.0;
    for (double x : xs) sup = std::max(sup, std::abs(hist_cdf(h1, x) - hist_cdf(h2, x)));
    return sup;
}

namespace {

std::vector<int> coprime_angles(int r) {
    std::vector<int> ks;
    for (int k = 1; 2 * k <= r; ++k)
        if (std::gcd(k, r) == 1) ks.push_back(k);
    return ks;
}

}  // namespace

SearchResult search_best_completion(const GateSet& group, int r, int t, int budget,
                                    SearchStrategy strategy, std::uint64_t seed,
                                    int workers) {
    if (r < 2) throw InvalidOrder("search_best_completion: r must be >= 2");
    if (budget < 1) throw InputError("search_best_completion: budget must be >= 1");

    std::vector<ProjectiveGate> candidates;
    if (strategy == SearchStrategy::Random) {
        for (int j = 0; j < budget; ++j) {
            Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(j), Rng::kSearch);
            candidates.push_back(finite_order_sample(rng, r));
        }
    } else {
        auto ks = coprime_angles(r);
        int axes = std::max<int>(1, budget / static_cast<int>(ks.size()));
        // Fibonacci sphere
        const double golden = kPi * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < axes; ++i) {
            double z = 1.0 - 2.0 * (i + 0.5) / axes;
            double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            double phi = golden * i;
            std::array<double, 3> axis{rho * std::cos(phi), rho * std::sin(phi), z};
            for (int k : ks) candidates.push_back(rotation_gate(axis, 2.0 * kPi * k / r));
        }
    }

    std::vector<SearchCandidate> trace(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t i) {
        SearchCandidate c;
        c.gate = candidates[i];
        try {
            OverheadReport rep = q_t(group, candidates[i], t, {}, 1);
            c.q = rep.q;
            c.delta = rep.delta;
        } catch (const Error&) {
            // e.g. a candidate projectively inside the group
            c.q = std::numeric_limits<double>::infinity();
            c.delta = 1.0;
        }
        trace[i] = c;
    }, workers);

    SearchResult res;
    res.q = std::numeric_limits<double>::infinity();
    for (const auto& c : trace)
        if (c.q < res.q) {
            res.q = c.q;
            res.best = c.gate;
        }
    res.trace = std::move(trace);
    if (!std::isfinite(res.q))
        throw InputError("search_best_completion: no candidate produced a finite Q_T");
    return res;
}

std::pair<SpectrumSample, KMDensity> spectrum_ensemble(const EnsembleSpec& spec, int t,
                                                       Weighting weighting, int workers) {
    spec.validate();
    if (spec.kind == EnsembleKind::Haar && spec.order != 0 && spec.n < 2)
        throw InputError("spectrum_ensemble: haar kind needs n >= 2");

    int km_n = spec.kind == EnsembleKind::Haar
                   ? spec.n
                   : static_cast<int>(spec.base_group.gates.size());

    std::vector<SpectrumSample> samples(static_cast<std::size_t>(spec.size));
    parallel_for(static_cast<std::size_t>(spec.size), [&](std::size_t i) {
        GateSet target;
        if (spec.kind == EnsembleKind::Haar) {
            target = ensemble_member(spec, static_cast<int>(i));
        } else {
            target = derived_set(spec.base_group,
                                 member_completion(spec, static_cast<int>(i)));
        }
        samples[i] = singular_spectrum(target, t, weighting, 1);
    }, workers);

    SpectrumSample agg;
    agg.t = t;
    agg.weighting = weighting;
    double member_weight = 1.0 / spec.size;
    for (const auto& s : samples)
        for (const auto& [v, w] : s.values) agg.values.emplace_back(v, w * member_weight);
    return {std::move(agg), km_overlay(km_n, false)};
}

}  // namespace qco
