#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qco/overhead.hpp"

namespace qco {

enum class EnsembleKind { Haar, GroupCompletion, FixedCompletion };

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::Haar;
    int n = 0;                // haar: gates per member
    int order = 0;            // gate order; 0 means infinite
    GateSet base_group;       // completion kinds
    std::optional<ProjectiveGate> fixed_completion;
    int size = 1;             // ensemble members
    std::uint64_t seed = 0;
    std::vector<int> t_list;  // strictly increasing
    std::string label;

    void validate() const;
};

// Member i is drawn from the sub-stream (seed, i, member-tag), so members
// are independent of evaluation order and of each other.
ProjectiveGate member_completion(const EnsembleSpec& spec, int index);
GateSet ensemble_member(const EnsembleSpec& spec, int index);
std::vector<GateSet> sample_ensemble(const EnsembleSpec& spec);

struct RunResult {
    int member_index = 0;
    std::uint64_t member_seed = 0;
    DeltaProfile profile;
    std::vector<OverheadReport> reports;  // one per t in t_list
    double wall_time = 0.0;
    bool failed = false;
    std::string error;
};

// Per member: profile to max(t_list) and a report per listed t. Members
// evaluated independently; output ordered by member_index regardless of
// completion order. --shard style subsetting keeps i % shard_total == shard_index.
std::vector<RunResult> run_sweep(const EnsembleSpec& spec, Variant variant,
                                 int shard_index = 0, int shard_total = 1,
                                 int workers = 0);

struct Histogram {
    std::vector<double> edges;    // bins + 1, uniform
    std::vector<double> density;  // per-bin probability density
    std::size_t sample_count = 0;
};

Histogram histogram(std::span<const double> values, int bins,
                    std::optional<std::pair<double, double>> range = {});

// Sup-norm distance between the cumulative distributions reconstructed from
// two histograms (Kolmogorov-Smirnov style), in [0, 1].
double stabilization_distance(const Histogram& h1, const Histogram& h2);

enum class SearchStrategy { Random, AxisGrid };

struct SearchCandidate {
    ProjectiveGate gate;
    double q = 0.0;
    double delta = 0.0;
};

struct SearchResult {
    ProjectiveGate best;
    double q = 0.0;
    std::vector<SearchCandidate> trace;
};

// Minimizes q_t(C, T, t) over completion gates of order r. "random" draws
// `budget` candidates; "axis-grid" sweeps a Fibonacci-sphere axis grid
// (budget / #coprime-angles axes) crossed with all angles 2 pi k / r,
// gcd(k, r) = 1, k <= r/2.
SearchResult search_best_completion(const GateSet& group, int r, int t, int budget,
                                    SearchStrategy strategy, std::uint64_t seed,
                                    int workers = 0);

// Aggregated singular-value sample over ensemble members (equal member
// weight) plus the matching one-sided Kesten-McKay overlay.
std::pair<SpectrumSample, KMDensity> spectrum_ensemble(const EnsembleSpec& spec, int t,
                                                       Weighting weighting,
                                                       int workers = 0);

}  // namespace qco
