#include "qco/overhead.hpp"

#include <cmath>
#include <limits>

namespace qco {

double delta_opt(int n) {
    if (n < 2) throw InvalidSize("delta_opt: need n >= 2");
    return 2.0 * std::sqrt(n - 1.0) / n;
}

double q_value(int n, double delta) {
    if (n < 2) throw InvalidSize("q_value: need n >= 2");
    if (delta >= 1.0) throw NoGapAtScale("q_value: delta >= 1, no contraction at this scale");
    if (delta <= 0.0) throw DegenerateDelta("q_value: delta <= 0");
    return std::log(static_cast<double>(n)) / std::log(1.0 / delta);
}

double q_opt_bar(int n) {
    if (n == 2) throw Divergent("q_opt_bar: diverges at n = 2 (delta_opt = 1)");
    if (n < 2) throw InvalidSize("q_opt_bar: need n >= 3");
    return q_value(n, delta_opt(n));
}

int t_of_eps(double epsilon, int d) {
    if (epsilon <= 0.0 || epsilon > 1.0) throw InputError("t_of_eps: need 0 < epsilon <= 1");
    if (d < 2) throw InvalidSize("t_of_eps: need d >= 2");
    return static_cast<int>(std::ceil(std::pow(static_cast<double>(d), 2.5) / epsilon));
}

double ell_vol(int n, double epsilon, int d) {
    if (n < 2) throw InvalidSize("ell_vol: need n >= 2");
    if (epsilon <= 0.0) throw InputError("ell_vol: need epsilon > 0");
    if (kBallVolumeUpper * epsilon >= 1.0)
        throw EpsilonTooLarge("ell_vol: A_v * epsilon >= 1, bound is vacuous");
    double dd = static_cast<double>(d) * d - 1.0;
    return dd * std::log(1.0 / (kBallVolumeUpper * epsilon)) / std::log(static_cast<double>(n));
}

double ell_delta(double delta, double epsilon, int d) {
    if (delta >= 1.0) throw NoGapAtScale("ell_delta: delta >= 1");
    if (delta <= 0.0) throw DegenerateDelta("ell_delta: delta <= 0");
    if (epsilon <= 0.0 || epsilon >= 1.0) throw InputError("ell_delta: need 0 < epsilon < 1");
    double dd = static_cast<double>(d) * d - 1.0;
    return dd * std::log(1.0 / epsilon) / std::log(1.0 / delta);
}

double ell_delta_asymptotic(double delta, double epsilon, int d) {
    if (delta >= 1.0) throw NoGapAtScale("ell_delta_asymptotic: delta >= 1");
    if (delta <= 0.0) throw DegenerateDelta("ell_delta_asymptotic: delta <= 0");
    if (epsilon <= 0.0) throw InputError("ell_delta_asymptotic: need epsilon > 0");
    double dd = static_cast<double>(d) * d - 1.0;
    return dd * std::log(2.0 / (kBallVolumeUpper * epsilon)) / std::log(1.0 / delta);
}

double km_density(double x, int n, bool symmetric) {
    if (n < 3) throw InvalidSize("km_density: need n >= 3");
    double edge = delta_opt(n);
    constexpr double pi = 3.141592653589793238462643383279502884;
    if (symmetric) {
        if (x < -edge || x > edge) return 0.0;
        return n * std::sqrt(edge * edge - x * x) / (2.0 * pi * (1.0 - x * x));
    }
    if (x < 0.0 || x > edge) return 0.0;
    return n * std::sqrt(edge * edge - x * x) / (pi * (1.0 - x * x));
}

KMDensity km_overlay(int n, bool symmetric) {
    return {n, symmetric, delta_opt(n)};
}

namespace {

void fill_closed_forms(OverheadReport& rep) {
    const int n = static_cast<int>(rep.set_size);
    rep.delta_opt = delta_opt(n);
    rep.q_opt_bar = n > 2 ? q_opt_bar(n) : std::numeric_limits<double>::infinity();
    if (rep.delta >= 1.0) {
        rep.no_gap = true;
        rep.q = std::numeric_limits<double>::infinity();
    } else if (rep.delta <= 0.0) {
        rep.degenerate_delta = true;
        rep.q = q_value(n, std::numeric_limits<double>::min());
    } else {
        rep.q = q_value(n, rep.delta);
    }
    if (rep.epsilon) {
        double eps = *rep.epsilon;
        if (kBallVolumeUpper * eps < 1.0) rep.ell_vol = ell_vol(n, eps, rep.d);
        if (!rep.no_gap && !rep.degenerate_delta && eps < 1.0)
            rep.ell_delta = ell_delta(rep.delta, eps, rep.d);
    }
}

}  // namespace

OverheadReport q_report(const DeltaProfile& profile, std::size_t numerator_size,
                        Variant variant, std::optional<double> epsilon) {
    OverheadReport rep;
    rep.variant = variant;
    rep.label = profile.label;
    rep.set_size = numerator_size;
    rep.t = profile.t_max;
    rep.epsilon = epsilon;
    rep.delta = profile.delta_of_t.empty() ? 1.0 : profile.delta_of_t.back();
    for (auto c : profile.converged)
        if (!c) rep.norms_converged = false;
    fill_closed_forms(rep);
    return rep;
}

OverheadReport q_report(const GateSet& set, int t, std::optional<double> epsilon,
                        int workers) {
    DeltaProfile profile = delta_profile(set, t, workers);
    return q_report(profile, set.gates.size(), Variant::Q, epsilon);
}

OverheadReport q_t(const GateSet& group, const ProjectiveGate& t_gate, int t,
                   std::optional<double> epsilon, int workers) {
    GateSet derived = derived_set(group, t_gate);
    derived.label = group.label + "_T";
    DeltaProfile profile = delta_profile(derived, t, workers);
    // the numerator counts |C| even when conjugates collide (multiset measure)
    OverheadReport rep = q_report(profile, group.gates.size(), Variant::QT, epsilon);
    return rep;
}

std::pair<double, bool> q_bar_estimate(const DeltaProfile& profile,
                                       std::size_t numerator_size, int window) {
    if (window < 1 || profile.t_max < 2 * window)
        throw InputError("q_bar_estimate: need t_max >= 2 * window");
    const auto& d = profile.delta_of_t;
    double lo = d.back(), hi = d.back();
    for (std::size_t i = d.size() - static_cast<std::size_t>(window); i < d.size(); ++i) {
        lo = std::min(lo, d[i]);
        hi = std::max(hi, d[i]);
    }
    bool stabilized = (hi - lo) < 1e-6;
    double delta = d.back();
    double q = delta >= 1.0 ? std::numeric_limits<double>::infinity()
                            : q_value(static_cast<int>(numerator_size), std::max(delta, 1e-300));
    return {q, stabilized};
}

}  // namespace qco
