#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qco/moments.hpp"

namespace qco {

// Ball-volume constants: Vol(B_eps) is bracketed by (a_v eps)^{d^2-1} and
// (A_v eps)^{d^2-1}.
inline constexpr double kBallVolumeLower = 1.0 / (9.0 * 3.141592653589793238462643383279502884);
inline constexpr double kBallVolumeUpper = 87.0;

// Kesten bound 2 sqrt(n-1)/n on the discrepancy of an n-element set.
double delta_opt(int n);

// Q = log(n) / log(1/delta). Throws NoGapAtScale for delta >= 1 and
// DegenerateDelta for delta <= 0 (natural logs; the ratio is base-free).
double q_value(int n, double delta);

// Optimal asymptotic value log(n)/log(n / (2 sqrt(n-1))); >= 2, divergent at n = 2.
double q_opt_bar(int n);

// t(eps) = ceil(d^{5/2} / eps), the eps-net <-> t-design scaling with unit constant.
int t_of_eps(double epsilon, int d);

// Volume-counting lower bound (d^2-1) log(1/(A_v eps)) / log(n).
double ell_vol(int n, double epsilon, int d);

// Finite-scale upper-bound length (d^2-1) log(1/eps) / log(1/delta).
double ell_delta(double delta, double epsilon, int d);

// The asymptotic variant with the ball constant, (d^2-1) log(2/(A_v eps)) / log(1/delta).
double ell_delta_asymptotic(double delta, double epsilon, int d);

// Kesten-McKay density: symmetric on [-delta_opt, delta_opt], or the
// one-sided singular-value form on [0, delta_opt].
double km_density(double x, int n, bool symmetric);

struct KMDensity {
    int set_size = 0;
    bool symmetric = false;
    double support_edge = 0.0;  // delta_opt(set_size)

    double operator()(double x) const { return km_density(x, set_size, symmetric); }
};
KMDensity km_overlay(int n, bool symmetric);

enum class Variant { Q, QT };

struct OverheadReport {
    Variant variant = Variant::Q;
    std::string label;
    std::size_t set_size = 0;  // |S|, or |C| for the T-variant
    int d = 2;
    int t = 0;
    std::optional<double> epsilon;
    double delta = 0.0;
    double q = 0.0;
    double q_opt_bar = 0.0;
    double delta_opt = 0.0;
    std::optional<double> ell_vol;
    std::optional<double> ell_delta;
    bool no_gap = false;          // delta >= 1 at this scale
    bool degenerate_delta = false;
    bool norms_converged = true;
};

// Report for a raw gate set: delta(nu_S, t) and Q = log|S|/log(1/delta).
// A delta >= 1 is flagged in-band (q = +inf), not thrown.
OverheadReport q_report(const GateSet& set, int t, std::optional<double> epsilon = {},
                        int workers = 0);

// Same, from an already computed profile (delta at t = profile.t_max).
OverheadReport q_report(const DeltaProfile& profile, std::size_t numerator_size,
                        Variant variant, std::optional<double> epsilon = {});

// T-variant: builds the derived set of (C, T), computes its profile to t and
// returns Q_T = log|C| / log(1/delta). Throws TInGroup.
OverheadReport q_t(const GateSet& group, const ProjectiveGate& t_gate, int t,
                   std::optional<double> epsilon = {}, int workers = 0);

// Q at the profile's largest t plus a stabilization flag (true when the
// trailing `window` values of delta changed by less than 1e-6).
std::pair<double, bool> q_bar_estimate(const DeltaProfile& profile,
                                       std::size_t numerator_size, int window);

}  // namespace qco
