#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qco/gates.hpp"
#include "qco/irreps.hpp"

namespace qco {

struct MomentBlock {
    int spin = 0;
    MatrixX matrix;  // (1/|S|) sum_i pi_s(U_i)
};

MomentBlock moment_block(const GateSet& set, int s);

struct NormResult {
    double value = 0.0;
    bool converged = true;
    int iterations = 0;
};

// Largest singular value. Dense decomposition for dimension <= 64;
// otherwise power iteration on M^dagger M with a seeded start vector,
// Rayleigh-gap stop at tol, cap 1e4 iterations, one refinement pass.
// force_power / cross_check expose the two routes for testing.
NormResult operator_norm(const MatrixX& m, double tol = 1e-10, bool force_power = false);

struct DeltaProfile {
    std::vector<double> per_spin_norms;  // s = 1..t_max
    std::vector<double> delta_of_t;      // running maxima
    std::vector<std::uint8_t> converged; // per spin
    int t_max = 0;
    std::size_t set_size = 0;
    std::string label;
    std::uint64_t seed = 0;
    double wall_time = 0.0;
};

// Norms of every nontrivial block s = 1..t_max plus running maxima.
// Ladders for distinct gates advance independently (parallel across gates);
// the per-spin average is reduced in gate order, so the output does not
// depend on the worker count. workers = 0 means hardware concurrency.
DeltaProfile delta_profile(const GateSet& set, int t_max, int workers = 0);

// Literal 4^t-dimensional construction of || T_{nu,t} - T_{mu,t} ||_inf,
// with the Haar projector obtained as the joint fixed space of six
// Haar-random witnesses. Test oracle; t <= 3 only.
double brute_force_delta(const GateSet& set, int t);

enum class Weighting { Multiplicity, Uniform };

struct SpectrumSample {
    std::vector<std::pair<double, double>> values;  // (singular value, weight)
    int t = 0;
    Weighting weighting = Weighting::Multiplicity;
};

// All singular values of every block s = 1..t. Multiplicity weighting gives
// each singular value of block s the weight m_s / sum_{s'>=1} m_{s'}(2s'+1);
// uniform weights every computed value equally. Weights sum to 1.
SpectrumSample singular_spectrum(const GateSet& set, int t, Weighting weighting,
                                 int workers = 0);

// shared helper: deterministic indexed parallel loop
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int workers);

}  // namespace qco
