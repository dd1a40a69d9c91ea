#include "qco/moments.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

namespace qco {

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int workers) {
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    std::atomic<std::size_t> cursor{0};
    for (std::size_t w = 0; w < nw; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

MomentBlock moment_block(const GateSet& set, int s) {
    if (s < 1) throw OutOfRange("moment_block: spin must be >= 1");
    if (set.gates.empty()) throw EmptyInput("moment_block: empty gate set");
    const int n = 2 * s + 1;
    MatrixX acc = MatrixX::Zero(n, n);
    for (const auto& g : set.gates) acc += irrep(g, s).entries;
    acc /= static_cast<double>(set.gates.size());
    return {s, std::move(acc)};
}

namespace {

double dense_norm(const MatrixX& m) {
    return Eigen::JacobiSVD<MatrixX>(m).singularValues()(0);
}

NormResult power_norm(const MatrixX& m, double tol) {
    const Eigen::Index n = m.cols();
    Rng rng = Rng::stream(0x6e6f726dULL, static_cast<std::uint64_t>(n),
                          Rng::kNormStart);
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(rng.normal(), rng.normal());
    v.normalize();

    NormResult res;
    double prev = -1.0;
    double sigma2 = 0.0;
    constexpr int kCap = 10000;
    Eigen::VectorXcd w(m.rows()), u(n);
    int it = 0;
    for (it = 1; it <= kCap; ++it) {
        w.noalias() = m * v;
        sigma2 = w.squaredNorm();  // Rayleigh quotient of M^dagger M at unit v
        u.noalias() = m.adjoint() * w;
        double un = u.norm();
        if (un <= 0.0) {
            res.value = 0.0;
            res.iterations = it;
            return res;
        }
        v = u / un;
        if (prev >= 0.0 && std::abs(sigma2 - prev) <= tol * std::max(sigma2, 1e-300))
            break;
        prev = sigma2;
    }
    res.converged = it <= kCap;
    res.iterations = std::min(it, kCap);
    // refinement pass on the converged vector
    w.noalias() = m * v;
    res.value = std::sqrt(std::max(w.squaredNorm(), sigma2));
    return res;
}

}  // namespace

NormResult operator_norm(const MatrixX& m, double tol, bool force_power) {
    if (m.size() == 0) throw EmptyInput("operator_norm: empty matrix");
    if (tol <= 0.0) throw InputError("operator_norm: tol must be > 0");
    if (!force_power && m.rows() <= 64 && m.cols() <= 64)
        return {dense_norm(m), true, 0};
    return power_norm(m, tol);
}

DeltaProfile delta_profile(const GateSet& set, int t_max, int workers) {
    if (t_max < 1) throw InputError("delta_profile: t_max must be >= 1");
    if (set.gates.empty()) throw EmptyInput("delta_profile: empty gate set");
    auto start = std::chrono::steady_clock::now();

    DeltaProfile profile;
    profile.t_max = t_max;
    profile.set_size = set.gates.size();
    profile.label = set.label;
    profile.seed = set.provenance.seed;
    profile.per_spin_norms.resize(static_cast<std::size_t>(t_max));
    profile.converged.resize(static_cast<std::size_t>(t_max));

    std::vector<IrrepLadder> ladders;
    ladders.reserve(set.gates.size());
    for (const auto& g : set.gates) ladders.emplace_back(g);

    const double inv = 1.0 / static_cast<double>(set.gates.size());
    for (int s = 1; s <= t_max; ++s) {
        parallel_for(ladders.size(), [&](std::size_t i) {
            ladders[i].step();
            ladders[i].step();
        }, workers);
        // reduction in gate order keeps the result worker-independent
        MatrixX block = ladders[0].matrix();
        for (std::size_t i = 1; i < ladders.size(); ++i) block += ladders[i].matrix();
        block *= inv;
        NormResult nr = operator_norm(block, 1e-10);
        profile.per_spin_norms[static_cast<std::size_t>(s - 1)] = nr.value;
        profile.converged[static_cast<std::size_t>(s - 1)] = nr.converged ? 1 : 0;
    }

    profile.delta_of_t.resize(profile.per_spin_norms.size());
    double running = 0.0;
    for (std::size_t i = 0; i < profile.per_spin_norms.size(); ++i) {
        running = std::max(running, profile.per_spin_norms[i]);
        profile.delta_of_t[i] = running;
    }
    profile.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return profile;
}

namespace {

MatrixX kron(const MatrixX& a, const MatrixX& b) {
    MatrixX out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// U^{t,t} = U^{tensor t} tensor conj(U)^{tensor t}
MatrixX u_tt(const Matrix2& u, int t) {
    MatrixX fwd = MatrixX::Ones(1, 1), bwd = MatrixX::Ones(1, 1);
    for (int i = 0; i < t; ++i) {
        fwd = kron(fwd, u);
        bwd = kron(bwd, u.conjugate());
    }
    return kron(fwd, bwd);
}

}  // namespace

double brute_force_delta(const GateSet& set, int t) {
    if (t < 1 || t > 3) throw DimensionTooLarge("brute_force_delta: t must be in {1,2,3}");
    if (set.gates.empty()) throw EmptyInput("brute_force_delta: empty gate set");
    const int dim = 1 << (2 * t);  // 4^t

    MatrixX t_nu = MatrixX::Zero(dim, dim);
    for (const auto& g : set.gates) t_nu += u_tt(g.matrix(), t);
    t_nu /= static_cast<double>(set.gates.size());

    // Haar projector: joint fixed space of six Haar-random witnesses
    constexpr int kWitnesses = 6;
    Rng rng = Rng::stream(0x68616172ULL, static_cast<std::uint64_t>(t), Rng::kWitness);
    MatrixX stacked(kWitnesses * dim, dim);
    for (int i = 0; i < kWitnesses; ++i) {
        ProjectiveGate w = haar_sample(rng);
        stacked.block(i * dim, 0, dim, dim) =
            u_tt(w.matrix(), t) - MatrixX::Identity(dim, dim);
    }
    Eigen::JacobiSVD<MatrixX> svd(stacked, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    int null_dim = 0;
    for (Eigen::Index i = sv.size() - 1; i >= 0 && sv(i) < 1e-9; --i) ++null_dim;
    MatrixX basis = svd.matrixV().rightCols(null_dim);
    MatrixX t_mu = basis * basis.adjoint();

    return dense_norm(t_nu - t_mu);
}

SpectrumSample singular_spectrum(const GateSet& set, int t, Weighting weighting,
                                 int workers) {
    if (t < 1) throw InputError("singular_spectrum: t must be >= 1");
    if (set.gates.empty()) throw EmptyInput("singular_spectrum: empty gate set");

    SpectrumSample out;
    out.t = t;
    out.weighting = weighting;

    std::vector<IrrepLadder> ladders;
    for (const auto& g : set.gates) ladders.emplace_back(g);
    const double inv = 1.0 / static_cast<double>(set.gates.size());

    std::size_t total_count = 0;
    std::vector<std::vector<double>> per_spin(static_cast<std::size_t>(t));
    for (int s = 1; s <= t; ++s) {
        parallel_for(ladders.size(), [&](std::size_t i) {
            ladders[i].step();
            ladders[i].step();
        }, workers);
        MatrixX block = ladders[0].matrix();
        for (std::size_t i = 1; i < ladders.size(); ++i) block += ladders[i].matrix();
        block *= inv;
        Eigen::JacobiSVD<MatrixX> svd(block);
        auto& vals = per_spin[static_cast<std::size_t>(s - 1)];
        vals.assign(svd.singularValues().data(),
                    svd.singularValues().data() + svd.singularValues().size());
        total_count += vals.size();
    }

    const double log_z = log_nontrivial_dimension(t);
    for (int s = 1; s <= t; ++s) {
        double w = weighting == Weighting::Multiplicity
                       ? std::exp(log_irrep_multiplicity(s, t) - log_z)
                       : 1.0 / static_cast<double>(total_count);
        for (double v : per_spin[static_cast<std::size_t>(s - 1)])
            out.values.emplace_back(v, w);
    }
    return out;
}

}  // namespace qco
