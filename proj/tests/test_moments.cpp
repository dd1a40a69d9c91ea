#include <cmath>

#include "doctest.h"
#include "qco/moments.hpp"

using namespace qco;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

GateSet random_set(Rng& rng, int n) {
    GateSet s;
    for (int i = 0; i < n; ++i) s.gates.push_back(haar_sample(rng));
    return s;
}
}  // namespace

TEST_CASE("moment block of a singleton is the gate's spin-s matrix") {
    Rng rng(1);
    GateSet s;
    s.gates.push_back(haar_sample(rng));
    auto block = moment_block(s, 3);
    CHECK((block.matrix - irrep(s.gates[0], 3).entries).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("clifford moment blocks vanish up to spin 3 and not at spin 4") {
    auto c = clifford_group();
    for (int s = 1; s <= 3; ++s)
        CHECK(operator_norm(moment_block(c, s).matrix).value < 1e-12);
    CHECK(operator_norm(moment_block(c, 4).matrix).value > 0.3);
}

TEST_CASE("operator norm: dense and power routes agree") {
    Rng rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = 101;
        MatrixX m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
        m /= std::sqrt(double(dim));
        Eigen::JacobiSVD<MatrixX> svd(m);
        double dense = svd.singularValues()(0);
        auto r = operator_norm(m, 1e-12, /*force_power=*/true);
        CHECK(r.converged);
        CHECK(std::abs((r.value) - (dense)) <= (1e-8));
    }
}

TEST_CASE("operator norm of a unitary is one") {
    Rng rng(10);
    auto m = irrep(haar_sample(rng), 40).entries;
    auto r = operator_norm(m, 1e-10, true);
    CHECK(std::abs((r.value) - (1.0)) <= (1e-9));
}

TEST_CASE("delta profile: identity set has no gap") {
    GateSet s;
    s.gates.push_back(ProjectiveGate());
    auto p = delta_profile(s, 5, 1);
    for (double v : p.delta_of_t) CHECK(std::abs((v) - (1.0)) <= (1e-12));
}

TEST_CASE("delta profile is non-decreasing and worker-count independent") {
    Rng rng(12);
    auto s = random_set(rng, 3);
    auto p1 = delta_profile(s, 12, 1);
    auto p4 = delta_profile(s, 12, 4);
    REQUIRE(p1.delta_of_t.size() == 12);
    for (std::size_t i = 1; i < p1.delta_of_t.size(); ++i)
        CHECK(p1.delta_of_t[i] >= p1.delta_of_t[i - 1] - 1e-15);
    for (std::size_t i = 0; i < p1.delta_of_t.size(); ++i)
        CHECK(p1.delta_of_t[i] == p4.delta_of_t[i]);
}

TEST_CASE("delta profile is conjugation invariant") {
    Rng rng(13);
    auto s = random_set(rng, 3);
    auto v = haar_sample(rng);
    GateSet conj;
    for (const auto& g : s.gates) conj.gates.push_back(v * g * v.dagger());
    auto p1 = delta_profile(s, 8, 1);
    auto p2 = delta_profile(conj, 8, 1);
    for (std::size_t i = 0; i < p1.delta_of_t.size(); ++i)
        CHECK(std::abs((p1.delta_of_t[i]) - (p2.delta_of_t[i])) <= (1e-10));
}

TEST_CASE("irrep route matches the literal tensor-power oracle") {
    Rng rng(14);
    for (int trial = 0; trial < 6; ++trial) {
        auto s = random_set(rng, 2 + static_cast<int>(rng.uniform_int(3)));
        for (int t : {1, 2, 3}) {
            auto p = delta_profile(s, t, 1);
            CHECK(std::abs((p.delta_of_t.back()) - (brute_force_delta(s, t))) <= (1e-9));
        }
    }
}

TEST_CASE("tensor-power oracle on the clifford group") {
    auto c = clifford_group();
    CHECK(brute_force_delta(c, 3) < 1e-10);
    auto p = delta_profile(c, 4, 1);
    CHECK(p.delta_of_t[2] < 1e-10);
    CHECK(p.delta_of_t[3] > 0.1);
}

TEST_CASE("spectrum weights are normalized under both weightings") {
    Rng rng(15);
    auto s = random_set(rng, 3);
    for (auto w : {Weighting::Multiplicity, Weighting::Uniform}) {
        auto spec = singular_spectrum(s, 6, w, 1);
        double total = 0.0;
        for (const auto& [v, wt] : spec.values) {
            total += wt;
            CHECK(v >= -1e-12);
            CHECK(v <= 1.0 + 1e-9);
        }
        CHECK(std::abs((total) - (1.0)) <= (1e-9));
    }
}

TEST_CASE("spectrum of the identity set is concentrated at one") {
    GateSet s;
    s.gates.push_back(ProjectiveGate());
    auto spec = singular_spectrum(s, 4, Weighting::Multiplicity, 1);
    for (const auto& [v, wt] : spec.values) CHECK(std::abs((v) - (1.0)) <= (1e-12));
}

TEST_CASE("rotation-pair delta approaches the even-spin bound") {
    // two z rotations commute: every block norm is exactly 1 through the
    // shared eigenvector, so delta locks at 1
    GateSet s;
    s.gates.push_back(rotation_gate({0, 0, 1}, 0.9));
    s.gates.push_back(rotation_gate({0, 0, 1}, 2.1));
    auto p = delta_profile(s, 4, 1);
    for (double v : p.delta_of_t) CHECK(std::abs((v) - (1.0)) <= (1e-12));
}

TEST_CASE("parallel_for covers every index exactly once") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; }, 4);
    for (int h : hits) CHECK(h == 1);
}
