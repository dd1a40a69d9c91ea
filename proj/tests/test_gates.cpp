#include <cmath>
#include <complex>

#include "doctest.h"
#include "qco/gates.hpp"

using namespace qco;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// spectral norm of a 2x2 matrix, from the eigenvalues of A^dagger A
double spectral_norm_2x2(const Matrix2& a) {
    Eigen::Matrix2cd h = a.adjoint() * a;
    double tr = h.trace().real();
    double det = h.determinant().real();
    double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    return std::sqrt(0.5 * (tr + disc));
}

// brute-force min over a fine phase grid; the closed form must match
double grid_distance(const ProjectiveGate& u, const ProjectiveGate& v, int points) {
    double best = 1e300;
    for (int k = 0; k < points; ++k) {
        double phi = 2.0 * kPi * k / points;
        Matrix2 diff = u.matrix() - std::polar(1.0, phi) * v.matrix();
        best = std::min(best, spectral_norm_2x2(diff));
    }
    return best;
}

bool canonical_sign_ok(const Matrix2& u) {
    const Complex entries[4] = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
    for (const Complex& z : entries) {
        if (std::abs(z) <= 1e-9) continue;
        if (z.real() > 0) return true;
        if (std::abs(z.real()) <= 1e-12 && z.imag() > 0) return true;
        return false;
    }
    return false;
}

}  // namespace

TEST_CASE("normalization accepts scaled unitaries and canonicalizes sign") {
    Matrix2 m;
    m << Complex(3, 0), Complex(1, -1), Complex(1, 1), Complex(-3, 0);  // sqrt(11) scale
    auto g = ProjectiveGate::from_matrix(m);
    CHECK((g.matrix().adjoint() * g.matrix() - Matrix2::Identity()).norm() < 1e-14);
    CHECK(std::abs(g.matrix().determinant() - 1.0) < 1e-14);
    CHECK(canonical_sign_ok(g.matrix()));
    // overall phase is removed
    auto h = ProjectiveGate::from_matrix(std::polar(2.5, 1.234) * m);
    CHECK((g.matrix() - h.matrix()).norm() < 1e-13);
}

TEST_CASE("phase gate representative") {
    auto p = phase_gate(kPi / 4);
    Matrix2 expected;
    expected << std::polar(1.0, -kPi / 8), Complex(0, 0), Complex(0, 0),
        std::polar(1.0, kPi / 8);
    CHECK((p.matrix() - expected).norm() < 1e-14);
}

TEST_CASE("degenerate inputs are rejected") {
    Matrix2 zero = Matrix2::Zero();
    CHECK_THROWS_AS(ProjectiveGate::from_matrix(zero), SingularInput);
    Matrix2 bad;
    bad << Complex(1, 0), Complex(1, 0), Complex(0, 0), Complex(1, 0);
    CHECK_THROWS_AS(ProjectiveGate::from_matrix(bad), NotProportionalToUnitary);
}

TEST_CASE("projective distance closed form matches the phase-grid oracle") {
    Rng rng(101);
    for (int i = 0; i < 12; ++i) {
        auto u = haar_sample(rng);
        auto v = haar_sample(rng);
        double d = projective_distance(u, v);
        CHECK(std::abs((d) - (grid_distance(u, v, 20000))) <= (1e-5));
    }
}

TEST_CASE("projective distance is a metric on PU(2)") {
    auto id = ProjectiveGate();
    Matrix2 xm;
    xm << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
    auto x = ProjectiveGate::from_matrix(xm);
    CHECK(std::abs((projective_distance(id, id)) - (0.0)) <= (1e-15));
    CHECK(std::abs((projective_distance(id, x)) - (std::sqrt(2.0))) <= (1e-12));

    Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        auto u = haar_sample(rng), v = haar_sample(rng), w = haar_sample(rng);
        double duv = projective_distance(u, v);
        CHECK(std::abs((duv) - (projective_distance(v, u))) <= (1e-13));
        CHECK(duv <= std::sqrt(2.0) + 1e-12);
        // triangle inequality and left invariance
        CHECK(duv <= projective_distance(u, w) + projective_distance(w, v) + 1e-12);
        CHECK(std::abs((projective_distance(w * u, w * v)) - (duv)) <= (1e-12));
    }
}

TEST_CASE("rotation angle maps to distance 2 sin(theta/4)") {
    auto id = ProjectiveGate();
    for (double theta : {0.1, 0.5, 1.0, 2.0, 3.0, kPi}) {
        auto r = rotation_gate({0.0, 0.0, 1.0}, theta);
        CHECK(std::abs((projective_distance(id, r)) - (2.0 * std::sin(theta / 4.0))) <= (1e-12));
    }
}

TEST_CASE("projective equality ignores global phase") {
    Rng rng(11);
    auto u = haar_sample(rng);
    auto scaled = ProjectiveGate::from_matrix(std::polar(1.0, 2.1) * u.matrix());
    CHECK(projective_equal(u, scaled));
    CHECK_FALSE(projective_equal(u, haar_sample(rng)));
}

TEST_CASE("projective orders of the named gates") {
    CHECK(projective_order(phase_gate(kPi / 4), 64) == 8);
    CHECK(projective_order(t24_gate(), 64) == 2);
    CHECK(projective_order(t12_gate(), 64) == 2);
    CHECK(projective_order(ProjectiveGate(), 64) == 1);
    Rng rng(3);
    CHECK_FALSE(projective_order(haar_sample(rng), 100).has_value());
}

TEST_CASE("haar sampling reproduces low trace moments") {
    Rng rng(2024);
    const int n = 40000;
    double m2 = 0.0, m4 = 0.0;
    for (int i = 0; i < n; ++i) {
        double a = std::norm(haar_sample(rng).matrix().trace());
        m2 += a;
        m4 += a * a;
    }
    m2 /= n;
    m4 /= n;
    // Catalan moments of |tr U|^2 under Haar on SU(2): 1 and 2
    CHECK(std::abs((m2) - (1.0)) <= (0.03));
    CHECK(std::abs((m4) - (2.0)) <= (0.1));
}

TEST_CASE("axis-angle decomposition round trips") {
    Rng rng(5);
    for (int i = 0; i < 25; ++i) {
        auto axis = rng.unit_axis();
        double theta = 0.2 + 2.7 * rng.uniform();
        AxisAngle aa = axis_angle(rotation_gate(axis, theta));
        CHECK(std::abs((aa.angle) - (theta)) <= (1e-10));
        double dot = aa.axis[0] * axis[0] + aa.axis[1] * axis[1] + aa.axis[2] * axis[2];
        CHECK(std::abs((std::abs(dot)) - (1.0)) <= (1e-10));
    }
}

TEST_CASE("t12 is a pi rotation about (1,1,3)/sqrt(11)") {
    AxisAngle aa = axis_angle(t12_gate());
    CHECK(std::abs((aa.angle) - (kPi)) <= (1e-12));
    double s = aa.axis[0] > 0 ? 1.0 : -1.0;  // axis sign is a gauge at angle pi
    CHECK(std::abs((s * aa.axis[0]) - (1.0 / std::sqrt(11.0))) <= (1e-12));
    CHECK(std::abs((s * aa.axis[1]) - (1.0 / std::sqrt(11.0))) <= (1e-12));
    CHECK(std::abs((s * aa.axis[2]) - (3.0 / std::sqrt(11.0))) <= (1e-12));
}

TEST_CASE("finite-order sampling hits the requested projective order") {
    Rng rng(17);
    for (int r : {2, 3, 5, 8, 12}) {
        for (int i = 0; i < 10; ++i) {
            auto g = finite_order_sample(rng, r);
            CHECK(projective_order(g, 2 * r) == r);
        }
    }
    CHECK_THROWS_AS(finite_order_sample(rng, 1), InvalidOrder);
}

TEST_CASE("group closures of the named generator sets") {
    CHECK(clifford_group().size() == 24);
    CHECK(hurwitz_group().size() == 12);
    CHECK(group_closure({phase_gate(kPi / 4)}, 100).size() == 8);
}

TEST_CASE("closure cap is enforced") {
    Rng rng(23);
    std::vector<ProjectiveGate> gens{haar_sample(rng), haar_sample(rng)};
    CHECK_THROWS_AS(group_closure(gens, 100), CapExceeded);
}

TEST_CASE("closure elements are closed under multiplication") {
    auto c = clifford_group();
    for (const auto& a : c.gates)
        for (const auto& b : c.gates) {
            auto prod = a * b;
            bool found = false;
            for (const auto& g : c.gates) found = found || projective_equal(prod, g);
            CHECK(found);
        }
}

TEST_CASE("derived set is the conjugation orbit as a multiset") {
    auto c = clifford_group();
    auto t = phase_gate(kPi / 4);
    auto d = derived_set(c, t);
    REQUIRE(d.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto expected = c.gates[i] * t * c.gates[i].dagger();
        CHECK(projective_equal(d.gates[i], expected));
    }
    CHECK_THROWS_AS(derived_set(c, c.gates[5]), TInGroup);
}

TEST_CASE("word rewriting preserves the product and the T count") {
    auto c = clifford_group();
    auto t = phase_gate(kPi / 4);
    auto d = derived_set(c, t);
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Word w;
        int len = 3 + static_cast<int>(rng.uniform_int(10));
        for (int i = 0; i < len; ++i) {
            WordLetter l;
            l.is_t = rng.uniform() < 0.4;
            if (!l.is_t) l.index = static_cast<int>(rng.uniform_int(c.size()));
            w.letters.push_back(l);
        }
        auto res = rewrite_to_derived(w, c, t);

        ProjectiveGate orig;
        for (const auto& l : w.letters) orig = orig * (l.is_t ? t : c.gates[l.index]);
        ProjectiveGate rewritten;
        for (const auto& l : res.word.letters) {
            CHECK(l.is_t);
            rewritten = rewritten * d.gates[l.index];
        }
        rewritten = rewritten * res.residual;

        CHECK(projective_equal(orig, rewritten));
        CHECK(res.word.t_count() == w.t_count());
        bool in_group = false;
        for (const auto& g : c.gates) in_group = in_group || projective_equal(res.residual, g);
        CHECK(in_group);
    }
}

TEST_CASE("rng streams are independent and reproducible") {
    Rng a = Rng::stream(42, 7, Rng::kMember);
    Rng b = Rng::stream(42, 7, Rng::kMember);
    Rng c = Rng::stream(42, 8, Rng::kMember);
    Rng d = Rng::stream(42, 7, Rng::kSearch);
    auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
}
