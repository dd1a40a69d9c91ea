#include "qco/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace qco {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Matrix2 canonical_sign(const Matrix2& u) {
    const Complex* d = u.data();
    // Eigen default storage is column-major; scan in row-major order.
    static constexpr int scan[4] = {0, 2, 1, 3};
    for (int k : scan) {
        Complex z = d[k];
        if (std::abs(z) > 1e-9) {
            bool flip;
            if (std::abs(z.real()) <= 1e-12) {
                flip = z.imag() < 0.0;
            } else {
                flip = z.real() < 0.0;
            }
            return flip ? Matrix2(-u) : u;
        }
    }
    return u;
}

}  // namespace

ProjectiveGate ProjectiveGate::from_su2(const Matrix2& u) {
    ProjectiveGate g;
    g.u_ = canonical_sign(u);
    return g;
}

ProjectiveGate ProjectiveGate::from_matrix(const Matrix2& m) {
    Matrix2 h = m * m.adjoint();
    double c = 0.5 * h.trace().real();
    double scale = m.cwiseAbs().maxCoeff();
    if (scale <= 0.0 || c <= 0.0) throw SingularInput("zero or singular input matrix");
    if ((h - c * Matrix2::Identity()).cwiseAbs().maxCoeff() > 1e-9 * c)
        throw NotProportionalToUnitary("M M^dagger is not a scalar matrix");
    Matrix2 u = m / std::sqrt(c);
    Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    u /= std::sqrt(det);
    return from_su2(u);
}

double projective_distance(const ProjectiveGate& u, const ProjectiveGate& v) {
    Matrix2 w = u.matrix() * v.matrix().adjoint();
    double c = std::clamp(0.5 * w.trace().real(), -1.0, 1.0);
    double theta = std::acos(c);          // eigenphases are +-theta
    double gap = 2.0 * theta;             // in [0, 2 pi]
    if (gap > kPi) gap -= 2.0 * kPi;      // reduce to (-pi, pi]
    return 2.0 * std::abs(std::sin(0.25 * gap));
}

bool projective_equal(const ProjectiveGate& u, const ProjectiveGate& v, double tol) {
    return std::abs((u.matrix().adjoint() * v.matrix()).trace()) >= 2.0 - tol;
}

std::optional<int> projective_order(const ProjectiveGate& u, int max_order) {
    ProjectiveGate p = u;
    ProjectiveGate id;
    for (int m = 1; m <= max_order; ++m) {
        if (projective_equal(p, id, 1e-9)) return m;
        p = p * u;
    }
    return std::nullopt;
}

ProjectiveGate haar_sample(Rng& rng) {
    double q0, q1, q2, q3, n;
    do {
        q0 = rng.normal();
        q1 = rng.normal();
        q2 = rng.normal();
        q3 = rng.normal();
        n = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    } while (n < 1e-12);
    q0 /= n; q1 /= n; q2 /= n; q3 /= n;
    Matrix2 u;
    u << Complex(q0, q3), Complex(q2, q1),
         Complex(-q2, q1), Complex(q0, -q3);
    return ProjectiveGate::from_su2(u);
}

ProjectiveGate rotation_gate(const std::array<double, 3>& axis, double theta) {
    double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    Matrix2 u;
    u << Complex(c, -s * axis[2]), Complex(-s * axis[1], -s * axis[0]),
         Complex(s * axis[1], -s * axis[0]), Complex(c, s * axis[2]);
    return ProjectiveGate::from_su2(u);
}

ProjectiveGate finite_order_sample(Rng& rng, int r) {
    if (r < 2) throw InvalidOrder("finite_order_sample requires r >= 2");
    std::vector<int> ks;
    for (int k = 1; 2 * k <= r; ++k)
        if (std::gcd(k, r) == 1) ks.push_back(k);
    auto axis = rng.unit_axis();
    int k = ks[static_cast<std::size_t>(rng.uniform_int(ks.size()))];
    return rotation_gate(axis, 2.0 * kPi * k / r);
}

AxisAngle axis_angle(const ProjectiveGate& g) {
    Matrix2 u = g.matrix();
    double c = 0.5 * u.trace().real();
    if (c < 0.0) {
        u = -u;
        c = -c;
    }
    c = std::clamp(c, -1.0, 1.0);
    double half = std::acos(c);  // theta/2 in [0, pi/2]
    double s = std::sin(half);
    if (s < 1e-12) return {{0.0, 0.0, 1.0}, 0.0};
    // u - c I = -i s (n . sigma)
    double nz = -(u(0, 0).imag() - u(1, 1).imag()) / (2.0 * s);
    double nx = -(u(0, 1).imag() + u(1, 0).imag()) / (2.0 * s);
    double ny = (u(1, 0).real() - u(0, 1).real()) / (2.0 * s);
    double n = std::sqrt(nx * nx + ny * ny + nz * nz);
    return {{nx / n, ny / n, nz / n}, 2.0 * half};
}

namespace {

// Quantized dedup index: two grids offset by half a cell so that nearly
// equal canonical matrices always collide in at least one of them.
class DedupIndex {
  public:
    bool contains(const std::vector<ProjectiveGate>& pool, const ProjectiveGate& g) const {
        for (auto key : keys(g))
            for (int grid = 0; grid < 2; ++grid) {
                auto it = maps_[grid].find(key);
                if (it != maps_[grid].end() &&
                    projective_equal(pool[it->second], g, 1e-9))
                    return true;
            }
        return false;
    }

    void insert(const ProjectiveGate& g, std::size_t idx) {
        auto k = keys(g);
        maps_[0].emplace(k[0], idx);
        maps_[1].emplace(k[1], idx);
    }

  private:
    static std::array<std::uint64_t, 2> keys(const ProjectiveGate& g) {
        constexpr double inv_h = 1e9;
        std::array<std::uint64_t, 2> out{1469598103934665603ULL, 1469598103934665603ULL};
        const Matrix2& u = g.matrix();
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                double vals[2] = {u(r, c).real(), u(r, c).imag()};
                for (double v : vals) {
                    auto q0 = static_cast<std::int64_t>(std::floor(v * inv_h));
                    auto q1 = static_cast<std::int64_t>(std::floor(v * inv_h + 0.5));
                    out[0] = (out[0] ^ static_cast<std::uint64_t>(q0)) * 1099511628211ULL;
                    out[1] = (out[1] ^ static_cast<std::uint64_t>(q1)) * 1099511628211ULL;
                }
            }
        return out;
    }

    std::unordered_map<std::uint64_t, std::size_t> maps_[2];
};

}  // namespace

GateSet group_closure(const std::vector<ProjectiveGate>& generators, int cap,
                      const std::string& label) {
    if (generators.empty()) throw InputError("group_closure: no generators");
    if (cap < 1) throw InputError("group_closure: cap must be >= 1");
    GateSet out;
    out.label = label;
    out.provenance.kind = "generators";
    DedupIndex index;

    auto try_add = [&](const ProjectiveGate& g) {
        if (index.contains(out.gates, g)) return;
        if (static_cast<int>(out.gates.size()) >= cap)
            throw CapExceeded("group closure exceeded cap " + std::to_string(cap));
        index.insert(g, out.gates.size());
        out.gates.push_back(g);
    };

    try_add(ProjectiveGate());
    for (const auto& g : generators) try_add(g);
    for (std::size_t i = 0; i < out.gates.size(); ++i)
        for (const auto& g : generators) try_add(out.gates[i] * g);
    return out;
}

GateSet derived_set(const GateSet& group, const ProjectiveGate& t) {
    for (const auto& c : group.gates)
        if (projective_equal(c, t, 1e-9))
            throw TInGroup("completion gate is projectively in the group");
    GateSet out;
    out.label = group.label + "_derived";
    out.provenance.kind = "derived";
    out.gates.reserve(group.gates.size());
    for (const auto& c : group.gates)
        out.gates.push_back(c * t * c.dagger());
    return out;
}

RewriteResult rewrite_to_derived(const Word& word, const GateSet& group,
                                 const ProjectiveGate& t) {
    auto group_index = [&](const ProjectiveGate& g) -> int {
        for (std::size_t i = 0; i < group.gates.size(); ++i)
            if (projective_equal(group.gates[i], g, 1e-9)) return static_cast<int>(i);
        throw InputError("prefix product left the group; input word is malformed");
    };

    RewriteResult res;
    ProjectiveGate prefix;  // d_j = c_{i_1} ... c_{i_j}
    for (const auto& letter : word.letters) {
        if (letter.is_t) {
            res.word.letters.push_back({group_index(prefix), true});
        } else {
            if (letter.index < 0 || letter.index >= static_cast<int>(group.gates.size()))
                throw InputError("word letter out of range");
            prefix = prefix * group.gates[static_cast<std::size_t>(letter.index)];
        }
    }
    (void)t;
    res.residual = prefix;
    return res;
}

std::vector<ProjectiveGate> clifford_generators() {
    Matrix2 a, b;
    a << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 1);
    b << Complex(1, 0), Complex(1, 0), Complex(-1, 0), Complex(1, 0);
    return {ProjectiveGate::from_matrix(a), ProjectiveGate::from_matrix(b)};
}

std::vector<ProjectiveGate> hurwitz_generators() {
    Matrix2 a, b;
    a << Complex(0, 1), Complex(0, 0), Complex(0, 0), Complex(0, -1);
    b << Complex(1, 0), Complex(1, 0), Complex(0, 1), Complex(0, -1);
    return {ProjectiveGate::from_matrix(a), ProjectiveGate::from_matrix(b)};
}

GateSet clifford_group() {
    GateSet g = group_closure(clifford_generators(), 64, "clifford");
    return g;
}

GateSet hurwitz_group() {
    GateSet g = group_closure(hurwitz_generators(), 64, "hurwitz");
    return g;
}

ProjectiveGate phase_gate(double theta) {
    Matrix2 m;
    m << Complex(1, 0), Complex(0, 0), Complex(0, 0), std::polar(1.0, theta);
    return ProjectiveGate::from_matrix(m);
}

ProjectiveGate t24_gate() {
    double r2 = std::sqrt(2.0);
    Matrix2 m;
    m << Complex(-1 - r2, 0), Complex(2 - r2, 1),
         Complex(2 - r2, -1), Complex(1 + r2, 0);
    return ProjectiveGate::from_matrix(m);
}

ProjectiveGate t12_gate() {
    Matrix2 m;
    m << Complex(3, 0), Complex(1, -1), Complex(1, 1), Complex(-3, 0);
    return ProjectiveGate::from_matrix(m);
}

}  // namespace qco
