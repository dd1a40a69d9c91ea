#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qco/errors.hpp"
#include "qco/rng.hpp"

namespace qco {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

// Element of PU(2), stored as the SU(2) representative with a canonical
// sign: in scan order (0,0),(0,1),(1,0),(1,1) the first entry with modulus
// > 1e-9 has positive real part, or zero real part and positive imaginary
// part. The canonical form makes hashing and dedup stable.
class ProjectiveGate {
  public:
    ProjectiveGate() : u_(Matrix2::Identity()) {}

    // Accepts any matrix proportional to a unitary (the named gate-set
    // generators are given unnormalized).
    static ProjectiveGate from_matrix(const Matrix2& m);

    // For matrices already unitary with |det - 1| small; canonicalizes sign.
    static ProjectiveGate from_su2(const Matrix2& u);

    const Matrix2& matrix() const { return u_; }

    ProjectiveGate dagger() const { return from_su2(u_.adjoint()); }
    ProjectiveGate operator*(const ProjectiveGate& rhs) const {
        return from_su2(u_ * rhs.u_);
    }

  private:
    Matrix2 u_;
};

struct Provenance {
    std::string kind;          // "generators" | "haar" | "finite-order" | "derived" | "file" | ...
    int order = 0;             // 0 means infinite / not applicable
    std::uint64_t seed = 0;
    std::string detail;
};

// Ordered multiset of projective gates; duplicates carry measure weight.
struct GateSet {
    std::vector<ProjectiveGate> gates;
    std::string label;
    Provenance provenance;

    std::size_t size() const { return gates.size(); }
};

// min over phase of ||U - e^{i phi} V||_inf, in closed form from the
// eigenvalue phases of U V^dagger. Range [0, sqrt(2)].
double projective_distance(const ProjectiveGate& u, const ProjectiveGate& v);

// |trace(U^dagger V)| >= 2 - tol
bool projective_equal(const ProjectiveGate& u, const ProjectiveGate& v, double tol = 1e-9);

// Smallest m <= max_order with U^m projectively the identity; nullopt when
// the cap is exceeded.
std::optional<int> projective_order(const ProjectiveGate& u, int max_order);

// Haar-random PU(2) element: four Gaussians -> unit quaternion -> SU(2).
ProjectiveGate haar_sample(Rng& rng);

// Bloch rotation about axis n by angle theta: cos(theta/2) I - i sin(theta/2) n.sigma
ProjectiveGate rotation_gate(const std::array<double, 3>& axis, double theta);

// Bloch rotation by 2 pi k / r about a uniform axis, k uniform over
// {1 <= k <= r/2, gcd(k, r) = 1}; projective order exactly r.
ProjectiveGate finite_order_sample(Rng& rng, int r);

// Canonical rotation decomposition: theta in [0, pi], unit axis
// (axis = (0,0,1) for the identity).
struct AxisAngle {
    std::array<double, 3> axis;
    double angle;
};
AxisAngle axis_angle(const ProjectiveGate& u);

// Breadth-first closure under multiplication with projective dedup.
// Throws CapExceeded when the closure grows past cap.
GateSet group_closure(const std::vector<ProjectiveGate>& generators, int cap,
                      const std::string& label = "group");

// { c T c^dagger : c in C }, multiset with exactly |C| entries.
// Throws TInGroup if T is projectively in C.
GateSet derived_set(const GateSet& group, const ProjectiveGate& t);

// Word over the alphabet C u {T}: group letters index into C, T letters
// are flagged.
struct WordLetter {
    int index = 0;   // index into the group when !is_t
    bool is_t = false;
};

struct Word {
    std::vector<WordLetter> letters;
    int t_count() const {
        int n = 0;
        for (const auto& l : letters) n += l.is_t ? 1 : 0;
        return n;
    }
};

// T-count-preserving rewrite of a word over C u {T} into a word over the
// derived set plus a residual group element. The rewritten word's letters
// index into derived_set(C, T), whose ordering follows C.
struct RewriteResult {
    Word word;                // every letter T-flagged, indexing the derived set
    ProjectiveGate residual;  // trailing group element
};
RewriteResult rewrite_to_derived(const Word& word, const GateSet& group,
                                 const ProjectiveGate& t);

// Named gates and generators.
std::vector<ProjectiveGate> clifford_generators();
std::vector<ProjectiveGate> hurwitz_generators();
GateSet clifford_group();
GateSet hurwitz_group();
ProjectiveGate phase_gate(double theta);  // P(theta) = diag(1, e^{i theta}), normalized
ProjectiveGate t24_gate();
ProjectiveGate t12_gate();

}  // namespace qco
