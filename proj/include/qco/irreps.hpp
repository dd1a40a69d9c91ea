#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "qco/gates.hpp"

namespace qco {

using MatrixX = Eigen::MatrixXcd;

struct IrrepMatrix {
    int spin = 0;
    MatrixX entries;  // (2s+1) x (2s+1)
};

// Symmetric-power representation built incrementally: the ladder carries
// pi_j(U) and advances j by one half at a time through the stretched
// spin-1/2 coupling. Entries stay bounded by 1 throughout, so the
// construction is stable up to spin ~500, where direct evaluation of the
// degree-2s polynomial expansion cancels catastrophically.
class IrrepLadder {
  public:
    explicit IrrepLadder(const ProjectiveGate& u);

    void step();  // advance j -> j + 1/2

    int two_j() const { return two_j_; }
    const MatrixX& matrix() const { return cur_; }

  private:
    Matrix2 k_;   // the spin-1/2 block in weight order m = -1/2, +1/2
    MatrixX cur_;
    int two_j_ = 0;
};

// pi_s(U) in the orthonormal weight basis m = -s..s (diagonal U maps to
// diag(e^{2 i m theta})). Well-defined on PU(2) for integer s.
IrrepMatrix irrep(const ProjectiveGate& u, int s);

// trace(pi_s(U)); equals the Weyl character sin((2s+1)theta)/sin(theta).
std::complex<double> character(const ProjectiveGate& u, int s);

// Number of spin-s copies in the 2t-fold product of spin-1/2 factors:
// m_s = C(2t, t-s) - C(2t, t-s-1). Exact for every t that fits in a
// double's integer range; use log_irrep_multiplicity for weighting at
// large t.
double irrep_multiplicity(int s, int t);

// log m_s, safe for t up to the hundreds
double log_irrep_multiplicity(int s, int t);

// log of sum_{s>=1} m_s (2s+1) = log(4^t - m_0)
double log_nontrivial_dimension(int t);

}  // namespace qco
