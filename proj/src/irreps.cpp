#include "qco/irreps.hpp"

#include <cmath>
#include <vector>

namespace qco {

IrrepLadder::IrrepLadder(const ProjectiveGate& u) {
    const Matrix2& m = u.matrix();
    // spin-1/2 block in weight order (m = -1/2, +1/2): rows/cols of U reversed
    k_ << m(1, 1), m(1, 0),
          m(0, 1), m(0, 0);
    cur_ = MatrixX::Ones(1, 1);
}

void IrrepLadder::step() {
    const int two_j = two_j_ + 1;       // target 2j
    const int n = two_j + 1;            // target dimension
    // cp[a] = sqrt(a / 2j), cm[a] = sqrt((2j - a) / 2j): stretched
    // Clebsch-Gordan coefficients for coupling with a spin-1/2 factor.
    Eigen::VectorXd cp(n), cm(n);
    for (int a = 0; a < n; ++a) {
        cp[a] = std::sqrt(static_cast<double>(a) / two_j);
        cm[a] = std::sqrt(static_cast<double>(two_j - a) / two_j);
    }

    MatrixX next = MatrixX::Zero(n, n);
    const int p = n - 1;  // previous dimension
    for (int a = 0; a < n; ++a) {
        auto row = next.row(a);
        if (a >= 1) {
            auto prev_row = cur_.row(a - 1);
            row.segment(1, p).array() +=
                (k_(1, 1) * cp[a]) * (prev_row.array() * cp.segment(1, p).transpose().array());
            row.segment(0, p).array() +=
                (k_(1, 0) * cp[a]) * (prev_row.array() * cm.segment(0, p).transpose().array());
        }
        if (a <= p - 1) {
            auto prev_row = cur_.row(a);
            row.segment(1, p).array() +=
                (k_(0, 1) * cm[a]) * (prev_row.array() * cp.segment(1, p).transpose().array());
            row.segment(0, p).array() +=
                (k_(0, 0) * cm[a]) * (prev_row.array() * cm.segment(0, p).transpose().array());
        }
    }
    cur_.swap(next);
    two_j_ = two_j;
}

IrrepMatrix irrep(const ProjectiveGate& u, int s) {
    if (s < 0) throw OutOfRange("irrep: spin must be >= 0");
    IrrepLadder ladder(u);
    while (ladder.two_j() < 2 * s) ladder.step();
    return {s, ladder.matrix()};
}

std::complex<double> character(const ProjectiveGate& u, int s) {
    return irrep(u, s).entries.trace();
}

double log_irrep_multiplicity(int s, int t) {
    if (s < 0 || t < 1 || s > t) throw OutOfRange("irrep_multiplicity: need 0 <= s <= t");
    // m_s = C(2t, t-s) (2s+1) / (t+s+1)
    return std::lgamma(2.0 * t + 1) - std::lgamma(t - s + 1.0) - std::lgamma(t + s + 1.0) +
           std::log(2.0 * s + 1) - std::log(t + s + 1.0);
}

double irrep_multiplicity(int s, int t) {
    double v = std::exp(log_irrep_multiplicity(s, t));
    // snap to the exact integer where it is representable
    if (v < 9e15) return std::round(v);
    return v;
}

double log_nontrivial_dimension(int t) {
    double log4t = t * std::log(4.0);
    double log_m0 = log_irrep_multiplicity(0, t);
    return log4t + std::log1p(-std::exp(log_m0 - log4t));
}

}  // namespace qco
