#pragma once

#include <Eigen/Dense>

#include "critwell/quadrature.hpp"

namespace critwell {

/// Dirichlet transverse modes chi_n(v) = sqrt(2/a) sin(pi n v / a), n = 1..N.
class ModeBasis {
public:
    ModeBasis(double a, int N);

    double width() const { return a_; }
    int size() const { return N_; }

    double chi(int n, double v) const;    ///< n in 1..N
    double dchi(int n, double v) const;
    double mode_rate(int n) const;        ///< pi n / a

    /// Quadrature rule resolving products of basis functions to ~1e-13.
    const Quadrature& rule() const { return rule_; }

private:
    double a_;
    int N_;
    Quadrature rule_;
};

enum class TransverseKind { Mass, YDChi, Y2GradGrad, GradGrad };

/// Transverse matrix elements over [0, a], computed by quadrature:
///   mass       = (chi_m, chi_n)
///   ydchi      = (v chi_m', chi_n)
///   y2gradgrad = (v^2 chi_m', chi_n')
///   gradgrad   = (chi_m', chi_n')
/// Closed forms serve as test oracles, not as the code path.
double transverse_element(TransverseKind kind, int m, int n, const ModeBasis& basis);

/// All four element tables for a basis, computed once and shared read-only.
struct TransverseTable {
    Eigen::MatrixXd mass, ydchi, y2gradgrad, gradgrad;
    explicit TransverseTable(const ModeBasis& basis);
};

}  // namespace critwell
