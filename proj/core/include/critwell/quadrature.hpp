#pragma once

#include <span>
#include <vector>

namespace critwell {

enum class QuadratureKind { GaussLegendreComposite, Trapezoid };

/// A fixed quadrature rule on an interval [lo, hi]: positive weights,
/// nodes in ascending order.
class Quadrature {
public:
    Quadrature(QuadratureKind kind, int panels, double lo, double hi,
               std::vector<double> nodes, std::vector<double> weights);

    /// Composite Gauss-Legendre rule: `points` nodes on each of `panels`
    /// equal panels. Exact on polynomials of degree 2*points-1 per panel.
    static Quadrature gauss_legendre(int points, int panels, double lo, double hi);

    /// Composite Gauss-Legendre with panel edges aligned to `breaks`
    /// (interior breakpoints of the integrand, e.g. support edges).
    static Quadrature gauss_legendre_segmented(int points, int panels_per_segment,
                                               std::span<const double> breaks);

    static Quadrature trapezoid(int intervals, double lo, double hi);

    QuadratureKind kind() const { return kind_; }
    int panels() const { return panels_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    template <class F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * f(nodes_[i]);
        return acc;
    }

private:
    QuadratureKind kind_;
    int panels_;
    double lo_, hi_;
    std::vector<double> nodes_, weights_;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre_reference(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace critwell
