#include "critwell/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace critwell {

void gauss_legendre_reference(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_reference: need n >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on P_n, started from the Chebyshev-like estimate
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

Quadrature::Quadrature(QuadratureKind kind, int panels, double lo, double hi,
                       std::vector<double> nodes, std::vector<double> weights)
    : kind_(kind), panels_(panels), lo_(lo), hi_(hi),
      nodes_(std::move(nodes)), weights_(std::move(weights)) {
    if (nodes_.size() != weights_.size())
        throw std::invalid_argument("Quadrature: node/weight size mismatch");
}

Quadrature Quadrature::gauss_legendre(int points, int panels, double lo, double hi) {
    if (points < 1 || panels < 1) throw std::invalid_argument("gauss_legendre: bad rule size");
    if (!(hi > lo)) throw std::invalid_argument("gauss_legendre: empty interval");
    std::vector<double> xr, wr;
    gauss_legendre_reference(points, xr, wr);
    std::vector<double> nodes, weights;
    nodes.reserve(static_cast<std::size_t>(points) * panels);
    weights.reserve(static_cast<std::size_t>(points) * panels);
    const double hpanel = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * hpanel;
        const double half = 0.5 * hpanel;
        for (int i = 0; i < points; ++i) {
            nodes.push_back(mid + half * xr[i]);
            weights.push_back(half * wr[i]);
        }
    }
    return Quadrature(QuadratureKind::GaussLegendreComposite, panels, lo, hi,
                      std::move(nodes), std::move(weights));
}

Quadrature Quadrature::gauss_legendre_segmented(int points, int panels_per_segment,
                                                std::span<const double> breaks) {
    if (breaks.size() < 2) throw std::invalid_argument("gauss_legendre_segmented: need >= 2 breakpoints");
    std::vector<double> xr, wr;
    gauss_legendre_reference(points, xr, wr);
    std::vector<double> nodes, weights;
    int total_panels = 0;
    for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
        const double a = breaks[s], b = breaks[s + 1];
        if (!(b > a)) throw std::invalid_argument("gauss_legendre_segmented: breakpoints not increasing");
        const double hpanel = (b - a) / panels_per_segment;
        for (int p = 0; p < panels_per_segment; ++p) {
            const double mid = a + (p + 0.5) * hpanel;
            const double half = 0.5 * hpanel;
            for (int i = 0; i < points; ++i) {
                nodes.push_back(mid + half * xr[i]);
                weights.push_back(half * wr[i]);
            }
        }
        total_panels += panels_per_segment;
    }
    return Quadrature(QuadratureKind::GaussLegendreComposite, total_panels,
                      breaks.front(), breaks.back(), std::move(nodes), std::move(weights));
}

Quadrature Quadrature::trapezoid(int intervals, double lo, double hi) {
    if (intervals < 1) throw std::invalid_argument("trapezoid: need >= 1 interval");
    if (!(hi > lo)) throw std::invalid_argument("trapezoid: empty interval");
    const double h = (hi - lo) / intervals;
    std::vector<double> nodes(intervals + 1), weights(intervals + 1, h);
    for (int i = 0; i <= intervals; ++i) nodes[i] = lo + i * h;
    weights.front() = weights.back() = 0.5 * h;
    return Quadrature(QuadratureKind::Trapezoid, intervals, lo, hi,
                      std::move(nodes), std::move(weights));
}

}  // namespace critwell
