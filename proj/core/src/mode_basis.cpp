#include "critwell/mode_basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace critwell {

namespace {
constexpr double kPi = std::numbers::pi;

Quadrature make_mode_rule(double a, int N) {
    // two modes of highest order multiply to ~2N oscillations; 24-point
    // panels with one panel per few oscillations keep products at ~1e-15
    const int panels = std::max(4, (N + 3) / 2);
    return Quadrature::gauss_legendre(24, panels, 0.0, a);
}
}  // namespace

ModeBasis::ModeBasis(double a, int N) : a_(a), N_(N), rule_(make_mode_rule(a, N)) {
    if (!(a > 0.0)) throw std::invalid_argument("ModeBasis: width must be positive");
    if (N < 1) throw std::invalid_argument("ModeBasis: need at least one mode");
}

double ModeBasis::chi(int n, double v) const {
    return std::sqrt(2.0 / a_) * std::sin(kPi * n * v / a_);
}

double ModeBasis::dchi(int n, double v) const {
    const double k = kPi * n / a_;
    return std::sqrt(2.0 / a_) * k * std::cos(k * v);
}

double ModeBasis::mode_rate(int n) const { return kPi * n / a_; }

double transverse_element(TransverseKind kind, int m, int n, const ModeBasis& basis) {
    if (m < 1 || n < 1 || m > basis.size() || n > basis.size())
        throw std::invalid_argument("transverse_element: mode index out of range");
    const auto& q = basis.rule();
    switch (kind) {
        case TransverseKind::Mass:
            return q.integrate([&](double v) { return basis.chi(m, v) * basis.chi(n, v); });
        case TransverseKind::YDChi:
            return q.integrate([&](double v) { return v * basis.dchi(m, v) * basis.chi(n, v); });
        case TransverseKind::Y2GradGrad:
            return q.integrate([&](double v) { return v * v * basis.dchi(m, v) * basis.dchi(n, v); });
        case TransverseKind::GradGrad:
            return q.integrate([&](double v) { return basis.dchi(m, v) * basis.dchi(n, v); });
    }
    throw std::invalid_argument("transverse_element: unknown kind");
}

TransverseTable::TransverseTable(const ModeBasis& basis) {
    const int N = basis.size();
    mass.resize(N, N);
    ydchi.resize(N, N);
    y2gradgrad.resize(N, N);
    gradgrad.resize(N, N);
    for (int m = 1; m <= N; ++m) {
        for (int n = 1; n <= N; ++n) {
            mass(m - 1, n - 1) = transverse_element(TransverseKind::Mass, m, n, basis);
            ydchi(m - 1, n - 1) = transverse_element(TransverseKind::YDChi, m, n, basis);
            y2gradgrad(m - 1, n - 1) = transverse_element(TransverseKind::Y2GradGrad, m, n, basis);
            gradgrad(m - 1, n - 1) = transverse_element(TransverseKind::GradGrad, m, n, basis);
        }
    }
}

}  // namespace critwell
