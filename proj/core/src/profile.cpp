#include "critwell/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace critwell {

namespace {
constexpr double kPi = std::numbers::pi;

// exp(-1/(1-t^2)) and derivatives via w = -1/(1-t^2):
//   g' = g w',  g'' = g (w'' + w'^2),  g''' = g (w''' + 3 w' w'' + w'^3)
struct BumpDerivs {
    double g1, g2, g3;  // first..third derivative of g at t
};

BumpDerivs bump_g_derivs(double t) {
    const double om = 1.0 - t * t;
    if (om <= 0.0) return {0.0, 0.0, 0.0};
    const double u = 1.0 / om;
    if (u >= 500.0) return {0.0, 0.0, 0.0};  // e^{-500} underflows any polynomial factor
    const double g = std::exp(-u);
    const double w1 = -2.0 * t * u * u;
    const double w2 = -2.0 * u * u - 8.0 * t * t * u * u * u;
    const double w3 = -24.0 * t * u * u * u - 48.0 * t * t * t * u * u * u * u;
    return {g * w1, g * (w2 + w1 * w1), g * (w3 + 3.0 * w1 * w2 + w1 * w1 * w1)};
}
}  // namespace

const char* to_string(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::Sine: return "sine";
        case ProfileKind::BumpDerivative: return "bump-derivative";
        case ProfileKind::Tabulated: return "tabulated";
    }
    return "?";
}

struct Profile::TabulatedData {
    std::vector<double> x;
    std::vector<double> f;   // mean-projected samples
    std::vector<double> m;   // natural-spline second derivatives
};

Profile::Profile(ProfileKind kind, double b, double amplitude)
    : kind_(kind), b_(b), amplitude_(amplitude) {}

Profile Profile::sine(double b, double amplitude) {
    if (!(b > 0.0)) throw std::invalid_argument("Profile: half-support b must be positive");
    if (amplitude == 0.0) throw std::invalid_argument("Profile: amplitude must be nonzero");
    return Profile(ProfileKind::Sine, b, amplitude);
}

Profile Profile::bump_derivative(double b, double amplitude) {
    if (!(b > 0.0)) throw std::invalid_argument("Profile: half-support b must be positive");
    if (amplitude == 0.0) throw std::invalid_argument("Profile: amplitude must be nonzero");
    return Profile(ProfileKind::BumpDerivative, b, amplitude);
}

Profile Profile::tabulated(std::vector<double> x, std::vector<double> f, double amplitude) {
    if (amplitude == 0.0) throw std::invalid_argument("Profile: amplitude must be nonzero");
    const std::size_t n = x.size();
    if (n < 4 || f.size() != n)
        throw std::invalid_argument("Profile: tabulated input needs >= 4 matching samples");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x[i] > x[i - 1]))
            throw std::invalid_argument("Profile: tabulated x must be strictly increasing");

    // mean projection: subtract the sample trapezoid mean
    double integral = 0.0;
    for (std::size_t i = 1; i < n; ++i)
        integral += 0.5 * (f[i] + f[i - 1]) * (x[i] - x[i - 1]);
    const double span = x.back() - x.front();
    const double mean = integral / span;
    double scale = 0.0;
    for (double v : f) scale = std::max(scale, std::abs(v));
    scale = std::max(scale, 1.0);
    for (double& v : f) v -= mean;
    if (std::abs(f.front()) > 1e-9 * scale || std::abs(f.back()) > 1e-9 * scale)
        throw std::invalid_argument(
            "Profile: tabulated mean exceeds tolerance and cannot be mean-projected "
            "(projection moved the endpoint values off zero)");
    f.front() = f.back() = 0.0;

    // natural cubic spline second derivatives (Thomas algorithm)
    std::vector<double> m(n, 0.0), cp(n, 0.0), dp(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x[i] - x[i - 1], h1 = x[i + 1] - x[i];
        const double diag = 2.0 * (h0 + h1);
        const double rhs = 6.0 * ((f[i + 1] - f[i]) / h1 - (f[i] - f[i - 1]) / h0);
        if (i == 1) {
            cp[i] = h1 / diag;
            dp[i] = rhs / diag;
        } else {
            const double denom = diag - h0 * cp[i - 1];
            cp[i] = h1 / denom;
            dp[i] = (rhs - h0 * dp[i - 1]) / denom;
        }
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m[i] = dp[i] - cp[i] * m[i + 1];
        if (i == 1) break;
    }

    const double b = std::max(std::abs(x.front()), std::abs(x.back()));
    Profile p(ProfileKind::Tabulated, b, amplitude);
    auto data = std::make_shared<TabulatedData>();
    data->x = std::move(x);
    data->f = std::move(f);
    data->m = std::move(m);
    p.table_ = std::move(data);
    return p;
}

Profile Profile::from_file(const std::string& path, double amplitude) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("Profile: cannot open table file: " + path);
    std::vector<double> xs, fs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double x, f;
        if (!(ss >> x)) continue;  // blank or comment-only line
        if (!(ss >> f))
            throw std::runtime_error("Profile: " + path + ":" + std::to_string(lineno) +
                                     ": expected two columns (x f)");
        xs.push_back(x);
        fs.push_back(f);
    }
    return tabulated(std::move(xs), std::move(fs), amplitude);
}

double Profile::evaluate(double x, int order) const {
    if (order < 0 || order > 2) throw std::invalid_argument("Profile::evaluate: order must be 0, 1 or 2");
    const double ax = std::abs(x);
    if (ax > b_) return 0.0;
    const bool on_edge = (ax == b_);

    switch (kind_) {
        case ProfileKind::Sine: {
            const double k = kPi / b_;
            double v;
            if (order == 0) v = amplitude_ * std::sin(k * x);
            else if (order == 1) v = amplitude_ * k * std::cos(k * x);
            else v = -amplitude_ * k * k * std::sin(k * x);
            // mean of the one-sided limits at the edge kink
            return on_edge ? 0.5 * v : v;
        }
        case ProfileKind::BumpDerivative: {
            if (on_edge) return 0.0;
            const double t = x / b_;
            const auto d = bump_g_derivs(t);
            if (order == 0) return amplitude_ / b_ * d.g1;
            if (order == 1) return amplitude_ / (b_ * b_) * d.g2;
            return amplitude_ / (b_ * b_ * b_) * d.g3;
        }
        case ProfileKind::Tabulated: {
            const auto& t = *table_;
            if (x < t.x.front() || x > t.x.back()) return 0.0;
            auto it = std::upper_bound(t.x.begin(), t.x.end(), x);
            std::size_t i = (it == t.x.begin()) ? 0 : (it - t.x.begin() - 1);
            if (i + 1 >= t.x.size()) i = t.x.size() - 2;
            const double h = t.x[i + 1] - t.x[i];
            const double A = (t.x[i + 1] - x) / h, B = (x - t.x[i]) / h;
            if (order == 0) {
                const double v = A * t.f[i] + B * t.f[i + 1] +
                                 ((A * A * A - A) * t.m[i] + (B * B * B - B) * t.m[i + 1]) * h * h / 6.0;
                return amplitude_ * v;
            }
            if (order == 1) {
                const double v = (t.f[i + 1] - t.f[i]) / h -
                                 (3.0 * A * A - 1.0) / 6.0 * h * t.m[i] +
                                 (3.0 * B * B - 1.0) / 6.0 * h * t.m[i + 1];
                return amplitude_ * v;
            }
            return amplitude_ * (A * t.m[i] + B * t.m[i + 1]);
        }
    }
    return 0.0;
}

Profile Profile::scaled(double factor) const {
    if (factor == 0.0) throw std::invalid_argument("Profile::scaled: zero factor");
    Profile p(*this);
    p.amplitude_ *= factor;
    return p;
}

double Profile::min_value() const {
    switch (kind_) {
        case ProfileKind::Sine: return -std::abs(amplitude_);
        case ProfileKind::BumpDerivative: {
            // extrema of (d/dx) exp(-1/(1-t^2)) at t = +-sqrt(sqrt(5)-2) (w''+w'^2 = 0)
            const double t0 = std::sqrt(std::sqrt(5.0) - 2.0);
            const double peak = std::abs(bump_g_derivs(t0).g1 / b_ * amplitude_);
            return -peak;
        }
        case ProfileKind::Tabulated: {
            double lo = 0.0;
            const int n = 4096;
            for (int i = 0; i <= n; ++i)
                lo = std::min(lo, evaluate(-b_ + 2.0 * b_ * i / n, 0));
            return lo;
        }
    }
    return 0.0;
}

double Profile::max_value() const {
    switch (kind_) {
        case ProfileKind::Sine: return std::abs(amplitude_);
        case ProfileKind::BumpDerivative: return -min_value();
        case ProfileKind::Tabulated: {
            double hi = 0.0;
            const int n = 4096;
            for (int i = 0; i <= n; ++i)
                hi = std::max(hi, evaluate(-b_ + 2.0 * b_ * i / n, 0));
            return hi;
        }
    }
    return 0.0;
}

Profile make_profile(ProfileKind kind, double b, double amplitude) {
    switch (kind) {
        case ProfileKind::Sine: return Profile::sine(b, amplitude);
        case ProfileKind::BumpDerivative: return Profile::bump_derivative(b, amplitude);
        case ProfileKind::Tabulated:
            throw std::invalid_argument("make_profile: tabulated profiles come from Profile::tabulated/from_file");
    }
    throw std::invalid_argument("make_profile: unknown kind");
}

Quadrature default_profile_quadrature(const Profile& p) {
    return Quadrature::gauss_legendre(16, 64, -p.half_support(), p.half_support());
}

ProfileNorms norms_and_mean(const Profile& p, const Quadrature& q) {
    const double b = p.half_support();
    if (q.lo() > -b + 1e-14 || q.hi() < b - 1e-14)
        throw std::invalid_argument("norms_and_mean: quadrature interval does not cover [-b, b]");
    ProfileNorms out{};
    out.normf2 = q.integrate([&](double x) { const double v = p.evaluate(x, 0); return v * v; });
    out.normfp2 = q.integrate([&](double x) { const double v = p.evaluate(x, 1); return v * v; });
    out.mean = q.integrate([&](double x) { return p.evaluate(x, 0); });
    return out;
}

ProfileNorms norms_and_mean(const Profile& p) {
    return norms_and_mean(p, default_profile_quadrature(p));
}

ValidationReport validate(const Profile& p, double lambda) {
    ValidationReport r;
    const double b = p.half_support();
    const auto norms = norms_and_mean(p);
    r.mean = norms.mean;
    const double mean_tol = 1e-12 * std::max(1.0, std::sqrt(norms.normf2) * 2.0 * b);
    r.zero_mean = std::abs(norms.mean) <= mean_tol;
    if (!r.zero_mean) r.failures.push_back("zero-mean violated");

    r.support_contained = true;
    for (double x : {1.0 + 1e-12, 1.5, 2.0, 10.0}) {
        for (int order = 0; order <= 2; ++order) {
            if (p.evaluate(x * b, order) != 0.0 || p.evaluate(-x * b, order) != 0.0) {
                r.support_contained = false;
            }
        }
    }
    if (!r.support_contained) r.failures.push_back("support exceeds [-b, b]");

    const double edge_tol = 1e-10 * std::max(1.0, std::abs(p.min_value()));
    r.endpoints_zero = std::abs(p.evaluate(b, 0)) <= edge_tol && std::abs(p.evaluate(-b, 0)) <= edge_tol;
    if (!r.endpoints_zero) r.failures.push_back("f(+-b) != 0");

    const double fmin = p.min_value(), fmax = p.max_value();
    r.min_scale = 1.0 + std::min(lambda * fmin, lambda * fmax);
    r.nondegenerate = r.min_scale > 0.0;
    if (!r.nondegenerate) r.failures.push_back("degenerate strip: min(1 + lambda f) <= 0");

    r.c1_limited = (p.kind() == ProfileKind::Sine);
    return r;
}

}  // namespace critwell
