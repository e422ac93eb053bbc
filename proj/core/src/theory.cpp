#include "critwell/theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace critwell {

namespace {
constexpr double kPi = std::numbers::pi;

double require_nonzero_norms(const Geometry& g, const Profile& p, ProfileNorms& out) {
    g.check();
    out = norms_and_mean(p);
    if (!(out.normfp2 > 0.0) || !(out.normf2 > 0.0))
        throw std::invalid_argument("theory: profile is identically zero");
    return out.normf2;
}
}  // namespace

double constant_K() { return std::sqrt(kPi * kPi / 3.0 + 0.25); }

double constant_K_series(int N) {
    if (N < 2) throw std::invalid_argument("constant_K_series: need N >= 2");
    double sum = 0.0;
    // sum smallest terms first
    for (int n = N; n >= 2; --n) {
        const double t = 2.0 * n / (static_cast<double>(n) * n - 1.0);
        sum += t * t;
    }
    return std::sqrt(sum);
}

double z_threshold() {
    const double K = constant_K();
    return 0.5 * (3.0 + std::sqrt(9.0 + 4.0 * K * K));
}

double compute_z(const Geometry& g, const Profile& p) {
    ProfileNorms norms;
    require_nonzero_norms(g, p, norms);
    const double k = kPi / g.a;
    return k * k * norms.normf2 / norms.normfp2;
}

ConditionVerdict check_conditions(const Geometry& g, const Profile& p) {
    ConditionVerdict v;
    const double z = compute_z(g, p);
    const double zthr = z_threshold();
    const double rhs = (4.0 / std::sqrt(3.0)) * g.b;

    // strict inequalities, as the theorems state them; near-equality is
    // flagged as boundary (theorem silent) instead of a verdict
    const double ne_margin = g.a - rhs;
    v.nonexistence_boundary = std::abs(ne_margin) <= 1e-12 * std::max(g.a, rhs);
    v.nonexistence_applies = !v.nonexistence_boundary && ne_margin > 0.0;

    const double ex_margin = z - zthr;
    v.existence_boundary = std::abs(ex_margin) <= 1e-12 * std::max(z, zthr);
    v.existence_applies = !v.existence_boundary && ex_margin > 0.0;
    return v;
}

DConstants compute_d_constants(const Geometry& g, const Profile& p) {
    const double z = compute_z(g, p);
    const double k = kPi / g.a;
    const double t = 4.0 * kPi * g.b / (g.a * g.a);
    const double K = constant_K();
    DConstants d;
    d.d0 = t * t - 3.0 * k * k;
    d.d1 = k * k * (z - 3.0 - K * K / z);
    return d;
}

GapBracket gap_bracket(const Geometry& g, const Profile& p) {
    ProfileNorms norms;
    require_nonzero_norms(g, p, norms);
    const auto d = compute_d_constants(g, p);
    const double nf4 = norms.normf2 * norms.normf2;
    GapBracket br;
    if (d.d0 > 0.0) br.c1 = d.d0 * d.d0 * nf4;
    if (d.d1 > 0.0) br.c2 = d.d1 * d.d1 * nf4 / 4.0;
    return br;
}

CriticalRatios critical_ratios() {
    const double K = constant_K();
    return {4.0 / std::sqrt(3.0), std::sqrt(2.0 / (3.0 + std::sqrt(9.0 + 4.0 * K * K)))};
}

TheoryReport theory_report(const Geometry& g, const Profile& p) {
    TheoryReport r{};
    r.a = g.a;
    r.b = g.b;
    r.lambda = g.lambda;
    r.threshold = g.threshold();
    r.K = constant_K();
    r.z = compute_z(g, p);
    r.z_threshold = z_threshold();
    const auto d = compute_d_constants(g, p);
    r.d0 = d.d0;
    r.d1 = d.d1;
    const auto br = gap_bracket(g, p);
    r.c1 = br.c1;
    r.c2 = br.c2;
    const auto norms = norms_and_mean(p);
    r.normf2 = norms.normf2;
    r.normfp2 = norms.normfp2;
    const auto v = check_conditions(g, p);
    r.nonexistence_applies = v.nonexistence_applies;
    r.existence_applies = v.existence_applies;
    r.nonexistence_boundary = v.nonexistence_boundary;
    r.existence_boundary = v.existence_boundary;
    r.profile_kind = to_string(p.kind());
    return r;
}

}  // namespace critwell
