#pragma once

#include <memory>
#include <string>
#include <vector>

#include "critwell/quadrature.hpp"

namespace critwell {

enum class ProfileKind { Sine, BumpDerivative, Tabulated };

const char* to_string(ProfileKind kind);

struct ProfileNorms {
    double normf2;   ///< ||f||^2 on [-b, b]
    double normfp2;  ///< ||f'||^2 on [-b, b]
    double mean;     ///< integral of f over [-b, b]
};

struct ValidationReport {
    bool zero_mean = false;
    bool support_contained = false;
    bool endpoints_zero = false;
    bool nondegenerate = false;
    bool c1_limited = false;      ///< sine kind: f' jumps at the support edges
    double mean = 0.0;
    double min_scale = 0.0;       ///< min over x of 1 + lambda*f(x)
    std::vector<std::string> failures;
    bool pass() const { return zero_mean && support_contained && endpoints_zero && nondegenerate; }
};

/// Compactly supported zero-mean boundary deformation profile.
///
/// f vanishes identically outside [-b, b]; at x = +-b exactly, derivative
/// orders return the mean of the one-sided limits (this keeps trapezoid
/// assembly of coefficient integrals second-order when a grid node lands
/// on a support edge).
class Profile {
public:
    static Profile sine(double b, double amplitude);
    static Profile bump_derivative(double b, double amplitude);

    /// Tabulated profile on a strictly increasing grid. Values are
    /// mean-projected (sample trapezoid mean subtracted) and interpolated
    /// with a natural cubic spline; throws if the projection leaves the
    /// endpoint values away from zero.
    static Profile tabulated(std::vector<double> x, std::vector<double> f, double amplitude = 1.0);

    /// Reads a two-column whitespace-separated text table (# comments).
    static Profile from_file(const std::string& path, double amplitude = 1.0);

    /// f, f' or f'' at x; exactly zero for |x| > b.
    double evaluate(double x, int order) const;
    double operator()(double x) const { return evaluate(x, 0); }

    ProfileKind kind() const { return kind_; }
    double half_support() const { return b_; }
    double amplitude() const { return amplitude_; }

    /// Returns a copy with the amplitude multiplied by `factor`.
    Profile scaled(double factor) const;

    /// False for the sine kind, whose f'' has point masses at +-b; form
    /// evaluation then switches to the integrated-by-parts path.
    bool has_smooth_second_derivative() const { return kind_ != ProfileKind::Sine; }

    /// Exact global minimum of f for the built-in kinds; grid-refined for
    /// tabulated profiles.
    double min_value() const;
    double max_value() const;

private:
    struct TabulatedData;
    Profile(ProfileKind kind, double b, double amplitude);

    ProfileKind kind_;
    double b_;
    double amplitude_;
    std::shared_ptr<const TabulatedData> table_;
};

Profile make_profile(ProfileKind kind, double b, double amplitude);

/// Default profile quadrature: composite Gauss-Legendre, 16 points x 64
/// panels on [-b, b] (resolves the bump-derivative boundary layers).
Quadrature default_profile_quadrature(const Profile& p);

ProfileNorms norms_and_mean(const Profile& p, const Quadrature& q);
ProfileNorms norms_and_mean(const Profile& p);

ValidationReport validate(const Profile& p, double lambda);

}  // namespace critwell
