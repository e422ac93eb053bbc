#pragma once

#include <optional>
#include <string>

#include "critwell/geometry.hpp"
#include "critwell/profile.hpp"

namespace critwell {

/// K = sqrt(pi^2/3 + 1/4), the closed form of
/// sqrt(sum_{n>=2} (2n/(n^2-1))^2).
double constant_K();

/// Partial sum sqrt(sum_{n=2}^{N} (2n/(n^2-1))^2); monotone increasing in N,
/// always below the closed form. Throws for N < 2.
double constant_K_series(int N);

/// (3 + sqrt(9 + 4 K^2)) / 2; the existence condition reads z > z_threshold.
double z_threshold();

/// z = (pi/a)^2 ||f||^2 / ||f'||^2. Invariant under amplitude rescaling.
double compute_z(const Geometry& g, const Profile& p);

struct ConditionVerdict {
    bool nonexistence_applies = false;  ///< a > (4/sqrt(3)) b
    bool existence_applies = false;     ///< z > z_threshold
    bool nonexistence_boundary = false; ///< within 1e-12 of equality: theorem silent
    bool existence_boundary = false;
};

ConditionVerdict check_conditions(const Geometry& g, const Profile& p);

struct DConstants {
    double d0;  ///< (4 pi b / a^2)^2 - 3 (pi/a)^2
    double d1;  ///< (pi/a)^2 (z - 3 - K^2/z); positive iff z > z_threshold
};

DConstants compute_d_constants(const Geometry& g, const Profile& p);

struct GapBracket {
    std::optional<double> c1;  ///< d0^2 ||f||^4   (lower bound -c1 lambda^4), absent if d0 <= 0
    std::optional<double> c2;  ///< d1^2 ||f||^4/4 (upper bound -c2 lambda^4), absent if d1 <= 0
};

GapBracket gap_bracket(const Geometry& g, const Profile& p);

struct CriticalRatios {
    double nonexistence_ratio;  ///< 4/sqrt(3): no bound state for a/b above this
    double existence_ratio;     ///< sqrt(2/(3+sqrt(9+4K^2))): condition satisfiable below this
};

CriticalRatios critical_ratios();

/// Everything the `check` command reports for one (geometry, profile) pair.
struct TheoryReport {
    double a, b, lambda;
    double threshold;
    double K;
    double z;
    double z_threshold;
    double d0, d1;
    std::optional<double> c1, c2;
    double normf2, normfp2;
    bool nonexistence_applies;
    bool existence_applies;
    bool nonexistence_boundary;
    bool existence_boundary;
    std::string profile_kind;
};

TheoryReport theory_report(const Geometry& g, const Profile& p);

}  // namespace critwell
