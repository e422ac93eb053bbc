#pragma once

#include <numbers>
#include <stdexcept>

namespace critwell {

/// Strip width a, deformation half-support b, amplitude lambda.
/// The essential-spectrum threshold (pi/a)^2 is always derived, never stored.
struct Geometry {
    double a = 1.0;
    double b = 1.0;
    double lambda = 0.0;

    double threshold() const {
        const double k = std::numbers::pi / a;
        return k * k;
    }

    void check() const {
        if (!(a > 0.0)) throw std::invalid_argument("Geometry: strip width a must be positive");
        if (!(b > 0.0)) throw std::invalid_argument("Geometry: half-support b must be positive");
    }
};

}  // namespace critwell
