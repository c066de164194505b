#pragma once

#include <cmath>
#include <numbers>

namespace hardy {

// Gamma function via the Lanczos approximation (g = 7, 9 coefficients),
// reflection formula for x < 1/2.  Relative error below ~2e-14 on the range
// this project touches (|x| <= 60); every downstream constant is checked
// against closed forms at that accuracy in the tests.
inline double gamma_fn(double x) {
    using std::numbers::pi;
    static constexpr double g = 7.0;
    static constexpr double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };

    if (x < 0.5) {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x); poles at x = 0, -1, -2, ...
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    }

    const double z = x - 1.0;
    double a = c[0];
    for (int i = 1; i < 9; ++i)
        a += c[i] / (z + static_cast<double>(i));
    const double t = z + g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

} // namespace hardy
