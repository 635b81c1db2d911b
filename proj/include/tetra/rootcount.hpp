#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "tetra/config.hpp"
#include "tetra/errors.hpp"
#include "tetra/mat2.hpp"

namespace tetra {

// Winding number of lambda -> f(lambda) around 0 along the circle
// |lambda - center| = radius, by summing principal phase increments.
// The sum over a closed sampled loop is an exact multiple of 2 pi as soon
// as every step stays well below pi, so the count is self-certifying:
// sampling doubles until the largest step is small and the sum snaps to an
// integer within 0.25.  The minimum modulus on the contour is guarded
// relative to the maximum, so small circles around zeros of high order
// stay admissible while contours through zeros are rejected.
template <typename F>
int winding_number(F&& f, Complex center, double radius,
                   const Tolerances& tol = Tolerances::defaults()) {
    constexpr std::size_t kStart = 2048;
    constexpr std::size_t kMax = 1 << 18;
    const double two_pi = 2.0 * 3.14159265358979323846;

    for (std::size_t n = kStart; n <= kMax; n *= 2) {
        double total = 0.0;
        double max_step = 0.0;
        double min_mod = 1e300;
        double max_mod = 0.0;
        Complex prev = f(center + Complex(radius, 0.0));
        min_mod = std::min(min_mod, std::abs(prev));
        max_mod = std::max(max_mod, std::abs(prev));
        bool ok = true;
        for (std::size_t k = 1; k <= n; ++k) {
            const double t = two_pi * static_cast<double>(k) / static_cast<double>(n);
            const Complex z = center + radius * Complex(std::cos(t), std::sin(t));
            const Complex v = f(z);
            const double mod = std::abs(v);
            min_mod = std::min(min_mod, mod);
            max_mod = std::max(max_mod, mod);
            if (min_mod < tol.contour * max_mod || max_mod < 1e-250) {
                throw ContourError("winding_number: contour passes too close to a zero"
                                   " (min modulus " + std::to_string(min_mod) + ")");
            }
            const double step = std::arg(v / prev);
            max_step = std::max(max_step, std::abs(step));
            total += step;
            prev = v;
            if (max_step > 2.0) {  // ambiguous phase step, refine
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        const double w = total / two_pi;
        const double snapped = std::round(w);
        if (std::abs(w - snapped) < 0.25) return static_cast<int>(snapped);
    }
    throw ContourError("winding_number: failed to certify an integer winding");
}

// Number of zeros of f in |lambda| < r, counted with multiplicity.
template <typename F>
int count_roots_in_disc(F&& f, double r,
                        const Tolerances& tol = Tolerances::defaults()) {
    return winding_number(std::forward<F>(f), Complex(0.0), r, tol);
}

// Vanishing order at lambda0 of an arbitrary scalar evaluator: winding count
// on a small circle, with a stability check at a shrunken radius.  Assumes
// lambda0 is isolated from other zeros at the working radius; `radius` can
// be passed by callers that know the zero separation.
template <typename F>
int vanishing_order_at(F&& f, Complex lambda0, double radius = 1e-3,
                       const Tolerances& tol = Tolerances::defaults()) {
    double r = radius;
    for (int attempt = 0; attempt < 8; ++attempt) {
        try {
            const int w1 = winding_number(
                [&](Complex z) { return f(z); }, lambda0, r, tol);
            const int w2 = winding_number(
                [&](Complex z) { return f(z); }, lambda0, r * 0.25, tol);
            if (w1 == w2) return w1;
        } catch (const ContourError&) {
            // fall through and shrink
        }
        r *= 0.1;
        if (r < 1e-9) break;
    }
    throw ContourError("vanishing_order_at: no stable winding around the point");
}

}  // namespace tetra
