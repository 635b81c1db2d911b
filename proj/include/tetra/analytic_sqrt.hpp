#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include "tetra/disc_map.hpp"

namespace tetra {

// Analytic square root of a rational function with no zeros (and no
// denominator zeros) in the closed unit disc:
//
//   g(lambda) = g(0) exp( 1/2 Int_0^lambda f'/f )
//
// along the radial segment, composite Simpson with a doubling Richardson
// check.  Either branch of sqrt(f(0)) can be selected; both square to f.
class AnalyticSqrt {
  public:
    AnalyticSqrt(RationalScalar f, int branch_sign = +1,
                 const Tolerances& tol = Tolerances::defaults())
        : f_(std::move(f)), tol_(tol) {
        certify_zero_free_on_closed_disc(f_.num, tol_);
        const Complex f0 = f_(Complex(0.0));
        base_ = std::sqrt(f0);
        if (branch_sign < 0) base_ = -base_;
    }

    Complex operator()(Complex lambda) const {
        if (std::abs(lambda) < 1e-300) return base_;
        Complex coarse = integrate(lambda, kPanels / 2);
        for (std::size_t n = kPanels; n <= kMaxPanels; n *= 2) {
            const Complex fine = integrate(lambda, n);
            if (std::abs(fine - coarse) < 1e-12 * std::max(1.0, std::abs(fine)))
                return base_ * std::exp(0.5 * fine);
            coarse = fine;
        }
        return base_ * std::exp(0.5 * coarse);
    }

    const RationalScalar& function() const { return f_; }

  private:
    static constexpr std::size_t kPanels = 256;
    static constexpr std::size_t kMaxPanels = 16384;

    // Int_0^1 (f'/f)(t lambda) lambda dt by composite Simpson on n panels.
    Complex integrate(Complex lambda, std::size_t n) const {
        const double h = 1.0 / static_cast<double>(n);
        Complex sum = f_.log_derivative(Complex(0.0)) + f_.log_derivative(lambda);
        for (std::size_t k = 1; k < n; ++k) {
            const double t = h * static_cast<double>(k);
            sum += 2.0 * f_.log_derivative(t * lambda);
        }
        for (std::size_t k = 0; k < n; ++k) {
            const double t = h * (static_cast<double>(k) + 0.5);
            sum += 4.0 * f_.log_derivative(t * lambda);
        }
        return sum * (h / 6.0) * lambda;
    }

    RationalScalar f_;
    Tolerances tol_;
    Complex base_{};
};

}  // namespace tetra
