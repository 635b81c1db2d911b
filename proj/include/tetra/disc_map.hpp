#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tetra/polynomial.hpp"
#include "tetra/rootcount.hpp"

namespace tetra {

// One coordinate of a rational analytic disc.
struct RationalScalar {
    Poly num{Complex(0.0)};
    Poly den{Complex(1.0)};

    Complex operator()(Complex lambda) const {
        return poly_eval(num, lambda) / poly_eval(den, lambda);
    }

    // Logarithmic derivative f'/f, defined away from zeros of num and den.
    Complex log_derivative(Complex lambda) const {
        const Complex n = poly_eval(num, lambda);
        const Complex d = poly_eval(den, lambda);
        const Complex dn = poly_eval(poly_derivative(num), lambda);
        const Complex dd = poly_eval(poly_derivative(den), lambda);
        return dn / n - dd / d;
    }

    Complex derivative_at(Complex lambda) const {
        const Complex n = poly_eval(num, lambda);
        const Complex d = poly_eval(den, lambda);
        const Complex dn = poly_eval(poly_derivative(num), lambda);
        const Complex dd = poly_eval(poly_derivative(den), lambda);
        return (dn * d - n * dd) / (d * d);
    }

    RationalScalar multiply(const RationalScalar& o) const {
        return {poly_mul(num, o.num), poly_mul(den, o.den)};
    }

    bool has_trivial_den(double tol_zero = 1e-12) const {
        if (den.empty()) return false;
        if (std::abs(den[0] - Complex(1.0)) > tol_zero) return false;
        for (std::size_t i = 1; i < den.size(); ++i)
            if (std::abs(den[i]) > tol_zero) return false;
        return true;
    }
};

// Certify that a polynomial has no roots in |lambda| <= 1, by a winding
// count at radius 1 + den_eps.  Constants pass trivially.
inline void certify_zero_free_on_closed_disc(
    const Poly& p, const Tolerances& tol = Tolerances::defaults()) {
    if (poly_is_zero(p, tol.zero))
        throw DegenerateInputError("certify_zero_free: identically zero polynomial");
    std::size_t deg = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (std::abs(p[i]) > tol.zero) deg = i;
    if (deg == 0) return;
    const int n = count_roots_in_disc([&](Complex z) { return poly_eval(p, z); },
                                      1.0 + tol.den_eps, tol);
    if (n != 0)
        throw DomainError("polynomial has a root in the closed unit disc");
}

// Rational analytic disc with values in C^k: one numerator per coordinate
// and either a shared denominator or one per coordinate.  Construction
// certifies that no denominator vanishes on the closed unit disc.
class DiscMap {
  public:
    DiscMap() = default;

    DiscMap(std::vector<Poly> numerators, std::vector<Poly> denominators,
            const Tolerances& tol = Tolerances::defaults())
        : num_(std::move(numerators)), den_(std::move(denominators)) {
        if (num_.empty()) throw ParameterError("DiscMap: no coordinates");
        if (den_.empty()) den_ = {Poly{Complex(1.0)}};
        if (den_.size() != 1 && den_.size() != num_.size())
            throw ParameterError("DiscMap: denominator count must be 1 or match");
        for (const auto& d : den_) certify_zero_free_on_closed_disc(d, tol);
    }

    static DiscMap polynomial(std::vector<Poly> numerators) {
        return DiscMap(std::move(numerators), {});
    }

    static DiscMap scalar(Poly numerator, Poly denominator = {Complex(1.0)}) {
        return DiscMap({std::move(numerator)}, {std::move(denominator)});
    }

    std::size_t size() const { return num_.size(); }

    const Poly& numerator(std::size_t i) const { return num_[i]; }
    const Poly& denominator(std::size_t i) const {
        return den_.size() == 1 ? den_[0] : den_[i];
    }
    bool shared_denominator() const { return den_.size() == 1; }

    RationalScalar coordinate(std::size_t i) const {
        return {num_[i], denominator(i)};
    }

    Complex eval_coordinate(std::size_t i, Complex lambda) const {
        return poly_eval(num_[i], lambda) / poly_eval(denominator(i), lambda);
    }

    std::vector<Complex> eval(Complex lambda) const {
        std::vector<Complex> v(num_.size());
        for (std::size_t i = 0; i < num_.size(); ++i)
            v[i] = eval_coordinate(i, lambda);
        return v;
    }

  private:
    std::vector<Poly> num_{};
    std::vector<Poly> den_{};
};

// f1 f2 - f3 of a 3-coordinate disc as a single rational function.  The
// denominator is zero free on the closed disc by the DiscMap invariant, so
// zeros in the disc are zeros of the numerator.
inline RationalScalar triangular_defect(const DiscMap& f) {
    if (f.size() != 3)
        throw ParameterError("triangular_defect: needs a 3-coordinate disc");
    const Poly n1 = f.numerator(0), n2 = f.numerator(1), n3 = f.numerator(2);
    const Poly d1 = f.denominator(0), d2 = f.denominator(1), d3 = f.denominator(2);
    if (f.shared_denominator()) {
        // (n1 n2 - n3 d) / d^2
        return {poly_sub(poly_mul(n1, n2), poly_mul(n3, d1)), poly_mul(d1, d1)};
    }
    return {poly_sub(poly_mul(poly_mul(n1, n2), d3), poly_mul(n3, poly_mul(d1, d2))),
            poly_mul(poly_mul(d1, d2), d3)};
}

// Vanishing order of a scalar rational disc at lambda0 in the open disc,
// certified by an argument-principle winding count on a small circle.
inline int vanishing_order(const DiscMap& f, Complex lambda0,
                           const Tolerances& tol = Tolerances::defaults()) {
    if (f.size() != 1)
        throw ParameterError("vanishing_order: needs a scalar disc");
    if (poly_is_zero(f.numerator(0), tol.zero))
        throw DegenerateInputError("vanishing_order: identically zero function");
    const Poly& n = f.numerator(0);
    return vanishing_order_at([&](Complex z) { return poly_eval(n, z); },
                              lambda0, 1e-3, tol);
}

inline int vanishing_order(const RationalScalar& f, Complex lambda0,
                           const Tolerances& tol = Tolerances::defaults()) {
    if (poly_is_zero(f.num, tol.zero))
        throw DegenerateInputError("vanishing_order: identically zero function");
    return vanishing_order_at([&](Complex z) { return poly_eval(f.num, z); },
                              lambda0, 1e-3, tol);
}

}  // namespace tetra
