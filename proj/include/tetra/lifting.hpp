#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <utility>

#include "tetra/analytic_sqrt.hpp"
#include "tetra/disc_map.hpp"
#include "tetra/domains.hpp"
#include "tetra/rng.hpp"

namespace tetra {

// A matrix disc covering a given disc in the tetrablock, with the sampled
// certificates of the covering identity and the norm bound.
struct LiftResult {
    std::function<Mat2(Complex)> lift{};
    double projection_residual = 0.0;  // max ||pi(G(lambda)) - f(lambda)||
    double max_op_norm = 0.0;          // over closed-disc samples
    int samples = 0;
};

namespace detail {

inline void certify_lift(LiftResult& r, const DiscMap& f, int interior = 48,
                         int boundary = 32) {
    double resid = 0.0, norm = 0.0;
    int count = 0;
    const auto measure = [&](Complex lambda) {
        const Mat2 g = r.lift(lambda);
        const auto v = f.eval(lambda);
        resid = std::max(resid, project_pi(g).max_abs_diff({v[0], v[1], v[2]}));
        norm = std::max(norm, op_norm(g));
        ++count;
    };
    for (int i = 0; i < interior; ++i)
        measure(halton_disc(static_cast<std::uint64_t>(i), 0.999));
    for (int i = 0; i < boundary; ++i)
        measure(std::polar(1.0, 2.0 * Rng::pi() * (i + 0.5) / boundary));
    r.projection_residual = resid;
    r.max_op_norm = norm;
    r.samples = count;
}

}  // namespace detail

// Lift of a disc avoiding the triangular set through the square root of
// f1 f2 - f3:  G = (f1, g~; g~, f2) with g~^2 = f1 f2 - f3, so that
// pi o G = f and G is symmetric valued.
inline LiftResult lift_avoiding_T(const DiscMap& f, int branch_sign = +1,
                                  const Tolerances& tol = Tolerances::defaults()) {
    if (f.size() != 3) throw ParameterError("lift_avoiding_T: needs a 3-coordinate disc");
    const RationalScalar defect = triangular_defect(f);
    int roots = 0;
    try {
        roots = count_roots_in_disc(
            [&](Complex z) { return poly_eval(defect.num, z); }, 1.0, tol);
    } catch (const ContourError&) {
        throw PreconditionError(
            "lift_avoiding_T: f1 f2 - f3 vanishes on the unit circle;"
            " use lift_through_T_origin");
    }
    if (roots != 0)
        throw PreconditionError(
            "lift_avoiding_T: f1 f2 - f3 has a zero in the disc;"
            " use lift_through_T_origin");

    Tolerances sqrt_tol = tol;
    sqrt_tol.den_eps = 1e-12;  // zero freedom on the closed disc is already certified
    auto root = std::make_shared<AnalyticSqrt>(defect, branch_sign, sqrt_tol);
    auto f1 = f.coordinate(0);
    auto f2 = f.coordinate(1);
    LiftResult r;
    r.lift = [root, f1, f2](Complex lambda) {
        const Complex w = (*root)(lambda);
        return Mat2{f1(lambda), w, w, f2(lambda)};
    };
    detail::certify_lift(r, f);
    return r;
}

// Single factoring step of a disc through the origin of the triangular set:
// f = (l^n g1, l^m g2, l^{n+m} g3) with g(0) outside the triangular set,
// lifted as F = (l^n g1, l^n g~; l^m g~, l^m g2).
inline LiftResult lift_through_T_origin(const DiscMap& f, int n, int m,
                                        int branch_sign = +1,
                                        const Tolerances& tol = Tolerances::defaults()) {
    if (f.size() != 3)
        throw ParameterError("lift_through_T_origin: needs a 3-coordinate disc");
    if (n < 0 || m < 0 || n + m == 0)
        throw ParameterError("lift_through_T_origin: need n, m >= 0 with n + m > 0");

    const auto nn = static_cast<std::size_t>(n);
    const auto mm = static_cast<std::size_t>(m);
    const Poly g1 = poly_shift_down(f.numerator(0), nn, tol.zero);
    const Poly g2 = poly_shift_down(f.numerator(1), mm, tol.zero);
    const Poly g3 = poly_shift_down(f.numerator(2), nn + mm, tol.zero);
    const DiscMap g({g1, g2, g3},
                    {f.denominator(0), f.denominator(1), f.denominator(2)}, tol);
    const auto g0 = g.eval(Complex(0.0));
    if (in_triangular_set({g0[0], g0[1], g0[2]}, 1e-10))
        throw MultiStepError(
            "lift_through_T_origin: factored disc still meets the triangular set at 0;"
            " multi-step reduction is out of the certified scope");

    const RationalScalar defect = triangular_defect(g);
    Tolerances sqrt_tol = tol;
    sqrt_tol.den_eps = 1e-12;
    auto root = std::make_shared<AnalyticSqrt>(defect, branch_sign, sqrt_tol);
    auto c1 = g.coordinate(0);
    auto c2 = g.coordinate(1);
    LiftResult r;
    r.lift = [root, c1, c2, n, m](Complex lambda) {
        const Complex w = (*root)(lambda);
        const Complex ln = pow_int(lambda, n);
        const Complex lm = pow_int(lambda, m);
        return Mat2{ln * c1(lambda), ln * w, lm * w, lm * c2(lambda)};
    };
    detail::certify_lift(r, f);
    return r;
}

// Coordinate vanishing orders at 0 suggest a factoring (n, m); identically
// zero coordinates impose no constraint.
inline std::pair<int, int> detect_origin_orders(const DiscMap& f,
                                                const Tolerances& tol = Tolerances::defaults()) {
    if (f.size() != 3) throw ParameterError("detect_origin_orders: needs 3 coordinates");
    const auto order = [&](std::size_t i) -> int {
        const Poly& p = f.numerator(i);
        if (poly_is_zero(p, tol.zero)) return 1 << 20;
        return static_cast<int>(poly_order_at_zero(p, tol.zero));
    };
    const int o1 = order(0), o2 = order(1), o3 = order(2);
    const long combined = std::min(static_cast<long>(o1) + o2, static_cast<long>(o3));
    const int total = static_cast<int>(std::min(combined, 1L << 20));
    const int n = std::min(o1, total);
    return {n, total - n};
}

// Norm-decreasing symmetrization: v~ = (v11, w; w, v22) with w^2 = v12 v21.
// pi(v~) = pi(v) and ||v~|| <= ||v||, strictly when |v12| != |v21|.
inline Mat2 symmetrize_boundary(const Mat2& v) {
    const Complex w = std::sqrt(v.e12 * v.e21);
    return {v.e11, w, w, v.e22};
}

}  // namespace tetra
