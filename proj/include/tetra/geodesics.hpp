#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "tetra/disc_map.hpp"
#include "tetra/domains.hpp"
#include "tetra/transforms.hpp"

namespace tetra {

// The runtime Z part of a Cartan-domain geodesic: the identity or the
// strict-contraction monomial mu * lambda, |mu| < 1.  General Schur-class
// Z is out of scope.
struct ZSpec {
    bool identity = true;
    Complex mu{};

    Complex factor() const { return identity ? Complex(1.0) : mu; }
    Complex operator()(Complex lambda) const { return factor() * lambda; }
};

// f(lambda) = (0, 0, e^{i theta} lambda).
struct TrivialSpec {
    double theta = 0.0;
};

// f = (f1, f2, f1 f2), a disc inside the triangular set.
struct InsideTSpec {
    RationalScalar f1{}, f2{};
};

// f(lambda) = pi(phi_c(U diag(lambda, Z(lambda)) V)).
struct TriangularSpec {
    Mat2 u = Mat2::identity();
    Mat2 v = Mat2::identity();
    Complex c{};
    Complex mu{};
    bool z_identity = true;

    ZSpec z() const { return {z_identity, mu}; }
};

// The family through (0, 0, -beta^2) built from a unitary with rows
// (a, b), (c, d) and Z(lambda) = mu lambda.
struct NonTriangularSpec {
    Complex a{}, b{}, c{}, d{};
    Complex mu{};
    double beta = 0.5;
};

using GeodesicSpec = std::variant<TrivialSpec, InsideTSpec, TriangularSpec, NonTriangularSpec>;

inline void validate(const TriangularSpec& s,
                     const Tolerances& tol = Tolerances::defaults()) {
    if (!is_unitary(s.u, tol) || !is_unitary(s.v, tol))
        throw ParameterError("TriangularSpec: U, V must be unitary");
    if (std::abs(s.c) >= 1.0) throw ParameterError("TriangularSpec: |c| must be < 1");
    if (!s.z_identity && std::abs(s.mu) >= 1.0)
        throw ParameterError("TriangularSpec: |mu| must be < 1 when Z != id");
}

inline void validate(const NonTriangularSpec& s,
                     const Tolerances& tol = Tolerances::defaults()) {
    (void)tol;
    const double row1 = std::norm(s.a) + std::norm(s.b);
    const double row2 = std::norm(s.c) + std::norm(s.d);
    const double ortho = std::abs(s.a * std::conj(s.c) + s.b * std::conj(s.d));
    if (std::abs(row1 - 1.0) > 1e-12 || std::abs(row2 - 1.0) > 1e-12 || ortho > 1e-12)
        throw ParameterError("NonTriangularSpec: (a,b),(c,d) must be unitary rows");
    if (std::abs(s.mu) > 1.0 + 1e-14)
        throw ParameterError("NonTriangularSpec: |mu| must be <= 1");
    if (!(s.beta > 0.0 && s.beta < 1.0))
        throw ParameterError("NonTriangularSpec: beta must lie in (0,1)");
}

// U diag(lambda, Z(lambda)) V; operator norm |lambda| since |Z| <= |lambda|.
inline Mat2 cartan_geodesic(const Mat2& u, const Mat2& v, const ZSpec& z,
                            Complex lambda,
                            const Tolerances& tol = Tolerances::defaults()) {
    if (!is_unitary(u, tol) || !is_unitary(v, tol))
        throw ParameterError("cartan_geodesic: U, V must be unitary");
    return u * Mat2::diag(lambda, z(lambda)) * v;
}

inline Point3 tetra_extremal_triangular(const TriangularSpec& s, Complex lambda,
                                        const Tolerances& tol = Tolerances::defaults()) {
    return project_pi(phi_c_lower(s.c, cartan_geodesic(s.u, s.v, s.z(), lambda, tol), tol));
}

// A(lambda) = a^2 lambda + b^2 Z, B = ac lambda + bd Z, C = c^2 lambda + d^2 Z,
// Delta = (1 + beta B)^2 - A C beta^2, all with Z = mu lambda.
struct ABCDelta {
    RationalScalar A{}, B{}, C{}, Delta{};
};

inline ABCDelta abc_delta(const NonTriangularSpec& s) {
    validate(s);
    const Complex ca = s.a * s.a + s.b * s.b * s.mu;
    const Complex cb = s.a * s.c + s.b * s.d * s.mu;
    const Complex cc = s.c * s.c + s.d * s.d * s.mu;
    const double beta = s.beta;
    ABCDelta r;
    r.A = {Poly{Complex(0.0), ca}, Poly{Complex(1.0)}};
    r.B = {Poly{Complex(0.0), cb}, Poly{Complex(1.0)}};
    r.C = {Poly{Complex(0.0), cc}, Poly{Complex(1.0)}};
    // (1 + beta cb l)^2 - beta^2 ca cc l^2
    r.Delta = {Poly{Complex(1.0), 2.0 * beta * cb, beta * beta * (cb * cb - ca * cc)},
               Poly{Complex(1.0)}};
    return r;
}

inline Point3 tetra_extremal_nontriangular(const NonTriangularSpec& s, Complex lambda,
                                           const Tolerances& tol = Tolerances::defaults()) {
    const ABCDelta q = abc_delta(s);
    const Complex A = q.A(lambda), B = q.B(lambda), C = q.C(lambda);
    const Complex delta = q.Delta(lambda);
    if (std::abs(delta) < tol.zero)
        throw SingularityError("tetra_extremal_nontriangular: Delta vanished");
    const double one_m_b2 = 1.0 - s.beta * s.beta;
    const Complex bplus = B + s.beta;
    return {A * one_m_b2 / delta, C * one_m_b2 / delta, (A * C - bplus * bplus) / delta};
}

inline Point3 eval_geodesic(const GeodesicSpec& spec, Complex lambda,
                            const Tolerances& tol = Tolerances::defaults()) {
    return std::visit(
        [&](const auto& s) -> Point3 {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TrivialSpec>) {
                return {0.0, 0.0, std::polar(1.0, s.theta) * lambda};
            } else if constexpr (std::is_same_v<T, InsideTSpec>) {
                const Complex f1 = s.f1(lambda), f2 = s.f2(lambda);
                return {f1, f2, f1 * f2};
            } else if constexpr (std::is_same_v<T, TriangularSpec>) {
                return tetra_extremal_triangular(s, lambda, tol);
            } else {
                return tetra_extremal_nontriangular(s, lambda, tol);
            }
        },
        spec);
}

// Rational representation of the same disc (shared denominator for the
// matrix-built families).
inline DiscMap to_disc_map(const GeodesicSpec& spec,
                           const Tolerances& tol = Tolerances::defaults()) {
    return std::visit(
        [&](const auto& s) -> DiscMap {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TrivialSpec>) {
                const Complex rot = std::polar(1.0, s.theta);
                return DiscMap::polynomial(
                    {Poly{Complex(0.0)}, Poly{Complex(0.0)}, Poly{Complex(0.0), rot}});
            } else if constexpr (std::is_same_v<T, InsideTSpec>) {
                const RationalScalar f3 = s.f1.multiply(s.f2);
                return DiscMap({s.f1.num, s.f2.num, f3.num},
                               {s.f1.den, s.f2.den, f3.den}, tol);
            } else if constexpr (std::is_same_v<T, TriangularSpec>) {
                validate(s, tol);
                const Complex zf = s.z().factor();
                const Mat2& u = s.u;
                const Mat2& v = s.v;
                const Complex m11 = u.e11 * v.e11 + zf * u.e12 * v.e21;
                const Complex m12 = u.e11 * v.e12 + zf * u.e12 * v.e22;
                const Complex m21 = u.e21 * v.e11 + zf * u.e22 * v.e21;
                const Complex m22 = u.e21 * v.e12 + zf * u.e22 * v.e22;
                const Complex dd = zf * u.det() * v.det();
                const double sc = std::sqrt(1.0 - std::norm(s.c));
                // pi(phi_c(M)) over the common denominator 1 - conj(c) m21 l
                return DiscMap({Poly{Complex(0.0), sc * m11},
                                Poly{Complex(0.0), sc * m22},
                                Poly{Complex(0.0), s.c * m12, dd}},
                               {Poly{Complex(1.0), -std::conj(s.c) * m21}}, tol);
            } else {
                const ABCDelta q = abc_delta(s);
                const double one_m_b2 = 1.0 - s.beta * s.beta;
                const Complex ca = q.A.num[1], cb = q.B.num[1], cc = q.C.num[1];
                // A C - (B + beta)^2 = -beta^2 - 2 beta cb l + (ca cc - cb^2) l^2
                return DiscMap({Poly{Complex(0.0), one_m_b2 * ca},
                                Poly{Complex(0.0), one_m_b2 * cc},
                                Poly{-s.beta * s.beta, -2.0 * s.beta * cb,
                                     ca * cc - cb * cb}},
                               {q.Delta.num}, tol);
            }
        },
        spec);
}

// Cohn criterion: the quadratic a0 l^2 + a1 l + a2 has both roots outside
// the open unit disc iff |a2| >= |a0| and
// |conj(a0) a1 - a2 conj(a1)| <= | |a0|^2 - |a2|^2 |.
// A vanishing a0 drops the degree; the missing root counts as outside.
inline bool cohn_both_roots_outside(Complex a0, Complex a1, Complex a2,
                                    double slack = 0.0) {
    const double m0 = std::abs(a0), m1 = std::abs(a1), m2 = std::abs(a2);
    if (m0 == 0.0 && m1 == 0.0 && m2 == 0.0)
        throw DegenerateInputError("cohn: all coefficients vanish");
    if (m0 < 1e-200) {
        if (m1 < 1e-200) return true;  // nonzero constant, no roots
        return std::abs(a2 / a1) >= 1.0 - slack;
    }
    const bool first = m2 >= m0 - slack;
    const bool second = std::abs(std::conj(a0) * a1 - a2 * std::conj(a1)) <=
                        std::abs(m0 * m0 - m2 * m2) + slack;
    return first && second;
}

// Coefficients of the T-avoidance quadratic
//   beta mu (ad - bc)^2 l^2 - (1 + beta^2)(ac + mu bd) l - beta = 0,
// whose roots are the parameters where f1 f2 = f3.
inline std::array<Complex, 3> avoidance_quadratic(const NonTriangularSpec& s) {
    const Complex dets = s.a * s.d - s.b * s.c;
    const double b2 = 1.0 + s.beta * s.beta;
    return {s.beta * s.mu * dets * dets, -b2 * (s.a * s.c + s.mu * s.b * s.d),
            Complex(-s.beta)};
}

// True iff the spec's disc misses the triangular set.  Decided by the Cohn
// criterion on the avoidance quadratic and cross-checked against the closed
// form |c||d|(1 + beta^2) <= beta; boundary ties are classified as avoiding.
inline bool avoids_T(const NonTriangularSpec& s) {
    validate(s);
    const auto [a0, a1, a2] = avoidance_quadratic(s);
    const bool cohn = cohn_both_roots_outside(a0, a1, a2, 1e-10);
    const double lhs = std::abs(s.c) * std::abs(s.d) * (1.0 + s.beta * s.beta);
    const bool closed = lhs <= s.beta;
    if (cohn != closed && std::abs(lhs - s.beta) > 1e-8)
        throw ContradictionError("avoids_T: Cohn verdict disagrees with the closed form");
    return closed;
}

// Vanishing order of f1 f2 - f3 at lambda0; nullopt marks a disc lying
// inside the triangular set (identically zero defect).
inline std::optional<int> nu_of_disc(const DiscMap& f, Complex lambda0,
                                     const Tolerances& tol = Tolerances::defaults()) {
    const RationalScalar defect = triangular_defect(f);
    const double scale = std::max(1.0, poly_max_abs(defect.num));
    if (poly_is_zero(defect.num, tol.zero * scale)) return std::nullopt;
    return vanishing_order_at([&](Complex z) { return poly_eval(defect.num, z); },
                              lambda0, 1e-3, tol);
}

inline std::string spec_tag(const GeodesicSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TrivialSpec>) return "trivial";
            else if constexpr (std::is_same_v<T, InsideTSpec>) return "inside_t";
            else if constexpr (std::is_same_v<T, TriangularSpec>) return "triangular";
            else return "nontriangular";
        },
        spec);
}

}  // namespace tetra
