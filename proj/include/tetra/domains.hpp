#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "tetra/mat2.hpp"

namespace tetra {

// Point of C^3; candidate member of the tetrablock or its boundary.
struct Point3 {
    Complex z1{}, z2{}, z3{};

    Complex operator[](std::size_t i) const {
        return i == 0 ? z1 : (i == 1 ? z2 : z3);
    }

    Point3 operator+(const Point3& o) const { return {z1 + o.z1, z2 + o.z2, z3 + o.z3}; }
    Point3 operator-(const Point3& o) const { return {z1 - o.z1, z2 - o.z2, z3 - o.z3}; }
    Point3 operator*(Complex s) const { return {s * z1, s * z2, s * z3}; }
    friend Point3 operator*(Complex s, const Point3& p) { return p * s; }

    double max_abs_diff(const Point3& o) const {
        return std::max(std::abs(z1 - o.z1),
                        std::max(std::abs(z2 - o.z2), std::abs(z3 - o.z3)));
    }
};

// Verdict of a membership predicate.  margin is 1 minus the value of the
// defining function: positive inside, negative outside, ~0 on the boundary.
struct MembershipReport {
    bool inside = false;
    double margin = 0.0;
};

//   |z2 - conj(z1) z3| + |z1 z2 - z3| + |z1|^2 < 1
inline MembershipReport in_tetrablock(const Point3& z) {
    const double v = std::abs(z.z2 - std::conj(z.z1) * z.z3) +
                     std::abs(z.z1 * z.z2 - z.z3) + std::norm(z.z1);
    return {1.0 - v > 0.0, 1.0 - v};
}

// The alternate defining function of the same set:
//   |z1 - conj(z2) z3| + |z2 - conj(z1) z3| + |z3|^2 < 1
inline MembershipReport in_tetrablock_alt(const Point3& z) {
    const double v = std::abs(z.z1 - std::conj(z.z2) * z.z3) +
                     std::abs(z.z2 - std::conj(z.z1) * z.z3) + std::norm(z.z3);
    return {1.0 - v > 0.0, 1.0 - v};
}

//   |s - conj(s) p| + |p|^2 < 1
inline MembershipReport in_symmetrized_bidisc(Complex s, Complex p) {
    const double v = std::abs(s - std::conj(s) * p) + std::norm(p);
    return {1.0 - v > 0.0, 1.0 - v};
}

enum class CartanKind { I, II };

// Matrix ball of operator norm < 1; kind II additionally requires symmetry.
// For an asymmetric matrix under kind II the margin is the (negative)
// symmetry defect so that inside <=> margin > 0 still holds.
inline MembershipReport in_cartan(const Mat2& x, CartanKind kind,
                                  const Tolerances& tol = Tolerances::defaults()) {
    const double margin = 1.0 - op_norm(x);
    if (kind == CartanKind::II && !is_symmetric(x, tol))
        return {false, -std::abs(x.e12 - x.e21)};
    return {margin > 0.0, margin};
}

//   pi(x) = (x11, x22, det x)
inline Point3 project_pi(const Mat2& x) { return {x.e11, x.e22, x.det()}; }

// The two symmetric preimages of z under pi: (z1, w; w, z2) with
// w = +-sqrt(z1 z2 - z3).  They coincide exactly when z1 z2 = z3.
inline std::pair<Mat2, Mat2> symmetric_preimages(const Point3& z) {
    const Complex w = std::sqrt(z.z1 * z.z2 - z.z3);
    return {Mat2{z.z1, w, w, z.z2}, Mat2{z.z1, -w, -w, z.z2}};
}

// Maximum operator norm over the symmetric preimages; z lies in the
// tetrablock exactly when rho(z) < 1.
inline double rho(const Point3& z) {
    const auto [plus, minus] = symmetric_preimages(z);
    return std::max(op_norm(plus), op_norm(minus));
}

inline bool in_triangular_set(const Point3& z, double tol = 1e-12) {
    return std::abs(z.z1 * z.z2 - z.z3) <= tol;
}

using Weights3 = std::array<int, 3>;

inline constexpr Weights3 kWeights101{1, 0, 1};
inline constexpr Weights3 kWeights011{0, 1, 1};
inline constexpr Weights3 kWeights112{1, 1, 2};

inline Complex pow_int(Complex base, int e) {
    Complex r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Coordinatewise lambda^{m_j} z_j.  For the tetrablock the weight vectors
// (1,0,1), (0,1,1) and (1,1,2) preserve membership for |lambda| <= 1.
inline Point3 scale_balanced(const Point3& z, Complex lambda, const Weights3& m) {
    if (m[0] == 0 && m[1] == 0 && m[2] == 0)
        throw ParameterError("scale_balanced: all-zero weight vector");
    if (m[0] < 0 || m[1] < 0 || m[2] < 0)
        throw ParameterError("scale_balanced: weights must be non-negative");
    return {pow_int(lambda, m[0]) * z.z1, pow_int(lambda, m[1]) * z.z2,
            pow_int(lambda, m[2]) * z.z3};
}

inline std::vector<Complex> scale_balanced(const std::vector<Complex>& z,
                                           Complex lambda,
                                           const std::vector<int>& m) {
    if (z.size() != m.size())
        throw ParameterError("scale_balanced: weight/point size mismatch");
    bool all_zero = true;
    for (int w : m) {
        if (w < 0) throw ParameterError("scale_balanced: weights must be non-negative");
        if (w != 0) all_zero = false;
    }
    if (all_zero) throw ParameterError("scale_balanced: all-zero weight vector");
    std::vector<Complex> r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) r[i] = pow_int(lambda, m[i]) * z[i];
    return r;
}

// (lambda z1, lambda z2, lambda^2 z3), the (1,1,2)-balanced scaling.
inline Point3 phi_lambda(Complex lambda, const Point3& z) {
    return scale_balanced(z, lambda, kWeights112);
}

}  // namespace tetra
