#pragma once

#include <cmath>
#include <complex>

#include "tetra/config.hpp"
#include "tetra/errors.hpp"

namespace tetra {

using Complex = std::complex<double>;

// 2x2 complex matrix with value semantics.  Carrier for Cartan-domain
// points, unitaries and automorphism parameters.
struct Mat2 {
    Complex e11{}, e12{}, e21{}, e22{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }
    static Mat2 diag(Complex a, Complex b) { return {a, 0.0, 0.0, b}; }
    static Mat2 anti_diag(Complex a, Complex b) { return {0.0, a, b, 0.0}; }

    Complex det() const { return e11 * e22 - e12 * e21; }
    Complex trace() const { return e11 + e22; }

    Mat2 transpose() const { return {e11, e21, e12, e22}; }
    Mat2 adjoint() const {
        return {std::conj(e11), std::conj(e21), std::conj(e12), std::conj(e22)};
    }

    Mat2 operator+(const Mat2& o) const {
        return {e11 + o.e11, e12 + o.e12, e21 + o.e21, e22 + o.e22};
    }
    Mat2 operator-(const Mat2& o) const {
        return {e11 - o.e11, e12 - o.e12, e21 - o.e21, e22 - o.e22};
    }
    Mat2 operator*(const Mat2& o) const {
        return {e11 * o.e11 + e12 * o.e21, e11 * o.e12 + e12 * o.e22,
                e21 * o.e11 + e22 * o.e21, e21 * o.e12 + e22 * o.e22};
    }
    Mat2 operator*(Complex s) const { return {s * e11, s * e12, s * e21, s * e22}; }
    friend Mat2 operator*(Complex s, const Mat2& m) { return m * s; }

    Mat2 operator-() const { return {-e11, -e12, -e21, -e22}; }

    // Entrywise max-modulus distance, used for defect measurements.
    double max_abs_diff(const Mat2& o) const {
        return std::max(std::max(std::abs(e11 - o.e11), std::abs(e12 - o.e12)),
                        std::max(std::abs(e21 - o.e21), std::abs(e22 - o.e22)));
    }

    double max_abs() const { return max_abs_diff(zero()); }
};

// Largest singular value through the closed form
//   ||M||^2 = (t + sqrt(t^2 - 4 |det M|^2)) / 2,  t = sum |m_ij|^2.
inline double op_norm(const Mat2& m) {
    const double t = std::norm(m.e11) + std::norm(m.e12) + std::norm(m.e21) +
                     std::norm(m.e22);
    const double d2 = std::norm(m.det());
    const double disc = std::max(t * t - 4.0 * d2, 0.0);
    return std::sqrt(0.5 * (t + std::sqrt(disc)));
}

inline bool is_symmetric(const Mat2& m,
                         const Tolerances& tol = Tolerances::defaults()) {
    return std::abs(m.e12 - m.e21) <= tol.sym;
}

inline bool is_unitary(const Mat2& m,
                       const Tolerances& tol = Tolerances::defaults()) {
    return (m * m.adjoint()).max_abs_diff(Mat2::identity()) <= tol.unit;
}

inline Mat2 inverse(const Mat2& m) {
    const Complex d = m.det();
    if (std::abs(d) < 1e-300) throw SingularityError("Mat2: singular matrix");
    const Complex inv = 1.0 / d;
    return {m.e22 * inv, -m.e12 * inv, -m.e21 * inv, m.e11 * inv};
}

// Principal square root of a Hermitian positive definite 2x2 matrix via
// Cayley-Hamilton:  sqrt(H) = (H + sqrt(det H) I) / sqrt(tr H + 2 sqrt(det H)).
inline Mat2 hermitian_sqrt(const Mat2& h) {
    const double d = h.det().real();
    const double t = h.trace().real();
    if (d <= 0.0 || t <= 0.0)
        throw ParameterError("hermitian_sqrt: matrix not positive definite");
    const double sd = std::sqrt(d);
    const double s = std::sqrt(t + 2.0 * sd);
    return (h + Mat2::identity() * Complex(sd, 0.0)) * Complex(1.0 / s, 0.0);
}

}  // namespace tetra
