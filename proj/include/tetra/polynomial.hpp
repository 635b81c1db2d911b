#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <vector>

#include "tetra/errors.hpp"
#include "tetra/mat2.hpp"

namespace tetra {

// Dense polynomial, coefficients in ascending degree order.
using Poly = std::vector<Complex>;

inline Complex poly_eval(const Poly& p, Complex z) {
    Complex acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
    return acc;
}

inline Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {Complex(0.0)};
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        d[i - 1] = static_cast<double>(i) * p[i];
    return d;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {Complex(0.0)};
    Poly r(a.size() + b.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Poly poly_scale(const Poly& a, Complex s) {
    Poly r = a;
    for (auto& c : r) c *= s;
    return r;
}

// Multiply by lambda^k.
inline Poly poly_shift_up(const Poly& a, std::size_t k) {
    Poly r(a.size() + k, Complex(0.0));
    std::copy(a.begin(), a.end(), r.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

// Divide by lambda^k; the dropped low-order coefficients must vanish.
inline Poly poly_shift_down(const Poly& a, std::size_t k, double tol_zero = 1e-12) {
    if (k == 0) return a;
    if (a.size() <= k) {
        for (const auto& c : a)
            if (std::abs(c) > tol_zero)
                throw ParameterError("poly_shift_down: nonzero low-order coefficient");
        return {Complex(0.0)};
    }
    for (std::size_t i = 0; i < k; ++i)
        if (std::abs(a[i]) > tol_zero)
            throw ParameterError("poly_shift_down: nonzero low-order coefficient");
    return Poly(a.begin() + static_cast<std::ptrdiff_t>(k), a.end());
}

inline bool poly_is_zero(const Poly& p, double tol_zero = 1e-12) {
    for (const auto& c : p)
        if (std::abs(c) > tol_zero) return false;
    return true;
}

// Order of vanishing at 0 read off the coefficients (exact for polynomial
// data; the winding-number route is the general certificate).
inline std::size_t poly_order_at_zero(const Poly& p, double tol_zero = 1e-12) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (std::abs(p[i]) > tol_zero) return i;
    return p.size();  // identically zero: treat as order past the degree
}

inline double poly_max_abs(const Poly& p) {
    double m = 0.0;
    for (const auto& c : p) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace tetra
