#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "tetra/geodesics.hpp"
#include "tetra/rng.hpp"

namespace tetra {

// Random unitary from normalized complex Gaussian rows with Gram-Schmidt.
inline Mat2 random_unitary(Rng& rng) {
    Complex r1a = rng.gaussian(), r1b = rng.gaussian();
    double n1 = std::sqrt(std::norm(r1a) + std::norm(r1b));
    while (n1 < 1e-8) {
        r1a = rng.gaussian();
        r1b = rng.gaussian();
        n1 = std::sqrt(std::norm(r1a) + std::norm(r1b));
    }
    r1a /= n1;
    r1b /= n1;
    Complex r2a = rng.gaussian(), r2b = rng.gaussian();
    const Complex overlap = r2a * std::conj(r1a) + r2b * std::conj(r1b);
    r2a -= overlap * r1a;
    r2b -= overlap * r1b;
    double n2 = std::sqrt(std::norm(r2a) + std::norm(r2b));
    if (n2 < 1e-8) {  // resample on near collinearity
        return random_unitary(rng);
    }
    r2a /= n2;
    r2b /= n2;
    return {r1a, r1b, r2a, r2b};
}

// Random symmetric contraction with operator norm close to `norm`.
inline Mat2 random_symmetric_contraction(Rng& rng, double norm) {
    Mat2 m{rng.gaussian(), 0.0, 0.0, rng.gaussian()};
    m.e12 = rng.gaussian();
    m.e21 = m.e12;
    const double n = op_norm(m);
    return m * Complex(norm / n, 0.0);
}

// Uniform-in-margin rejection sample of the open tetrablock: coordinates
// drawn from the unit polydisc until the membership margin clears the bar.
inline Point3 random_tetra_point(Rng& rng, double min_margin = 1e-6) {
    for (;;) {
        const Point3 z{rng.disc_point(), rng.disc_point(), rng.disc_point()};
        if (in_tetrablock(z).margin > min_margin) return z;
    }
}

inline std::pair<Complex, Complex> random_g2_point(Rng& rng, double r_max = 0.95) {
    const Complex l1 = rng.disc_point(r_max);
    const Complex l2 = rng.disc_point(r_max);
    return {l1 + l2, l1 * l2};
}

inline GeodesicSpec random_trivial(Rng& rng) {
    return TrivialSpec{rng.uniform(0.0, 2.0 * Rng::pi())};
}

// Inside-T geodesic with an identity-like first coordinate: f1 is a
// unimodular rotation of lambda, f2 an arbitrary small analytic disc.
inline GeodesicSpec random_inside_t(Rng& rng) {
    InsideTSpec s;
    s.f1 = {Poly{Complex(0.0), rng.unit_complex()}, Poly{Complex(1.0)}};
    const Complex c0 = 0.3 * rng.disc_point();
    const Complex c1 = 0.3 * rng.disc_point();
    const Complex c2 = 0.2 * rng.disc_point();
    s.f2 = {Poly{c0, c1, c2}, Poly{Complex(1.0)}};
    return s;
}

// Z = id triangular geodesic, normalized so that the found left inverse
// composes to the identity (not merely a rotation).  With
// W = UV = (w11, w12; w21, w22), the geodesic condition pins
// |c| = |w12|, and the composite Psi_a o f equals -w11/|w11| * id;
// choosing w11 real negative and c = conj(a w12) makes it the identity.
inline GeodesicSpec random_triangular_identity(Rng& rng) {
    const double r = rng.uniform(0.1, 0.9);
    const Complex alpha{-r, 0.0};
    const Complex beta = std::sqrt(1.0 - r * r) * rng.unit_complex();
    const Complex det = rng.unit_complex();
    const Complex a = rng.unit_complex();
    const Complex c = std::conj(a) * std::conj(beta);
    const Mat2 w{alpha, beta, -std::conj(beta) * det, std::conj(alpha) * det};
    const Mat2 u = random_unitary(rng);
    const Mat2 v = u.adjoint() * w;
    TriangularSpec s;
    s.u = u;
    s.v = v;
    s.c = c;
    s.z_identity = true;
    return s;
}

// General triangular spec with Z = mu lambda (not a certified geodesic;
// used for membership, projection and invariance sampling).
inline GeodesicSpec random_triangular_mu(Rng& rng) {
    TriangularSpec s;
    s.u = random_unitary(rng);
    s.v = random_unitary(rng);
    s.c = rng.disc_point(0.7);
    s.mu = rng.disc_point(0.85);
    s.z_identity = false;
    return s;
}

// Feasible non-triangular geodesic: |c|^2 > 1/(1+beta^2) makes the
// tau/gamma selection solvable and automatically forces strict avoidance
// of the triangular set.
inline GeodesicSpec random_nontriangular_feasible(Rng& rng) {
    const double beta = rng.uniform(0.2, 0.85);
    const double floor_x = 1.0 / (1.0 + beta * beta);
    const double x = rng.uniform(floor_x + 0.02 * (1.0 - floor_x), 0.98);
    const Complex c = std::sqrt(x) * rng.unit_complex();
    const Complex d = std::sqrt(1.0 - x) * rng.unit_complex();
    const Complex chi = rng.unit_complex();
    NonTriangularSpec s;
    s.c = c;
    s.d = d;
    s.a = -chi * std::conj(d);
    s.b = chi * std::conj(c);
    s.mu = rng.disc_point(0.9);
    s.beta = beta;
    return s;
}

}  // namespace tetra
