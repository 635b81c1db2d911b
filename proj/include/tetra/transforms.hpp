#pragma once

#include <cmath>
#include <complex>

#include "tetra/domains.hpp"
#include "tetra/mat2.hpp"

namespace tetra {

// Matrix Moebius map of the Cartan domains:
//   Phi_a(x) = (1 - a a*)^{-1/2} (x - a) (1 - a* x)^{-1} (1 - a* a)^{1/2}.
// Sends a to 0 and 0 to -a; preserves symmetry when a and x are symmetric.
inline Mat2 phi_a(const Mat2& a, const Mat2& x,
                  const Tolerances& tol = Tolerances::defaults()) {
    (void)tol;
    if (op_norm(a) >= 1.0) throw ParameterError("phi_a: ||a|| must be < 1");
    if (op_norm(x) > 1.0 + 1e-9) throw ParameterError("phi_a: ||x|| must be <= 1");
    const Mat2 id = Mat2::identity();
    const Mat2 left = inverse(hermitian_sqrt(id - a * a.adjoint()));
    const Mat2 right = hermitian_sqrt(id - a.adjoint() * a);
    return left * (x - a) * inverse(id - a.adjoint() * x) * right;
}

// Lower-triangular special case phi_c = Phi_{(0 0; c 0)} in closed form.
inline Mat2 phi_c_lower(Complex c, const Mat2& x,
                        const Tolerances& tol = Tolerances::defaults()) {
    if (std::abs(c) >= 1.0) throw ParameterError("phi_c_lower: |c| must be < 1");
    const Complex den = 1.0 - std::conj(c) * x.e21;
    if (std::abs(den) < tol.zero)
        throw SingularityError("phi_c_lower: vanishing denominator");
    const double s = std::sqrt(1.0 - std::norm(c));
    return {s * x.e11 / den, (x.e12 + std::conj(c) * x.det()) / den,
            (x.e21 - c) / den, s * x.e22 / den};
}

// Parameters of an automorphism of the tetrablock, via the lifted form
// Phi = U Phi_a U^t with a = diag(a1, a2) and U diagonal or anti-diagonal
// with entries e^{i theta}, e^{i eta}.
struct TetraAutParams {
    Complex a1{}, a2{};
    double theta = 0.0, eta = 0.0;
    bool swap = false;

    Mat2 a_matrix() const { return Mat2::diag(a1, a2); }

    Mat2 u_matrix() const {
        const Complex u1 = std::polar(1.0, theta);
        const Complex u2 = std::polar(1.0, eta);
        return swap ? Mat2::anti_diag(u1, u2) : Mat2::diag(u1, u2);
    }

    bool valid() const { return std::abs(a1) < 1.0 && std::abs(a2) < 1.0; }
};

inline Mat2 lifted_automorphism(const TetraAutParams& p, const Mat2& x) {
    const Mat2 u = p.u_matrix();
    return u * phi_a(p.a_matrix(), x) * u.transpose();
}

// Automorphism of the tetrablock: lift z through a symmetric preimage,
// apply U Phi_a U^t, project back.  Both preimage branches give the same
// image; we evaluate both and treat disagreement as an internal fault.
inline Point3 aut_tetrablock(const TetraAutParams& p, const Point3& z,
                             const Tolerances& tol = Tolerances::defaults()) {
    if (!p.valid()) throw ParameterError("aut_tetrablock: |a1|, |a2| must be < 1");
    if (in_tetrablock(z).margin < -tol.boundary)
        throw DomainError("aut_tetrablock: point outside the closed tetrablock");
    const auto [plus, minus] = symmetric_preimages(z);
    const Point3 img = project_pi(lifted_automorphism(p, plus));
    const Point3 img2 = project_pi(lifted_automorphism(p, minus));
    if (img.max_abs_diff(img2) > 1e-10)
        throw ContradictionError("aut_tetrablock: preimage branches disagree");
    return img;
}

// Inverse automorphism, through Phi^{-1}(y) = Phi_{-a}(U* y conj(U)).
inline Point3 aut_tetrablock_inverse(const TetraAutParams& p, const Point3& z,
                                     const Tolerances& tol = Tolerances::defaults()) {
    if (!p.valid()) throw ParameterError("aut_tetrablock_inverse: bad parameters");
    if (in_tetrablock(z).margin < -tol.boundary)
        throw DomainError("aut_tetrablock_inverse: point outside the closed tetrablock");
    const Mat2 u = p.u_matrix();
    const Mat2 ustar = u.adjoint();
    const Mat2 uconj = u.transpose().adjoint();
    const Mat2 ma = p.a_matrix();
    const auto [plus, minus] = symmetric_preimages(z);
    const auto apply = [&](const Mat2& y) {
        return project_pi(phi_a(-ma, ustar * y * uconj));
    };
    const Point3 img = apply(plus);
    const Point3 img2 = apply(minus);
    if (img.max_abs_diff(img2) > 1e-10)
        throw ContradictionError("aut_tetrablock_inverse: preimage branches disagree");
    return img;
}

// Multiplicative factor relating the triangular defects of x and psi(x):
//   psi1 psi2 - psi3 = (x1 x2 - x3) * nu_factor(p, x).
// The denominator 1 - conj(a1) x1 - conj(a2) x2 + conj(a1 a2) x3 equals
// det(1 - a* y) for the symmetric preimage y and never vanishes on the
// tetrablock.
inline Complex nu_factor(const TetraAutParams& p, const Point3& x,
                         const Tolerances& tol = Tolerances::defaults()) {
    if (!p.valid()) throw ParameterError("nu_factor: |a1|, |a2| must be < 1");
    const Complex den = 1.0 - std::conj(p.a1) * x.z1 - std::conj(p.a2) * x.z2 +
                        std::conj(p.a1) * std::conj(p.a2) * x.z3;
    if (std::abs(den) < tol.zero)
        throw ContradictionError("nu_factor: denominator vanished inside the domain");
    const Complex rot = std::polar(1.0, 2.0 * (p.eta + p.theta));
    return rot * (1.0 - std::norm(p.a1)) * (1.0 - std::norm(p.a2)) / (den * den);
}

// Psi_z(x) = (z x3 - x1) / (1 - z x2), a holomorphic map of the tetrablock
// into the unit disc for every |z| <= 1.
inline Complex psi_z(Complex zparam, const Point3& x,
                     const Tolerances& tol = Tolerances::defaults()) {
    const Complex den = 1.0 - zparam * x.z2;
    if (std::abs(den) < tol.zero)
        throw ContradictionError("psi_z: denominator vanished inside the domain");
    return (zparam * x.z3 - x.z1) / den;
}

// F_a(s, p) = (2 a p - s) / (2 - a s) on the symmetrized bidisc.
inline Complex f_a(Complex a, Complex s, Complex p,
                   const Tolerances& tol = Tolerances::defaults()) {
    const Complex den = 2.0 - a * s;
    if (std::abs(den) < tol.zero)
        throw SingularityError("f_a: denominator vanished");
    return (2.0 * a * p - s) / den;
}

// (s, p) -> (s/2, s/2, p).  Under the alternate defining function of the
// tetrablock the image margin equals the symmetrized-bidisc margin exactly.
inline Point3 embed_g2(Complex s, Complex p,
                       const Tolerances& tol = Tolerances::defaults()) {
    if (!in_symmetrized_bidisc(s, p).inside)
        throw DomainError("embed_g2: (s, p) outside the symmetrized bidisc");
    const Point3 z{0.5 * s, 0.5 * s, p};
    if (in_tetrablock_alt(z).margin <= -tol.boundary)
        throw ContradictionError("embed_g2: image failed membership");
    return z;
}

}  // namespace tetra
