#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "tetra/geodesics.hpp"
#include "tetra/rng.hpp"
#include "tetra/rootcount.hpp"
#include "tetra/scalar.hpp"

namespace tetra {

// L(x) = phase * x[coordinate]; left inverse of discs with an identity-like
// coordinate, e.g. f(lambda) = (0, 0, e^{i theta} lambda).
struct DirectSpec {
    int coordinate = 2;      // 0-based
    Complex phase{1.0};
};

// L(x) = phase * Psi_a(x) with |a| = 1.  The phase undoes the rotation
// Psi_a o f; it is 1 for the normalized triangular family.
struct PsiFamilySpec {
    Complex a{1.0};
    Complex phase{1.0};
};

// The Moebius-corrected composite for the T-avoiding family; the actual
// evaluation runs through the Rouche fixed-point solver with weights (1,0,1).
struct CompositeSpec {
    Complex tau{1.0};
    Complex gamma{};
    Weights3 weights = kWeights101;
};

using LeftInverseSpec = std::variant<DirectSpec, PsiFamilySpec, CompositeSpec>;

struct LeftInverse {
    LeftInverseSpec spec{};
    std::function<Complex(const Point3&)> map{};
    double residual = 0.0;            // max |L(f(lambda)) - lambda| over samples
    Complex h0{}, h1{};               // composite only: jet of h = F o g at 0
    double schwarz_pick_defect = 0.0; // composite only: ||h'(0)| - (1-|h(0)|^2)|
};

struct RoucheResult {
    Complex lambda_star{};
    double residual = 0.0;
    int winding_certificate = 0;
};

namespace detail {

// Newton iteration on a holomorphic g with numerically differenced slope.
template <typename G>
bool newton_polish(G&& g, Complex& lambda, double contour_radius, double tol_fix,
                   int max_iter = 50) {
    const double h = 1e-7;
    for (int it = 0; it < max_iter; ++it) {
        const Complex value = g(lambda);
        if (std::abs(value) <= tol_fix) return true;
        const Complex slope = (g(lambda + h) - g(lambda - h)) / (2.0 * h);
        if (std::abs(slope) < 1e-14) return false;
        lambda -= value / slope;
        const double m = std::abs(lambda);
        if (m >= contour_radius) lambda *= (0.98 * contour_radius) / m;
    }
    return std::abs(g(lambda)) <= tol_fix;
}

// Localize the unique zero inside |lambda| < radius by winding counts over
// shrinking subdiscs, then finish with Newton.
template <typename G>
bool winding_subdivide(G&& g, Complex& lambda, double radius, double tol_fix,
                       const Tolerances& tol) {
    Complex center = 0.0;
    double rad = radius;
    while (rad > 1e-4) {
        bool advanced = false;
        const Complex offsets[5] = {{0.0, 0.0}, {0.5, 0.0}, {0.0, 0.5}, {-0.5, 0.0}, {0.0, -0.5}};
        for (const Complex& off : offsets) {
            const Complex cand = center + rad * off;
            for (double shrink : {0.62, 0.66, 0.58}) {
                try {
                    if (winding_number(g, cand, rad * shrink, tol) == 1) {
                        center = cand;
                        rad *= 0.62;
                        advanced = true;
                        break;
                    }
                } catch (const ContourError&) {
                    continue;
                }
            }
            if (advanced) break;
        }
        if (!advanced) return false;
    }
    lambda = center;
    return newton_polish(g, lambda, radius, tol_fix);
}

}  // namespace detail

// Unique fixed point lambda* in the disc of F along the balanced scaling of z:
//
//   g(lambda) = lambda - F(lambda^{m1} z1, ..., lambda^{mn} zn)
//
// certified by a winding number 1 on a circle of radius 1 - eps and solved
// by Newton from a coarse grid start (winding subdivision as fallback).
// |F| < 1 on the closed scaled orbit is the caller's precondition; a winding
// count other than 1 reports its failure.
template <typename F>
RoucheResult rouche_fixed_point(F&& map, const std::vector<int>& weights,
                                const std::vector<Complex>& z, double tol_fix = 1e-11,
                                const Tolerances& tol = Tolerances::defaults()) {
    const auto g = [&](Complex lambda) {
        return lambda - map(scale_balanced(z, lambda, weights));
    };

    int certificate = 0;
    double contour_radius = 1.0 - 1e-6;
    bool counted = false;
    for (double radius : {1.0 - 1e-6, 1.0 - 2e-6, 1.0 - 5e-7, 1.0 - 1e-5}) {
        try {
            certificate = winding_number(g, Complex(0.0), radius, tol);
            contour_radius = radius;
            counted = true;
            break;
        } catch (const ContourError&) {
            continue;
        }
    }
    if (!counted)
        throw ContourError("rouche_fixed_point: no admissible certification contour");
    if (certificate != 1)
        throw ContradictionError(
            "rouche_fixed_point: winding certificate is " + std::to_string(certificate) +
            ", expected 1 (precondition failure)");

    // coarse polar grid start
    Complex best = 0.0;
    double best_val = std::abs(g(best));
    for (int ir = 1; ir <= 16; ++ir) {
        const double r = contour_radius * static_cast<double>(ir) / 16.5;
        for (int ia = 0; ia < 32; ++ia) {
            const double t = 2.0 * Rng::pi() * static_cast<double>(ia) / 32.0;
            const Complex cand{r * std::cos(t), r * std::sin(t)};
            const double val = std::abs(g(cand));
            if (val < best_val) {
                best = cand;
                best_val = val;
            }
        }
    }

    Complex root = best;
    if (!detail::newton_polish(g, root, contour_radius, tol_fix)) {
        root = best;
        if (!detail::winding_subdivide(g, root, contour_radius, tol_fix, tol))
            throw ConstructionError("rouche_fixed_point: solver did not converge");
    }
    return {root, std::abs(g(root)), certificate};
}

inline RoucheResult rouche_fixed_point(
    const std::function<Complex(const Point3&)>& map, const Weights3& weights,
    const Point3& z, double tol_fix = 1e-11,
    const Tolerances& tol = Tolerances::defaults()) {
    const std::vector<int> w{weights[0], weights[1], weights[2]};
    const std::vector<Complex> point{z.z1, z.z2, z.z3};
    return rouche_fixed_point(
        [&](const std::vector<Complex>& v) {
            return map(Point3{v[0], v[1], v[2]});
        },
        w, point, tol_fix, tol);
}

inline Complex eval_left_inverse_spec(const LeftInverseSpec& spec, const Point3& x,
                                      const Tolerances& tol = Tolerances::defaults());

// Max composite defect |L(f(lambda)) - lambda| over low-discrepancy interior
// samples.
inline double verify_left_inverse(const std::function<Point3(Complex)>& f,
                                  const std::function<Complex(const Point3&)>& L,
                                  int n_samples = 64) {
    double worst = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const Complex lambda = halton_disc(static_cast<std::uint64_t>(i), 0.93);
        worst = std::max(worst, std::abs(L(f(lambda)) - lambda));
    }
    return worst;
}

inline LeftInverse left_inverse_trivial(const TrivialSpec& s) {
    const DirectSpec d{2, std::polar(1.0, -s.theta)};
    LeftInverse li;
    li.spec = d;
    li.map = [d](const Point3& x) { return d.phase * x[static_cast<std::size_t>(d.coordinate)]; };
    li.residual = 0.0;
    return li;
}

// Inside-T discs are certified when one coordinate is a unimodular rotation
// of lambda; other inside-T shapes are not in the certified scope.
inline LeftInverse left_inverse_inside_t(const InsideTSpec& s,
                                         const Tolerances& tol = Tolerances::defaults()) {
    const auto unimodular_monomial = [&](const RationalScalar& f) -> std::optional<Complex> {
        if (!f.has_trivial_den(tol.zero)) return std::nullopt;
        if (f.num.size() < 2) return std::nullopt;
        if (std::abs(f.num[0]) > tol.zero) return std::nullopt;
        for (std::size_t i = 2; i < f.num.size(); ++i)
            if (std::abs(f.num[i]) > tol.zero) return std::nullopt;
        if (std::abs(std::abs(f.num[1]) - 1.0) > 1e-12) return std::nullopt;
        return f.num[1];
    };
    std::optional<Complex> u;
    int coord = -1;
    if ((u = unimodular_monomial(s.f1))) coord = 0;
    else if ((u = unimodular_monomial(s.f2))) coord = 1;
    if (coord < 0)
        throw ConstructionError(
            "left_inverse_inside_t: no identity-like coordinate in the disc");
    const DirectSpec d{coord, std::conj(*u)};
    LeftInverse li;
    li.spec = d;
    li.map = [d](const Point3& x) { return d.phase * x[static_cast<std::size_t>(d.coordinate)]; };
    li.residual = 0.0;
    return li;
}

// Z = id triangular case: scan the unimodular parameter a on a circle grid,
// fit the residual rotation by least squares, then polish the phase by a
// shrinking pattern search.  The certified left inverse is
// L = phase * Psi_a with L o f = id.
inline LeftInverse left_inverse_triangular(const TriangularSpec& s,
                                           const Tolerances& tol = Tolerances::defaults()) {
    validate(s, tol);
    if (!s.z_identity)
        throw ConstructionError("left_inverse_triangular: requires Z = id");

    const DiscMap f = to_disc_map(GeodesicSpec{s}, tol);
    constexpr int kProbes = 8;
    Point3 probe_x[kProbes];
    Complex probe_l[kProbes];
    for (int j = 0; j < kProbes; ++j) {
        probe_l[j] = 0.6 * std::polar(1.0, 2.0 * Rng::pi() * (j + 0.3) / kProbes);
        const auto v = f.eval(probe_l[j]);
        probe_x[j] = {v[0], v[1], v[2]};
    }

    // returns (score, fitted rotation e^{i chi})
    const auto score_at = [&](double t) -> std::pair<double, Complex> {
        const Complex a = std::polar(1.0, t);
        Complex corr = 0.0;
        Complex w[kProbes];
        for (int j = 0; j < kProbes; ++j) {
            w[j] = psi_z(a, probe_x[j], tol);
            corr += w[j] * std::conj(probe_l[j]);
        }
        if (std::abs(corr) < 1e-300) return {1e300, Complex(1.0)};
        const Complex rot = corr / std::abs(corr);
        double worst = 0.0;
        for (int j = 0; j < kProbes; ++j)
            worst = std::max(worst, std::abs(w[j] - rot * probe_l[j]));
        return {worst, rot};
    };

    constexpr int kGrid = 4096;
    double best_t = 0.0;
    double best_score = 1e300;
    for (int k = 0; k < kGrid; ++k) {
        const double t = 2.0 * Rng::pi() * static_cast<double>(k) / kGrid;
        const double sc = score_at(t).first;
        if (sc < best_score) {
            best_score = sc;
            best_t = t;
        }
    }

    double t = best_t;
    double step = 2.0 * Rng::pi() / kGrid;
    double current = best_score;
    for (int it = 0; it < 200 && step > 1e-17; ++it) {
        const double left = score_at(t - step).first;
        const double right = score_at(t + step).first;
        if (left < current && left <= right) {
            t -= step;
            current = left;
        } else if (right < current) {
            t += step;
            current = right;
        } else {
            step *= 0.5;
        }
    }

    const auto [score, rot] = score_at(t);
    const Complex a = std::polar(1.0, t);
    const PsiFamilySpec psi{a, std::conj(rot)};
    LeftInverse li;
    li.spec = psi;
    li.map = [psi, tol](const Point3& x) { return psi.phase * psi_z(psi.a, x, tol); };
    li.residual = verify_left_inverse(
        [&](Complex lambda) {
            const auto v = f.eval(lambda);
            return Point3{v[0], v[1], v[2]};
        },
        li.map, 64);
    if (li.residual > 1e-6)
        throw ConstructionError(
            "left_inverse_triangular: no unimodular parameter certifies this spec"
            " (best residual " + std::to_string(li.residual) + ")");
    return li;
}

// Choose |tau| = 1 and gamma in the disc with d = b tau beta gamma, phase of
// tau aligned so that |h'(0)| = (1-beta^2)|c - tau beta gamma a|^2
// + beta^2 (1 - |gamma|^2).  Feasible iff |c|^2 > 1/(1+beta^2).
inline std::pair<Complex, Complex> select_tau_gamma(const NonTriangularSpec& s) {
    validate(s);
    const double beta = s.beta;
    if (std::norm(s.c) <= 1.0 / (1.0 + beta * beta) + 1e-12)
        throw FeasibilityError(
            "select_tau_gamma: |c|^2 <= 1/(1+beta^2); spec outside the certified regime");
    const Complex P = s.d / (s.b * beta);  // b != 0 on the feasible set
    const Complex cq = s.c - beta * P * s.a;
    const Complex Q = (1.0 - beta * beta) * cq * cq;
    if (std::abs(Q) < 1e-250)
        throw ContradictionError("select_tau_gamma: alignment target vanished");
    const Complex tau = Q / std::abs(Q);
    const Complex gamma = P / tau;
    if (std::abs(gamma) >= 1.0)
        throw ContradictionError("select_tau_gamma: |gamma| >= 1 on a feasible spec");
    return {tau, gamma};
}

// (z3 - z2)/(z1 - 1), holomorphic into the unit disc on the tetrablock.
inline Complex base_fraction(const Point3& z) {
    return (z.z3 - z.z2) / (z.z1 - 1.0);
}

// T-avoiding case.  g = (m f1, f2, m f3) with the Moebius factor
// m = tau (l-gamma)/(1-conj(gamma) l); h = F o g is certified as a disc
// automorphism through the Schwarz-Pick equality, inverted in closed form,
// and the left inverse of f is assembled as
//   L = m^{-1} o G,   G(z) = fixed point of  l -> (m o h^{-1} o F)(l z1, z2, l z3).
inline LeftInverse left_inverse_nontriangular(
    const NonTriangularSpec& s, const Tolerances& tol = Tolerances::defaults()) {
    if (!avoids_T(s))
        throw PreconditionError("left_inverse_nontriangular: disc meets the triangular set");
    const auto [tau, gamma] = select_tau_gamma(s);
    const MobiusMap m{gamma, tau};

    const DiscMap f = to_disc_map(GeodesicSpec{s}, tol);
    const Poly n1 = f.numerator(0), n2 = f.numerator(1), n3 = f.numerator(2);
    const Poly delta = f.denominator(0);
    // h = (tau (l - gamma) n3 - (1 - conj(gamma) l) n2)
    //   / (tau (l - gamma) n1 - (1 - conj(gamma) l) delta)
    const Poly mob_num{-tau * gamma, tau};
    const Poly one_minus{Complex(1.0), -std::conj(gamma)};
    const RationalScalar h{poly_sub(poly_mul(mob_num, n3), poly_mul(one_minus, n2)),
                           poly_sub(poly_mul(mob_num, n1), poly_mul(one_minus, delta))};

    const Complex h0 = h(Complex(0.0));
    const Complex h1 = h.derivative_at(Complex(0.0));
    const Complex h0_expected = -tau * gamma * s.beta * s.beta;
    if (std::abs(h0 - h0_expected) > 1e-10)
        throw ContradictionError("left_inverse_nontriangular: h(0) != -tau gamma beta^2");
    const double sp_defect = std::abs(std::abs(h1) - (1.0 - std::norm(h0)));
    if (sp_defect > 1e-9)
        throw ConstructionError(
            "left_inverse_nontriangular: Schwarz-Pick equality failed, defect " +
            std::to_string(sp_defect));

    const MobiusMap h_mob = MobiusMap::from_value_and_derivative(h0, h1);
    const MobiusMap h_inv = h_mob.inverse();

    const auto f_hat = [m, h_inv, tol](const Point3& z) {
        return m(h_inv(base_fraction(z)));
    };
    const CompositeSpec comp{tau, gamma, kWeights101};
    LeftInverse li;
    li.spec = comp;
    li.h0 = h0;
    li.h1 = h1;
    li.schwarz_pick_defect = sp_defect;
    li.map = [f_hat, m, tol](const Point3& x) {
        const RoucheResult r = rouche_fixed_point(
            std::function<Complex(const Point3&)>(f_hat), kWeights101, x, 1e-12, tol);
        return m.inverse_at(r.lambda_star);
    };
    li.residual = verify_left_inverse(
        [&](Complex lambda) {
            const auto v = f.eval(lambda);
            return Point3{v[0], v[1], v[2]};
        },
        li.map, 24);
    return li;
}

// Dispatcher over the spec families the certified constructions cover.
inline LeftInverse construct_left_inverse(const GeodesicSpec& spec,
                                          const Tolerances& tol = Tolerances::defaults()) {
    return std::visit(
        [&](const auto& s) -> LeftInverse {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TrivialSpec>) {
                return left_inverse_trivial(s);
            } else if constexpr (std::is_same_v<T, InsideTSpec>) {
                return left_inverse_inside_t(s, tol);
            } else if constexpr (std::is_same_v<T, TriangularSpec>) {
                return left_inverse_triangular(s, tol);
            } else {
                return left_inverse_nontriangular(s, tol);
            }
        },
        spec);
}

inline Complex eval_left_inverse_spec(const LeftInverseSpec& spec, const Point3& x,
                                      const Tolerances& tol) {
    return std::visit(
        [&](const auto& s) -> Complex {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DirectSpec>) {
                return s.phase * x[static_cast<std::size_t>(s.coordinate)];
            } else if constexpr (std::is_same_v<T, PsiFamilySpec>) {
                return s.phase * psi_z(s.a, x, tol);
            } else {
                throw ParameterError(
                    "eval_left_inverse_spec: composite specs need their geodesic context");
            }
        },
        spec);
}

}  // namespace tetra
