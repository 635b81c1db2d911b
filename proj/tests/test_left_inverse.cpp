#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "tetra/left_inverse.hpp"
#include "tetra/rng.hpp"
#include "tetra/sampling.hpp"
#include "tetra/verifier.hpp"

#include "oracles.hpp"

using namespace tetra;

namespace {

// Independent fixed-point oracle: dense polar grid plus a local Newton
// with its own finite-difference slope.
Complex grid_newton_oracle(const std::function<Complex(Complex)>& g) {
    Complex best = 0.0;
    double best_val = std::abs(g(best));
    for (int ir = 1; ir <= 200; ++ir) {
        const double r = 0.999 * ir / 200.0;
        for (int ia = 0; ia < 200; ++ia) {
            const Complex cand = std::polar(r, 2.0 * Rng::pi() * ia / 200.0);
            const double val = std::abs(g(cand));
            if (val < best_val) {
                best = cand;
                best_val = val;
            }
        }
    }
    Complex x = best;
    for (int it = 0; it < 60; ++it) {
        const Complex v = g(x);
        if (std::abs(v) < 1e-13) break;
        const Complex s = (g(x + 1e-7) - g(x - 1e-7)) / 2e-7;
        x -= v / s;
    }
    return x;
}

}  // namespace

TEST_CASE("rouche_fixed_point basics") {
    // constant target
    const Complex kappa{0.3, -0.55};
    const auto constant = [kappa](const std::vector<Complex>&) { return kappa; };
    const auto r1 = rouche_fixed_point(constant, {1}, {Complex(0.2)});
    CHECK(std::abs(r1.lambda_star - kappa) < 1e-11);
    CHECK(r1.winding_certificate == 1);
    CHECK(r1.residual <= 1e-11);

    // one-dimensional identity-coordinate map: g(l) = l - l z has root 0
    const Complex z{0.4, 0.1};
    const auto coord = [](const std::vector<Complex>& v) { return v[0]; };
    const auto r2 = rouche_fixed_point(coord, {1}, {z});
    CHECK(std::abs(r2.lambda_star) < 1e-11);

    // violated precondition: |F| >= 1 on the orbit
    const auto outside = [](const std::vector<Complex>&) { return Complex(1.5); };
    CHECK_THROWS_AS(rouche_fixed_point(outside, {1}, {Complex(0.0)}),
                    ContradictionError);
}

TEST_CASE("rouche_fixed_point vs grid oracle on psi composites") {
    Rng rng(81);
    for (int i = 0; i < 60; ++i) {
        const Complex zeta = (i % 3 == 0) ? rng.unit_complex() : rng.disc_point();
        const Point3 x = random_tetra_point(rng);
        const auto map = [zeta](const Point3& p) { return psi_z(zeta, p); };
        const Weights3 weights = (i % 2 == 0) ? kWeights101 : kWeights011;
        const auto result = rouche_fixed_point(
            std::function<Complex(const Point3&)>(map), weights, x, 1e-11);
        CHECK(result.winding_certificate == 1);
        CHECK(result.residual <= 1e-11);

        const auto g = [&](Complex l) {
            return l - map(scale_balanced(x, l, weights));
        };
        const Complex expected = grid_newton_oracle(g);
        CHECK(std::abs(result.lambda_star - expected) < 1e-10);

        // contour-radius stability
        for (double radius : {1.0 - 2e-6, 1.0 - 5e-7}) {
            CHECK(winding_number(g, Complex(0.0), radius) == 1);
        }
    }
}

TEST_CASE("trivial and inside_t left inverses") {
    Rng rng(82);
    for (int i = 0; i < 25; ++i) {
        const auto trivial = random_trivial(rng);
        const LeftInverse li = construct_left_inverse(trivial);
        CHECK(std::holds_alternative<DirectSpec>(li.spec));
        CHECK(li.residual == 0.0);
        for (int k = 0; k < 16; ++k) {
            const Complex l = rng.disc_point(0.95);
            CHECK(std::abs(li.map(eval_geodesic(trivial, l)) - l) < 1e-15);
        }

        const auto inside = random_inside_t(rng);
        const LeftInverse li2 = construct_left_inverse(inside);
        for (int k = 0; k < 16; ++k) {
            const Complex l = rng.disc_point(0.95);
            CHECK(std::abs(li2.map(eval_geodesic(inside, l)) - l) < 1e-14);
        }
    }
    // a disc with no identity-like coordinate is out of certified scope
    InsideTSpec hopeless;
    hopeless.f1 = {Poly{Complex(0.0), Complex(0.3)}, Poly{Complex(1.0)}};
    hopeless.f2 = {Poly{Complex(0.0), Complex(0.2)}, Poly{Complex(1.0)}};
    CHECK_THROWS_AS(construct_left_inverse(GeodesicSpec{hopeless}), ConstructionError);
}

TEST_CASE("triangular left inverse on the royal disc") {
    // Psi_a o f is the rotation -lambda for every unimodular a here; the
    // fitted phase absorbs it
    const LeftInverse li = construct_left_inverse(GeodesicSpec{TriangularSpec{}});
    CHECK(li.residual < 1e-12);
    const auto psi = std::get<PsiFamilySpec>(li.spec);
    CHECK(std::abs(psi.phase + 1.0) < 1e-9);  // phase == -1
    for (int k = 0; k < 64; ++k) {
        const Complex l = halton_disc(k, 0.9);
        CHECK(std::abs(li.map({l, l, l * l}) - l) < 1e-12);
    }
}

TEST_CASE("triangular left inverse on the normalized family") {
    Rng rng(83);
    for (int i = 0; i < 60; ++i) {
        const GeodesicSpec spec = random_triangular_identity(rng);
        const LeftInverse li = construct_left_inverse(spec);
        CHECK(li.residual <= 1e-10);
        const auto psi = std::get<PsiFamilySpec>(li.spec);
        CHECK(std::abs(std::abs(psi.a) - 1.0) < 1e-12);
        // The family is normalized to the identity composite.  The residual
        // is quadratically flat in the phase near the solution, so the
        // fitted phase is only pinned to about sqrt(residual).
        CHECK(std::abs(psi.phase - 1.0) < 1e-5);
    }
}

TEST_CASE("wrong psi parameter is a negative control") {
    Rng rng(84);
    const GeodesicSpec spec = random_triangular_identity(rng);
    const LeftInverse li = construct_left_inverse(spec);
    const auto psi = std::get<PsiFamilySpec>(li.spec);
    const Complex bad_a = psi.a * std::polar(1.0, 0.1);
    const auto bad_map = [&](const Point3& x) { return psi.phase * psi_z(bad_a, x); };
    const double bad_residual = verify_left_inverse(
        [&](Complex l) { return eval_geodesic(spec, l); }, bad_map, 64);
    CHECK(bad_residual > 1e-3);
}

TEST_CASE("select_tau_gamma") {
    Rng rng(85);
    // d = 0 family: gamma = 0 and h(0) = 0
    {
        NonTriangularSpec s;
        s.a = 0.0;
        s.b = rng.unit_complex();
        s.c = rng.unit_complex();
        s.d = 0.0;
        s.mu = rng.disc_point(0.8);
        s.beta = 0.5;
        const auto [tau, gamma] = select_tau_gamma(s);
        CHECK(std::abs(gamma) < 1e-15);
        CHECK(std::abs(std::abs(tau) - 1.0) < 1e-14);
    }
    // infeasible spec rejected
    {
        NonTriangularSpec s;
        s.a = std::sqrt(0.5);
        s.b = std::sqrt(0.5);
        s.c = std::sqrt(0.5);
        s.d = -std::sqrt(0.5);
        s.mu = 0.0;
        s.beta = 0.3;  // |c|^2 = 0.5 < 1/(1+0.09)
        CHECK_THROWS_AS(select_tau_gamma(s), FeasibilityError);
    }
    // constraint d = b tau beta gamma holds exactly; |gamma| < 1
    for (int i = 0; i < 200; ++i) {
        const auto s = std::get<NonTriangularSpec>(random_nontriangular_feasible(rng));
        const auto [tau, gamma] = select_tau_gamma(s);
        CHECK(std::abs(s.d - s.b * tau * s.beta * gamma) < 1e-14);
        CHECK(std::abs(gamma) < 1.0);
        CHECK(std::abs(std::abs(tau) - 1.0) < 1e-14);
    }
}

TEST_CASE("schwarz-pick equality via finite differences") {
    Rng rng(86);
    for (int i = 0; i < 500; ++i) {
        const auto s = std::get<NonTriangularSpec>(random_nontriangular_feasible(rng));
        const auto [tau, gamma] = select_tau_gamma(s);
        const MobiusMap m{gamma, tau};
        const auto h = [&](Complex l) {
            const Point3 f = tetra_extremal_nontriangular(s, l);
            const Point3 g{m(l) * f.z1, f.z2, m(l) * f.z3};
            return base_fraction(g);
        };
        const Complex h0 = h(0.0);
        CHECK(std::abs(h0 - (-tau * gamma * s.beta * s.beta)) < 1e-13);
        const Complex h1 = oracle::derivative_fd(h, Complex(0.0), 1e-6);
        CHECK(std::abs(std::abs(h1) - (1.0 - std::norm(h0))) < 1e-9);
    }
}

TEST_CASE("nontriangular composite left inverse") {
    Rng rng(87);
    for (int i = 0; i < 20; ++i) {
        const auto s = std::get<NonTriangularSpec>(random_nontriangular_feasible(rng));
        const LeftInverse li = left_inverse_nontriangular(s);
        CHECK(li.schwarz_pick_defect <= 1e-9);
        CHECK(std::abs(li.h0 - (-std::get<CompositeSpec>(li.spec).tau *
                                std::get<CompositeSpec>(li.spec).gamma * s.beta *
                                s.beta)) < 1e-12);
        CHECK(li.residual <= 1e-8);

        // the corrected disc g stays in the domain
        const auto comp = std::get<CompositeSpec>(li.spec);
        const MobiusMap m{comp.gamma, comp.tau};
        for (int k = 0; k < 24; ++k) {
            const Complex l = rng.disc_point(0.97);
            const Point3 f = tetra_extremal_nontriangular(s, l);
            const Point3 g{m(l) * f.z1, f.z2, m(l) * f.z3};
            CHECK(in_tetrablock(g).inside);
        }
    }
}

TEST_CASE("left inverse certifies the distance equality") {
    Rng rng(88);
    for (int i = 0; i < 10; ++i) {
        const GeodesicSpec spec = (i % 2 == 0) ? random_triangular_identity(rng)
                                               : random_nontriangular_feasible(rng);
        const LeftInverse li = construct_left_inverse(spec);
        for (int k = 0; k < 6; ++k) {
            const Complex l1 = rng.disc_point(0.8);
            const Complex l2 = rng.disc_point(0.8);
            const Complex img1 = li.map(eval_geodesic(spec, l1));
            const Complex img2 = li.map(eval_geodesic(spec, l2));
            CHECK(std::abs(poincare(img1, img2) - poincare(l1, l2)) < 1e-9);
        }
    }
}

TEST_CASE("schwarz-pick inequality for library scalar maps") {
    Rng rng(89);
    for (int i = 0; i < 40; ++i) {
        const GeodesicSpec spec = random_triangular_identity(rng);
        const Complex zeta = rng.disc_point();
        const auto h = [&](Complex l) { return psi_z(zeta, eval_geodesic(spec, l)); };
        const Complex l1 = rng.disc_point(0.9);
        const Complex l2 = rng.disc_point(0.9);
        CHECK(poincare(h(l1), h(l2)) <= poincare(l1, l2) + 1e-10);
    }
}
