// Acceptance suite: one check per criterion, each printed as a PASS/FAIL
// line with its measured figure.  Exit code 0 iff every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tetra/json_io.hpp"
#include "tetra/tetra.hpp"

#include "oracles.hpp"

using namespace tetra;

namespace {

std::string fmt_g(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool c1_definition_equivalence(std::string& detail) {
    Rng rng(1001);
    int disagreements = 0, inside = 0, tested = 0;
    for (int i = 0; i < 100000; ++i) {
        const Point3 z{Complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)),
                       Complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)),
                       Complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))};
        const auto a = in_tetrablock(z);
        const auto b = in_tetrablock_alt(z);
        const double r = rho(z);
        if (std::abs(a.margin) <= 1e-9 || std::abs(b.margin) <= 1e-9 ||
            std::abs(r - 1.0) <= 1e-9)
            continue;
        ++tested;
        if (a.inside != b.inside || a.inside != (r < 1.0)) ++disagreements;
        if (a.inside) ++inside;
    }
    detail = std::to_string(tested) + " points off the boundary band, " +
             std::to_string(inside) + " inside, " + std::to_string(disagreements) +
             " disagreements";
    return disagreements == 0;
}

bool c2_norm_oracle(std::string& detail) {
    Rng rng(1002);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Mat2 m{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
        worst = std::max(worst, std::abs(op_norm(m) - oracle::op_norm_eig(m)));
    }
    detail = "max |op_norm - eig oracle| = " + fmt_g(worst);
    return worst <= 1e-12;
}

// A disc into the domain with exactly planted zeros of f1 f2 - f3:
// f = (f1, f2, f1 f2 - delta B) with B the planted-root polynomial.
struct PlantedDisc {
    DiscMap f;
    std::vector<Complex> roots;
    std::vector<int> mults;
};

PlantedDisc make_planted_disc(Rng& rng) {
    for (;;) {
        const Poly f1{0.3 * rng.disc_point(), 0.25 * rng.disc_point()};
        const Poly f2{0.3 * rng.disc_point(), 0.25 * rng.disc_point()};
        const int k = 1 + static_cast<int>(rng.uniform_index(2));
        std::vector<Complex> roots;
        std::vector<int> mults;
        Poly b{Complex(1.0)};
        for (int i = 0; i < k; ++i) {
            Complex r = rng.disc_point(0.6);
            bool ok = true;
            for (const auto& other : roots)
                if (std::abs(r - other) < 0.3) ok = false;
            if (!ok) {
                --i;
                continue;
            }
            const int m = 1 + static_cast<int>(rng.uniform_index(2));
            roots.push_back(r);
            mults.push_back(m);
            for (int j = 0; j < m; ++j) b = poly_mul(b, Poly{-r, Complex(1.0)});
        }
        double delta = 0.05;
        for (int shrink = 0; shrink < 8; ++shrink) {
            const Poly f3 = poly_sub(poly_mul(f1, f2), poly_scale(b, delta));
            const DiscMap f = DiscMap::polynomial({f1, f2, f3});
            double min_margin = 1e300;
            for (int s = 0; s < 64; ++s) {
                const Complex l = std::polar(1.0, 2.0 * Rng::pi() * s / 64.0);
                const auto v = f.eval(l);
                min_margin = std::min(min_margin,
                                      in_tetrablock({v[0], v[1], v[2]}).margin);
            }
            if (min_margin > 0.02) return {f, roots, mults};
            delta *= 0.5;
        }
        // coefficients too large: resample
    }
}

bool c3_nu_invariance(std::string& detail) {
    Rng rng(1003);
    int mismatches = 0, checked = 0;
    for (int i = 0; i < 200; ++i) {
        const PlantedDisc disc = make_planted_disc(rng);
        TetraAutParams p;
        p.a1 = rng.disc_point(0.6);
        p.a2 = rng.disc_point(0.6);
        p.theta = rng.uniform(0.0, 2.0 * Rng::pi());
        p.eta = rng.uniform(0.0, 2.0 * Rng::pi());
        p.swap = rng.uniform() < 0.5;
        const auto composite_defect = [&](Complex l) {
            const auto v = disc.f.eval(l);
            const Point3 y = aut_tetrablock(p, {v[0], v[1], v[2]});
            return y.z1 * y.z2 - y.z3;
        };
        for (std::size_t j = 0; j < disc.roots.size(); ++j) {
            ++checked;
            const int base = nu_of_disc(disc.f, disc.roots[j]).value_or(-1);
            const int moved = vanishing_order_at(composite_defect, disc.roots[j], 1e-2);
            if (base != disc.mults[j] || moved != disc.mults[j]) ++mismatches;
        }
    }
    detail = std::to_string(checked) + " planted zeros, " +
             std::to_string(mismatches) + " order mismatches";
    return mismatches == 0;
}

bool c4_cohn(std::string& detail) {
    Rng rng(1004);
    int wrong = 0, boundary_skipped = 0;
    for (int i = 0; i < 10000; ++i) {
        const Complex a0 = rng.gaussian(), a1 = rng.gaussian(), a2 = rng.gaussian();
        bool boundary = false, all_outside = true;
        for (const auto& root : oracle::quadratic_roots(a0, a1, a2)) {
            if (std::abs(std::abs(root) - 1.0) < 1e-10) boundary = true;
            if (std::abs(root) < 1.0) all_outside = false;
        }
        if (boundary) {
            ++boundary_skipped;
            continue;
        }
        if (cohn_both_roots_outside(a0, a1, a2) != all_outside) ++wrong;
    }
    int closed_wrong = 0;
    for (int i = 0; i < 10000; ++i) {
        const Mat2 u = random_unitary(rng);
        const NonTriangularSpec s{u.e11, u.e12, u.e21, u.e22, rng.disc_point(0.9),
                                  rng.uniform(0.1, 0.9)};
        const auto [a0, a1, a2] = avoidance_quadratic(s);
        const bool cohn = cohn_both_roots_outside(a0, a1, a2, 1e-10);
        const double lhs = std::abs(s.c) * std::abs(s.d) * (1.0 + s.beta * s.beta);
        if (std::abs(lhs - s.beta) <= 1e-8) continue;  // boundary band
        if (cohn != (lhs <= s.beta)) ++closed_wrong;
    }
    detail = std::to_string(wrong) + " oracle mismatches (" +
             std::to_string(boundary_skipped) + " boundary skips), " +
             std::to_string(closed_wrong) + " closed-form mismatches";
    return wrong == 0 && closed_wrong == 0;
}

bool c5_triangular_left_inverses(std::string& detail) {
    Rng rng(1005);
    double worst = 0.0;
    int failures = 0;
    for (int i = 0; i < 500; ++i) {
        const GeodesicSpec spec = random_triangular_identity(rng);
        try {
            const LeftInverse li = construct_left_inverse(spec);
            worst = std::max(worst, li.residual);
            if (li.residual > 1e-10) ++failures;
        } catch (const Error&) {
            ++failures;
        }
    }
    detail = "500 specs, max residual " + fmt_g(worst) + ", " +
             std::to_string(failures) + " over threshold";
    return failures == 0;
}

bool c6_nontriangular_left_inverses(std::string& detail) {
    Rng rng(1006);
    double worst_sp = 0.0, worst_resid = 0.0;
    int failures = 0;
    for (int i = 0; i < 200; ++i) {
        const auto s = std::get<NonTriangularSpec>(random_nontriangular_feasible(rng));
        try {
            const LeftInverse li = left_inverse_nontriangular(s);
            worst_sp = std::max(worst_sp, li.schwarz_pick_defect);
            worst_resid = std::max(worst_resid, li.residual);
            if (li.schwarz_pick_defect > 1e-9 || li.residual > 1e-8) ++failures;
        } catch (const Error&) {
            ++failures;
        }
    }
    detail = "200 specs, max Schwarz-Pick defect " + fmt_g(worst_sp) +
             ", max composite residual " + fmt_g(worst_resid);
    return failures == 0;
}

bool c7_equality_on_geodesics(std::string& detail) {
    Rng rng(1007);
    double worst_gap = -1e300, worst_violation = 0.0;
    int failures = 0, pairs = 0;
    const auto check_spec = [&](const GeodesicSpec& spec) {
        LeftInverse li;
        try {
            li = construct_left_inverse(spec);
        } catch (const Error&) {
            ++failures;
            return;
        }
        for (int k = 0; k < 3; ++k) {
            const Complex l1 = rng.disc_point(0.8);
            Complex l2 = rng.disc_point(0.8);
            while (std::abs(l1 - l2) < 1e-3) l2 = rng.disc_point(0.8);
            const double upper = poincare(l1, l2);
            const double lower = caratheodory_lower(
                eval_geodesic(spec, l1), eval_geodesic(spec, l2), {li.map});
            const double gap = upper - lower;
            worst_gap = std::max(worst_gap, gap);
            worst_violation = std::max(worst_violation, -gap);
            if (gap > 1e-7 || gap < -1e-10) ++failures;
            ++pairs;
        }
    };
    for (int i = 0; i < 500; ++i) check_spec(random_triangular_identity(rng));
    for (int i = 0; i < 200; ++i) check_spec(random_nontriangular_feasible(rng));
    for (int i = 0; i < 20; ++i) check_spec(random_trivial(rng));
    for (int i = 0; i < 20; ++i) check_spec(random_inside_t(rng));
    detail = std::to_string(pairs) + " pairs, max gap " + fmt_g(worst_gap) +
             ", max c<=k violation " + fmt_g(worst_violation) + ", " +
             std::to_string(failures) + " failures";
    return failures == 0;
}

bool c8_rouche_solver(std::string& detail) {
    Rng rng(1008);
    double worst = 0.0;
    int failures = 0;
    for (int i = 0; i < 500; ++i) {
        const Complex zeta = (i % 3 == 0) ? rng.unit_complex() : rng.disc_point();
        const Point3 x = random_tetra_point(rng);
        const Weights3 weights =
            (i % 3 == 0) ? kWeights101 : ((i % 3 == 1) ? kWeights011 : kWeights112);
        const auto map = [zeta](const Point3& p) { return psi_z(zeta, p); };
        try {
            const auto result = rouche_fixed_point(
                std::function<Complex(const Point3&)>(map), weights, x, 1e-11);
            if (result.winding_certificate != 1) {
                ++failures;
                continue;
            }
            const auto g = [&](Complex l) {
                return l - map(scale_balanced(x, l, weights));
            };
            // oracle: 200 x 200 grid start, locally polished
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
            for (int it = 0; it < 60; ++it) {
                const Complex v = g(best);
                if (std::abs(v) < 1e-13) break;
                best -= v / ((g(best + 1e-7) - g(best - 1e-7)) / 2e-7);
            }
            worst = std::max(worst, std::abs(result.lambda_star - best));
            if (std::abs(result.lambda_star - best) > 1e-10) ++failures;
            // contour-radius stability
            for (double radius : {1.0 - 2e-6, 1.0 - 5e-7}) {
                if (winding_number(g, Complex(0.0), radius) != 1) ++failures;
            }
        } catch (const Error&) {
            ++failures;
        }
    }
    detail = "500 problems, max |solver - oracle| = " + fmt_g(worst) + ", " +
             std::to_string(failures) + " failures";
    return failures == 0;
}

bool c9_lifting(std::string& detail) {
    Rng rng(1009);
    double worst_resid = 0.0, worst_interior = 0.0;
    int failures = 0, lifts = 0;
    const auto interior_norm_max = [&](const LiftResult& r) {
        double m = 0.0;
        for (int k = 0; k < 32; ++k)
            m = std::max(m, op_norm(r.lift(halton_disc(k, 0.999))));
        return m;
    };
    const auto check = [&](const LiftResult& r) {
        ++lifts;
        worst_resid = std::max(worst_resid, r.projection_residual);
        const double interior = interior_norm_max(r);
        worst_interior = std::max(worst_interior, interior);
        if (r.projection_residual > 1e-10 || interior >= 1.0) ++failures;
    };
    // constants off the triangular set
    for (int i = 0; i < 30; ++i) {
        const Point3 z = random_tetra_point(rng);
        if (in_triangular_set(z, 1e-4)) continue;
        check(lift_avoiding_T(
            DiscMap::polynomial({Poly{z.z1}, Poly{z.z2}, Poly{z.z3}})));
    }
    // T-avoiding geodesics
    for (int i = 0; i < 40; ++i) {
        const auto s = std::get<NonTriangularSpec>(random_nontriangular_feasible(rng));
        check(lift_avoiding_T(to_disc_map(GeodesicSpec{s})));
    }
    // single-step factored discs, scaled into the interior
    for (int i = 0; i < 25; ++i) {
        const Complex a = rng.disc_point(0.45);
        const Complex b = rng.disc_point(0.45);
        const Complex c = 0.2 * rng.disc_point();
        if (std::abs(a * b - c) < 1e-3) {
            --i;
            continue;
        }
        check(lift_through_T_origin(
            DiscMap::polynomial({Poly{Complex(0.0), a}, Poly{Complex(0.0), b},
                                 Poly{Complex(0.0), Complex(0.0), c}}),
            1, 1));
    }
    for (int i = 0; i < 5; ++i) {
        const double t = rng.uniform(0.5, 0.9);
        const Complex rot = rng.unit_complex();
        check(lift_through_T_origin(
            DiscMap::polynomial({Poly{Complex(0.0)}, Poly{Complex(0.0)},
                                 Poly{Complex(0.0), t * t * rot}}),
            0, 1));
    }
    detail = std::to_string(lifts) + " lifts, max residual " +
             fmt_g(worst_resid) + ", max interior norm " +
             fmt_g(worst_interior);
    return failures == 0;
}

bool c10_rho_properties(std::string& detail) {
    Rng rng(1010);
    double worst_beta = 0.0, worst_hom = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double beta = i / 101.0;
        worst_beta = std::max(worst_beta,
                              std::abs(rho({0.0, 0.0, -beta * beta}) - beta));
    }
    for (int i = 0; i < 500; ++i) {
        const Point3 z{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        const Complex l = rng.disc_point();
        worst_hom = std::max(
            worst_hom, std::abs(rho(phi_lambda(l, z)) - std::abs(l) * rho(z)));
    }
    int psh_failures = 0;
    for (int i = 0; i < 100; ++i) {
        const Point3 z0{0.8 * rng.disc_point(), 0.8 * rng.disc_point(),
                        0.8 * rng.disc_point()};
        Point3 v{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        const double n = std::sqrt(std::norm(v.z1) + std::norm(v.z2) + std::norm(v.z3));
        v = v * Complex(1.0 / n, 0.0);
        if (!psh_spot_check(z0, v, rng.uniform(0.02, 0.2), 512, 1e-3)) ++psh_failures;
    }
    detail = "beta defect " + fmt_g(worst_beta) + ", homogeneity defect " +
             fmt_g(worst_hom) + ", " + std::to_string(psh_failures) +
             " sub-mean-value failures";
    return worst_beta <= 1e-12 && worst_hom <= 1e-12 && psh_failures == 0;
}

bool c11_nonconvexity_witness(std::string& detail) {
    const WitnessReport rep = find_nonconvexity_witness(1011, 1000000);
    if (!rep.found) {
        detail = "no witness within the budget";
        return false;
    }
    const Point3 mid = (rep.w + rep.z) * Complex(0.5);
    const bool valid = in_tetrablock(rep.w).margin > 1e-6 &&
                       in_tetrablock(rep.z).margin > 1e-6 &&
                       in_tetrablock_alt(rep.w).inside &&
                       in_tetrablock_alt(rep.z).inside &&
                       !in_tetrablock(mid).inside && !in_tetrablock_alt(mid).inside;
    const WitnessReport control = find_witness_convex_control(1011, 100000);
    detail = "witness after " + std::to_string(rep.trials) +
             " trials, midpoint margin " + fmt_g(rep.midpoint_margin) +
             (control.found ? ", convex control FOUND a witness"
                            : ", convex control clean");
    return valid && !control.found;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"definition equivalence (1e5 box samples)", c1_definition_equivalence},
        {"operator norm vs eigenvalue oracle", c2_norm_oracle},
        {"automorphism invariance of vanishing orders", c3_nu_invariance},
        {"Cohn criterion vs root oracles", c4_cohn},
        {"triangular left inverses (500 specs)", c5_triangular_left_inverses},
        {"non-triangular left inverses (200 specs)", c6_nontriangular_left_inverses},
        {"Caratheodory = Lempert on geodesic pairs", c7_equality_on_geodesics},
        {"Rouche fixed-point solver vs grid oracle", c8_rouche_solver},
        {"lifting round trips and norm bounds", c9_lifting},
        {"rho: values, homogeneity, sub-mean-value", c10_rho_properties},
        {"non-convexity witness search", c11_nonconvexity_witness},
    };

    // wall-clock budgets per criterion, seconds
    const double runtime_limit[11] = {5.0, 60.0, 120.0, 60.0, 30.0, 120.0,
                                      300.0, 300.0, 120.0, 60.0, 60.0};

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (seconds > runtime_limit[i]) {
            ok = false;
            detail += " [over runtime target]";
        }
        if (!ok) ++failed;
        std::printf("[%2zu/11] %s  %s - %s (%.2f s)\n", i + 1,
                    ok ? "PASS" : "FAIL", criteria[i].name.c_str(), detail.c_str(),
                    seconds);
        std::fflush(stdout);
    }
    if (failed > 0) std::printf("%d criteria failed\n", failed);
    else std::printf("all 11 criteria passed\n");
    return failed == 0 ? 0 : 1;
}
