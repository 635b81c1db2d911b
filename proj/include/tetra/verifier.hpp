#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "tetra/left_inverse.hpp"
#include "tetra/sampling.hpp"

namespace tetra {

// Sandwich report for one geodesic-generated pair: upper is the Lempert
// bound from the disc, lower the best Caratheodory value found; equality
// (gap <= tol_eq) is the computable shadow of the Lempert property.
struct EqualityReport {
    std::string spec_id{};
    Complex lambda1{}, lambda2{};
    double upper = 0.0;
    double lower = 0.0;
    double gap = 0.0;
    bool pass = false;
    bool inconclusive = false;
};

struct WitnessReport {
    Point3 w{}, z{};
    double midpoint_margin = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    bool found = false;
};

// The disc through f(lambda1), f(lambda2) witnesses k~ <= p(lambda1, lambda2).
inline double lempert_upper(const GeodesicSpec& spec, Complex lambda1, Complex lambda2) {
    (void)spec;
    return poincare(lambda1, lambda2);
}

// Best lower bound for the Caratheodory distance: the Psi_z family scanned
// over a polar grid of the closed disc, pattern-search polish around the
// best grid point, plus any certified left inverses supplied by the caller.
inline double caratheodory_lower(
    const Point3& w, const Point3& z,
    const std::vector<std::function<Complex(const Point3&)>>& candidates = {},
    const Tolerances& tol = Tolerances::defaults()) {
    const auto value = [&](Complex zeta) {
        return poincare(psi_z(zeta, w, tol), psi_z(zeta, z, tol));
    };

    double best = 0.0;
    Complex best_zeta = 0.0;
    constexpr int kRad = 64, kAng = 64;
    for (int ir = 0; ir < kRad; ++ir) {
        const double r = static_cast<double>(ir) / (kRad - 1);
        for (int ia = 0; ia < kAng; ++ia) {
            const double t = 2.0 * Rng::pi() * static_cast<double>(ia) / kAng;
            const Complex zeta = std::polar(r, t);
            const double v = value(zeta);
            if (v > best) {
                best = v;
                best_zeta = zeta;
            }
        }
    }

    // compass polish, projected onto the closed disc
    double step = 1.5 / kRad;
    Complex zeta = best_zeta;
    for (int it = 0; it < 80 && step > 1e-10; ++it) {
        bool improved = false;
        const Complex dirs[4] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
        for (const Complex& d : dirs) {
            Complex cand = zeta + d;
            const double m = std::abs(cand);
            if (m > 1.0) cand /= m;
            const double v = value(cand);
            if (v > best) {
                best = v;
                zeta = cand;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }

    for (const auto& L : candidates)
        best = std::max(best, poincare(L(w), L(z)));
    return best;
}

// Upper and lower bounds for one pair on one spec; the constructed left
// inverse joins the candidate pool.  A construction failure is reported as
// inconclusive rather than as a counterexample.
inline EqualityReport check_equality_on_geodesic(
    const GeodesicSpec& spec, Complex lambda1, Complex lambda2,
    const std::string& spec_id = "",
    const Tolerances& tol = Tolerances::defaults()) {
    EqualityReport rep;
    rep.spec_id = spec_id.empty() ? spec_tag(spec) : spec_id;
    rep.lambda1 = lambda1;
    rep.lambda2 = lambda2;
    rep.upper = lempert_upper(spec, lambda1, lambda2);

    std::vector<std::function<Complex(const Point3&)>> candidates;
    try {
        candidates.push_back(construct_left_inverse(spec, tol).map);
    } catch (const Error&) {
        rep.inconclusive = true;
    }
    const Point3 w = eval_geodesic(spec, lambda1, tol);
    const Point3 z = eval_geodesic(spec, lambda2, tol);
    rep.lower = caratheodory_lower(w, z, candidates, tol);
    rep.gap = rep.upper - rep.lower;
    rep.pass = !rep.inconclusive && rep.gap <= tol.eq && rep.gap >= -1e-10;
    return rep;
}

// Sub-mean-value test of rho on the complex line z0 + r e^{i t} v:
//   rho(z0) <= circle average + quadrature slack.
inline bool psh_spot_check(const Point3& z0, const Point3& v, double r,
                           int n_nodes = 512, double slack = 1e-3) {
    double avg = 0.0;
    for (int k = 0; k < n_nodes; ++k) {
        const Complex e = std::polar(r, 2.0 * Rng::pi() * k / n_nodes);
        avg += rho({z0.z1 + e * v.z1, z0.z2 + e * v.z2, z0.z3 + e * v.z3});
    }
    avg /= n_nodes;
    return rho(z0) <= avg + slack;
}

namespace detail {

// Pair sampler for the witness search: near-boundary points of the
// tetrablock, mixing diagonal triangular points (a, a, a^2), generic
// triangular points and projections of symmetric contractions.
inline Point3 witness_candidate(Rng& rng) {
    const double which = rng.uniform();
    if (which < 0.4) {
        const Complex a = std::polar(rng.uniform(0.7, 0.97), rng.uniform(0.0, 2.0 * Rng::pi()));
        return {a, a, a * a};
    }
    if (which < 0.7) {
        const Complex a = std::polar(rng.uniform(0.5, 0.97), rng.uniform(0.0, 2.0 * Rng::pi()));
        const Complex b = std::polar(rng.uniform(0.5, 0.97), rng.uniform(0.0, 2.0 * Rng::pi()));
        return {a, b, a * b};
    }
    return project_pi(random_symmetric_contraction(rng, rng.uniform(0.85, 0.995)));
}

}  // namespace detail

// Search for strictly interior w, z whose midpoint leaves the tetrablock.
// Witness values are discovered, never asserted, and are re-checked with
// both defining formulas before being reported.
inline WitnessReport find_nonconvexity_witness(std::uint64_t seed, std::uint64_t budget,
                                               double min_margin = 1e-6) {
    Rng rng(seed);
    WitnessReport rep;
    rep.seed = seed;
    for (std::uint64_t trial = 0; trial < budget; ++trial) {
        const Point3 w = detail::witness_candidate(rng);
        const Point3 z = detail::witness_candidate(rng);
        if (in_tetrablock(w).margin <= min_margin) continue;
        if (in_tetrablock(z).margin <= min_margin) continue;
        const Point3 mid = (w + z) * Complex(0.5);
        const double margin = in_tetrablock(mid).margin;
        if (margin < -1e-9 && !in_tetrablock_alt(mid).inside) {
            rep.w = w;
            rep.z = z;
            rep.midpoint_margin = margin;
            rep.trials = trial + 1;
            rep.found = true;
            return rep;
        }
    }
    rep.trials = budget;
    return rep;
}

// Negative control: the same pair stream against a convex predicate (the
// unit polydisc) never produces a midpoint violation.
inline WitnessReport find_witness_convex_control(std::uint64_t seed,
                                                 std::uint64_t budget) {
    Rng rng(seed);
    const auto polydisc_margin = [](const Point3& p) {
        return 1.0 - std::max(std::abs(p.z1), std::max(std::abs(p.z2), std::abs(p.z3)));
    };
    WitnessReport rep;
    rep.seed = seed;
    for (std::uint64_t trial = 0; trial < budget; ++trial) {
        const Point3 w = detail::witness_candidate(rng);
        const Point3 z = detail::witness_candidate(rng);
        if (polydisc_margin(w) <= 1e-6 || polydisc_margin(z) <= 1e-6) continue;
        const Point3 mid = (w + z) * Complex(0.5);
        if (polydisc_margin(mid) < -1e-9) {
            rep.w = w;
            rep.z = z;
            rep.midpoint_margin = polydisc_margin(mid);
            rep.trials = trial + 1;
            rep.found = true;
            return rep;
        }
    }
    rep.trials = budget;
    return rep;
}

// ---------------------------------------------------------------------------
// batch suites (each task forks its own RNG stream, so reports do not depend
// on evaluation order)

inline std::vector<GeodesicSpec> certified_spec_population(Rng& rng, int n) {
    std::vector<GeodesicSpec> specs;
    specs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double which = rng.uniform();
        if (which < 0.4) specs.push_back(random_triangular_identity(rng));
        else if (which < 0.7) specs.push_back(random_nontriangular_feasible(rng));
        else if (which < 0.85) specs.push_back(random_trivial(rng));
        else specs.push_back(random_inside_t(rng));
    }
    return specs;
}

inline std::vector<EqualityReport> run_equality_suite(
    std::uint64_t seed, int n_specs, int pairs_per_spec = 3,
    const Tolerances& tol = Tolerances::defaults()) {
    Rng master(seed);
    const auto specs = certified_spec_population(master, n_specs);
    std::vector<EqualityReport> reports;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        Rng task = master.fork(i);
        for (int k = 0; k < pairs_per_spec; ++k) {
            const Complex l1 = task.disc_point(0.8);
            Complex l2 = task.disc_point(0.8);
            while (std::abs(l1 - l2) < 1e-3) l2 = task.disc_point(0.8);
            auto rep = check_equality_on_geodesic(
                specs[i], l1, l2,
                spec_tag(specs[i]) + "#" + std::to_string(i), tol);
            reports.push_back(rep);
        }
    }
    return reports;
}

// Transport a pair by a random automorphism and compare the sandwich: both
// bounds are biholomorphically invariant when the disc and the left inverse
// are transported along.
struct InvarianceReport {
    std::string spec_id{};
    double gap_base = 0.0;
    double gap_moved = 0.0;
    bool pass = false;
};

inline std::vector<InvarianceReport> run_invariance_suite(
    std::uint64_t seed, int n_specs,
    const Tolerances& tol = Tolerances::defaults()) {
    Rng master(seed);
    std::vector<InvarianceReport> out;
    for (int i = 0; i < n_specs; ++i) {
        Rng task = master.fork(static_cast<std::uint64_t>(i));
        const GeodesicSpec spec = (task.uniform() < 0.5)
                                      ? random_triangular_identity(task)
                                      : random_nontriangular_feasible(task);
        TetraAutParams p;
        p.a1 = task.disc_point(0.5);
        p.a2 = task.disc_point(0.5);
        p.theta = task.uniform(0.0, 2.0 * Rng::pi());
        p.eta = task.uniform(0.0, 2.0 * Rng::pi());
        p.swap = task.uniform() < 0.5;

        const Complex l1 = task.disc_point(0.75);
        Complex l2 = task.disc_point(0.75);
        while (std::abs(l1 - l2) < 1e-3) l2 = task.disc_point(0.75);

        InvarianceReport rep;
        rep.spec_id = spec_tag(spec) + "#" + std::to_string(i);
        LeftInverse li;
        try {
            li = construct_left_inverse(spec, tol);
        } catch (const Error&) {
            rep.pass = false;
            out.push_back(rep);
            continue;
        }
        const Point3 w = eval_geodesic(spec, l1, tol);
        const Point3 z = eval_geodesic(spec, l2, tol);
        const double upper = poincare(l1, l2);
        rep.gap_base = upper - caratheodory_lower(w, z, {li.map}, tol);

        // transported pair and transported left inverse L o psi^{-1}
        const Point3 w2 = aut_tetrablock(p, w, tol);
        const Point3 z2 = aut_tetrablock(p, z, tol);
        const auto moved = [p, li, tol](const Point3& x) {
            return li.map(aut_tetrablock_inverse(p, x, tol));
        };
        rep.gap_moved = upper - caratheodory_lower(w2, z2, {moved}, tol);
        rep.pass = std::abs(rep.gap_base - rep.gap_moved) <= 1e-8;
        out.push_back(rep);
    }
    return out;
}

struct PshReport {
    int checked = 0;
    int passed = 0;
    bool radial_monotone = true;
};

inline PshReport run_psh_suite(std::uint64_t seed, int n_checks = 100) {
    Rng rng(seed);
    PshReport rep;
    for (int i = 0; i < n_checks; ++i) {
        const Point3 z0{0.8 * rng.disc_point(), 0.8 * rng.disc_point(), 0.8 * rng.disc_point()};
        Point3 v{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        const double n = std::sqrt(std::norm(v.z1) + std::norm(v.z2) + std::norm(v.z3));
        v = v * Complex(1.0 / n, 0.0);
        const double r = rng.uniform(0.02, 0.2);
        ++rep.checked;
        if (psh_spot_check(z0, v, r)) ++rep.passed;
    }
    // |lambda|-homogeneity under (1,1,2)-scaling makes t -> rho(phi_t(z))
    // nondecreasing on [0, 1]
    for (int i = 0; i < 32; ++i) {
        const Point3 z = random_tetra_point(rng);
        double prev = 0.0;
        for (int k = 1; k <= 10; ++k) {
            const double t = static_cast<double>(k) / 10.0;
            const double value = rho(phi_lambda(Complex(t, 0.0), z));
            if (value + 1e-12 < prev) rep.radial_monotone = false;
            prev = value;
        }
    }
    return rep;
}

}  // namespace tetra
