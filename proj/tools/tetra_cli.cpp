// Command-line front end: membership queries, automorphisms, geodesic
// sampling, left-inverse certification, lifting, and the verification
// suites.  Complex numbers on the command line are `re,im` pairs or bare
// reals; JSON uses [re, im] arrays.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tetra/json_io.hpp"
#include "tetra/tetra.hpp"

namespace {

using namespace tetra;

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(text), 0.0};
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParameterError("cannot parse complex number '" + text + "'");
    }
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// All output goes through here: write-to-temp plus atomic rename, or stdout.
void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    const std::filesystem::path target(out_path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw Error("cannot open output file " + tmp.string());
        os << content;
    }
    std::filesystem::rename(tmp, target);
}

// Spec argument: inline JSON or @file.
Json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream is(arg.substr(1));
        if (!is) throw ParameterError("cannot open spec file " + arg.substr(1));
        std::stringstream buf;
        buf << is.rdbuf();
        return Json::parse(buf.str());
    }
    return Json::parse(arg);
}

struct CommonOpts {
    RunConfig config{};
    std::vector<std::string> tol_overrides{};

    void apply() {
        for (const auto& kv : tol_overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw ParameterError("tolerance override must be NAME=VALUE");
            config.tol.set(kv.substr(0, eq), std::stod(kv.substr(eq + 1)));
        }
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    auto* seed = cmd->add_option("--seed", opts.config.seed, "RNG seed");
    if (const char* env = std::getenv("TETRA_SEED"); env != nullptr)
        seed->default_val(std::string(env));
    cmd->add_option("--samples", opts.config.samples, "sample count");
    cmd->add_option("--format", opts.config.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.config.out_path, "output path (atomic write)");
    static const std::vector<std::string> names = {
        "tol_sym", "tol_unit", "tol_contour", "eps_den",
        "tol_fix", "tol_eq",   "tol_boundary", "tol_zero"};
    for (const auto& name : names) {
        cmd->add_option_function<double>(
            "--tol." + name,
            [&opts, name](double v) { opts.tol_overrides.push_back(name + "=" + fmt(v)); },
            "override tolerance " + name);
    }
}

int run_member(const std::string& domain, const std::vector<std::string>& coords,
               const CommonOpts& opts) {
    MembershipReport rep;
    if (domain == "tetrablock" || domain == "tetrablock-alt") {
        if (coords.size() != 3) throw ParameterError("tetrablock needs 3 coordinates");
        const Point3 z{parse_complex(coords[0]), parse_complex(coords[1]),
                       parse_complex(coords[2])};
        rep = domain == "tetrablock" ? in_tetrablock(z) : in_tetrablock_alt(z);
    } else if (domain == "g2") {
        if (coords.size() != 2) throw ParameterError("g2 needs 2 coordinates");
        rep = in_symmetrized_bidisc(parse_complex(coords[0]), parse_complex(coords[1]));
    } else if (domain == "cartan1" || domain == "cartan2") {
        if (coords.size() != 4) throw ParameterError("cartan domains need 4 entries");
        const Mat2 m{parse_complex(coords[0]), parse_complex(coords[1]),
                     parse_complex(coords[2]), parse_complex(coords[3])};
        rep = in_cartan(m, domain == "cartan1" ? CartanKind::I : CartanKind::II,
                        opts.config.tol);
    } else {
        throw ParameterError("unknown domain '" + domain + "'");
    }
    Json j{{"inside", rep.inside}, {"margin", rep.margin}};
    emit(opts.config.out_path, j.dump() + "\n");
    return rep.inside ? 0 : 1;
}

int run_geodesic(const std::string& spec_arg, const CommonOpts& opts) {
    const GeodesicSpec spec = geodesic_from_json(load_json_arg(spec_arg));
    std::ostringstream os;
    os << "re_lambda,im_lambda,re_f1,im_f1,re_f2,im_f2,re_f3,im_f3,margin\n";
    const int n = opts.config.samples;
    for (int i = 0; i < n; ++i) {
        const Complex lambda =
            i == 0 ? Complex(0.0) : halton_disc(static_cast<std::uint64_t>(i - 1), 0.95);
        const Point3 f = eval_geodesic(spec, lambda, opts.config.tol);
        os << fmt(lambda.real()) << ',' << fmt(lambda.imag()) << ','
           << fmt(f.z1.real()) << ',' << fmt(f.z1.imag()) << ','
           << fmt(f.z2.real()) << ',' << fmt(f.z2.imag()) << ','
           << fmt(f.z3.real()) << ',' << fmt(f.z3.imag()) << ','
           << fmt(in_tetrablock(f).margin) << '\n';
    }
    emit(opts.config.out_path, os.str());
    return 0;
}

int run_leftinv(const std::string& spec_arg, const CommonOpts& opts) {
    const GeodesicSpec spec = geodesic_from_json(load_json_arg(spec_arg));
    const LeftInverse li = construct_left_inverse(spec, opts.config.tol);
    Json j = to_json(li);
    j["geodesic"] = to_json(spec);
    emit(opts.config.out_path, j.dump() + "\n");
    return 0;
}

int run_lift(const std::string& spec_arg, const std::string& disc_arg,
             std::optional<int> n, std::optional<int> m, int branch,
             const CommonOpts& opts) {
    DiscMap f;
    if (!spec_arg.empty()) {
        f = to_disc_map(geodesic_from_json(load_json_arg(spec_arg)), opts.config.tol);
    } else if (!disc_arg.empty()) {
        const Json j = load_json_arg(disc_arg);
        std::vector<Poly> nums, dens;
        for (const auto& p : j.at("num")) nums.push_back(poly_from_json(p));
        if (j.contains("den"))
            for (const auto& p : j.at("den")) dens.push_back(poly_from_json(p));
        f = DiscMap(nums, dens, opts.config.tol);
    } else {
        throw ParameterError("lift: need --spec or --disc");
    }
    LiftResult r;
    if (n || m) {
        const auto guess = detect_origin_orders(f, opts.config.tol);
        r = lift_through_T_origin(f, n.value_or(guess.first), m.value_or(guess.second),
                                  branch, opts.config.tol);
    } else {
        r = lift_avoiding_T(f, branch, opts.config.tol);
    }
    emit(opts.config.out_path, certificate_json(r).dump() + "\n");
    return 0;
}

int run_rho(const std::vector<std::string>& coords, const CommonOpts& opts) {
    if (coords.size() != 3) throw ParameterError("rho needs 3 coordinates");
    const Point3 z{parse_complex(coords[0]), parse_complex(coords[1]),
                   parse_complex(coords[2])};
    emit(opts.config.out_path, fmt(rho(z)) + "\n");
    return 0;
}

int run_aut(const TetraAutParams& p, bool inverse,
            const std::vector<std::string>& coords, const CommonOpts& opts) {
    if (coords.size() != 3) throw ParameterError("aut needs 3 coordinates");
    const Point3 z{parse_complex(coords[0]), parse_complex(coords[1]),
                   parse_complex(coords[2])};
    const Point3 img = inverse ? aut_tetrablock_inverse(p, z, opts.config.tol)
                               : aut_tetrablock(p, z, opts.config.tol);
    emit(opts.config.out_path, to_json(img).dump() + "\n");
    return 0;
}

int run_witness(std::uint64_t budget, const CommonOpts& opts) {
    const WitnessReport rep = find_nonconvexity_witness(opts.config.seed, budget);
    emit(opts.config.out_path, to_json(rep).dump() + "\n");
    return rep.found ? 0 : 1;
}

int run_verify(const std::string& suite, int n, std::uint64_t budget,
               const CommonOpts& opts) {
    const RunConfig& cfg = opts.config;
    std::ostringstream os;
    bool all_pass = true;
    if (suite == "equality") {
        const auto reports = run_equality_suite(cfg.seed, n, 3, cfg.tol);
        std::ostringstream csv;
        csv << "spec_id,gap,pass\n";
        for (const auto& r : reports) {
            os << to_json(r).dump() << "\n";
            csv << r.spec_id << ',' << fmt(r.gap) << ',' << (r.pass ? 1 : 0) << '\n';
            all_pass = all_pass && r.pass;
        }
        emit(cfg.out_path, cfg.format == "csv" ? csv.str() : os.str());
    } else if (suite == "invariance") {
        const auto reports = run_invariance_suite(cfg.seed, n, cfg.tol);
        std::ostringstream csv;
        csv << "spec_id,gap_base,gap_moved,pass\n";
        for (const auto& r : reports) {
            os << Json{{"spec_id", r.spec_id},
                       {"gap_base", r.gap_base},
                       {"gap_moved", r.gap_moved},
                       {"pass", r.pass}}
                      .dump()
               << "\n";
            csv << r.spec_id << ',' << fmt(r.gap_base) << ',' << fmt(r.gap_moved)
                << ',' << (r.pass ? 1 : 0) << '\n';
            all_pass = all_pass && r.pass;
        }
        emit(cfg.out_path, cfg.format == "csv" ? csv.str() : os.str());
    } else if (suite == "psh") {
        const PshReport rep = run_psh_suite(cfg.seed, n);
        all_pass = rep.passed == rep.checked && rep.radial_monotone;
        os << Json{{"checked", rep.checked},
                   {"passed", rep.passed},
                   {"radial_monotone", rep.radial_monotone},
                   {"pass", all_pass}}
                  .dump()
           << "\n";
        emit(cfg.out_path, os.str());
    } else if (suite == "nonconvex") {
        const WitnessReport rep = find_nonconvexity_witness(cfg.seed, budget);
        all_pass = rep.found;
        os << to_json(rep).dump() << "\n";
        emit(cfg.out_path, os.str());
    } else {
        throw ParameterError("unknown suite '" + suite + "'");
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tetrablock geometry toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;

    // member
    std::string domain = "tetrablock";
    std::vector<std::string> coords;
    auto* member = app.add_subcommand("member", "membership predicate");
    member->add_option("--domain", domain,
                       "tetrablock | tetrablock-alt | g2 | cartan1 | cartan2");
    member->add_option("coords", coords, "point coordinates (re or re,im)");
    add_common(member, opts);

    // geodesic
    std::string spec_arg;
    auto* geod = app.add_subcommand("geodesic", "sample an extremal disc to CSV");
    geod->add_option("--spec", spec_arg, "spec JSON (inline or @file)")->required();
    add_common(geod, opts);

    // leftinv
    std::string li_spec;
    auto* leftinv = app.add_subcommand("leftinv", "construct and certify a left inverse");
    leftinv->add_option("--spec", li_spec, "spec JSON (inline or @file)")->required();
    add_common(leftinv, opts);

    // lift
    std::string lift_spec, lift_disc;
    std::optional<int> lift_n, lift_m;
    int branch = +1;
    auto* lift = app.add_subcommand("lift", "lift a disc through pi");
    lift->add_option("--spec", lift_spec, "geodesic spec JSON");
    lift->add_option("--disc", lift_disc, "raw disc JSON {num:[...x3], den:[...]}");
    lift->add_option("--n", lift_n, "first monomial order");
    lift->add_option("--m", lift_m, "second monomial order");
    lift->add_option("--branch", branch, "square-root branch (+1 or -1)");
    add_common(lift, opts);

    // rho
    std::vector<std::string> rho_coords;
    auto* rhoc = app.add_subcommand("rho", "maximal preimage norm");
    rhoc->add_option("coords", rho_coords, "z1 z2 z3");
    add_common(rhoc, opts);

    // aut
    TetraAutParams params;
    std::vector<std::string> aut_coords;
    std::string a1_text = "0", a2_text = "0";
    bool inverse = false;
    auto* aut = app.add_subcommand("aut", "apply a tetrablock automorphism");
    aut->add_option("--a1", a1_text, "diagonal parameter a1 (re,im)");
    aut->add_option("--a2", a2_text, "diagonal parameter a2 (re,im)");
    aut->add_option("--theta", params.theta, "angle theta");
    aut->add_option("--eta", params.eta, "angle eta");
    aut->add_flag("--swap", params.swap, "use the anti-diagonal U");
    aut->add_flag("--inverse", inverse, "apply the inverse automorphism");
    aut->add_option("coords", aut_coords, "z1 z2 z3");
    add_common(aut, opts);

    // verify
    std::string suite;
    int n_specs = 50;
    std::uint64_t budget = 1000000;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "equality | invariance | psh | nonconvex")
        ->required();
    verify->add_option("--n", n_specs, "number of specs / checks");
    verify->add_option("--budget", budget, "sampling budget (nonconvex)");
    add_common(verify, opts);

    // witness
    std::uint64_t wbudget = 1000000;
    auto* witness = app.add_subcommand("witness", "search a non-convexity witness");
    witness->add_option("--budget", wbudget, "sampling budget");
    add_common(witness, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        opts.apply();
        if (member->parsed()) return run_member(domain, coords, opts);
        if (geod->parsed()) return run_geodesic(spec_arg, opts);
        if (leftinv->parsed()) return run_leftinv(li_spec, opts);
        if (lift->parsed()) return run_lift(lift_spec, lift_disc, lift_n, lift_m, branch, opts);
        if (rhoc->parsed()) return run_rho(rho_coords, opts);
        if (aut->parsed()) {
            params.a1 = parse_complex(a1_text);
            params.a2 = parse_complex(a2_text);
            return run_aut(params, inverse, aut_coords, opts);
        }
        if (verify->parsed()) return run_verify(suite, n_specs, budget, opts);
        if (witness->parsed()) return run_witness(wbudget, opts);
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
