#pragma once

#include <string>

#include <json.hpp>

#include "tetra/left_inverse.hpp"
#include "tetra/lifting.hpp"
#include "tetra/verifier.hpp"

// JSON wire formats.  Complex numbers are [re, im] arrays, polynomials are
// arrays of complex coefficients in ascending degree order, matrices are
// row-major 2x2 arrays.  Geodesic specs carry a "tag" discriminator.

namespace tetra {

using Json = nlohmann::json;

inline Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParameterError("complex: expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Json to_json(const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(to_json(c));
    return a;
}

inline Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParameterError("polynomial: expected an array");
    Poly p;
    for (const auto& c : j) p.push_back(complex_from_json(c));
    if (p.empty()) p.push_back(Complex(0.0));
    return p;
}

inline Json to_json(const RationalScalar& f) {
    return Json{{"num", to_json(f.num)}, {"den", to_json(f.den)}};
}

inline RationalScalar rational_from_json(const Json& j) {
    RationalScalar f;
    f.num = poly_from_json(j.at("num"));
    f.den = j.contains("den") ? poly_from_json(j.at("den")) : Poly{Complex(1.0)};
    return f;
}

inline Json to_json(const Mat2& m) {
    return Json::array({Json::array({to_json(m.e11), to_json(m.e12)}),
                        Json::array({to_json(m.e21), to_json(m.e22)})});
}

inline Mat2 mat2_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
        throw ParameterError("matrix: expected [[a,b],[c,d]]");
    return {complex_from_json(j[0][0]), complex_from_json(j[0][1]),
            complex_from_json(j[1][0]), complex_from_json(j[1][1])};
}

inline Json to_json(const Point3& p) {
    return Json::array({to_json(p.z1), to_json(p.z2), to_json(p.z3)});
}

inline Point3 point3_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3)
        throw ParameterError("point: expected [z1, z2, z3]");
    return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2])};
}

inline Json to_json(const GeodesicSpec& spec) {
    return std::visit(
        [](const auto& s) -> Json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TrivialSpec>) {
                return Json{{"tag", "trivial"}, {"theta", s.theta}};
            } else if constexpr (std::is_same_v<T, InsideTSpec>) {
                return Json{{"tag", "inside_t"}, {"f1", to_json(s.f1)}, {"f2", to_json(s.f2)}};
            } else if constexpr (std::is_same_v<T, TriangularSpec>) {
                return Json{{"tag", "triangular"},
                            {"u", to_json(s.u)},
                            {"v", to_json(s.v)},
                            {"c", to_json(s.c)},
                            {"mu", to_json(s.mu)},
                            {"z_identity", s.z_identity}};
            } else {
                return Json{{"tag", "nontriangular"}, {"a", to_json(s.a)},
                            {"b", to_json(s.b)},     {"c", to_json(s.c)},
                            {"d", to_json(s.d)},     {"mu", to_json(s.mu)},
                            {"beta", s.beta}};
            }
        },
        spec);
}

inline GeodesicSpec geodesic_from_json(const Json& j) {
    const std::string tag = j.at("tag").get<std::string>();
    if (tag == "trivial") {
        return TrivialSpec{j.at("theta").get<double>()};
    }
    if (tag == "inside_t") {
        InsideTSpec s;
        s.f1 = rational_from_json(j.at("f1"));
        s.f2 = rational_from_json(j.at("f2"));
        return s;
    }
    if (tag == "triangular") {
        TriangularSpec s;
        s.u = mat2_from_json(j.at("u"));
        s.v = mat2_from_json(j.at("v"));
        s.c = complex_from_json(j.at("c"));
        if (j.contains("mu")) s.mu = complex_from_json(j.at("mu"));
        s.z_identity = j.at("z_identity").get<bool>();
        validate(s);
        return s;
    }
    if (tag == "nontriangular") {
        NonTriangularSpec s;
        s.a = complex_from_json(j.at("a"));
        s.b = complex_from_json(j.at("b"));
        s.c = complex_from_json(j.at("c"));
        s.d = complex_from_json(j.at("d"));
        s.mu = complex_from_json(j.at("mu"));
        s.beta = j.at("beta").get<double>();
        validate(s);
        return s;
    }
    throw ParameterError("geodesic spec: unknown tag '" + tag + "'");
}

inline Json to_json(const LeftInverseSpec& spec) {
    return std::visit(
        [](const auto& s) -> Json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DirectSpec>) {
                return Json{{"tag", "direct"},
                            {"coordinate", s.coordinate},
                            {"phase", to_json(s.phase)}};
            } else if constexpr (std::is_same_v<T, PsiFamilySpec>) {
                return Json{{"tag", "psi"}, {"a", to_json(s.a)}, {"phase", to_json(s.phase)}};
            } else {
                return Json{{"tag", "composite"},
                            {"tau", to_json(s.tau)},
                            {"gamma", to_json(s.gamma)},
                            {"weights", Json::array({s.weights[0], s.weights[1], s.weights[2]})}};
            }
        },
        spec);
}

inline Json to_json(const LeftInverse& li) {
    Json j{{"spec", to_json(li.spec)}, {"residual", li.residual}};
    if (std::holds_alternative<CompositeSpec>(li.spec)) {
        j["h0"] = to_json(li.h0);
        j["h1"] = to_json(li.h1);
        j["schwarz_pick_defect"] = li.schwarz_pick_defect;
    }
    return j;
}

inline Json certificate_json(const LiftResult& r) {
    return Json{{"projection_residual", r.projection_residual},
                {"max_op_norm", r.max_op_norm},
                {"samples", r.samples}};
}

inline Json to_json(const EqualityReport& r) {
    return Json{{"spec_id", r.spec_id},
                {"lambda1", to_json(r.lambda1)},
                {"lambda2", to_json(r.lambda2)},
                {"upper", r.upper},
                {"lower", r.lower},
                {"gap", r.gap},
                {"pass", r.pass},
                {"inconclusive", r.inconclusive}};
}

inline Json to_json(const WitnessReport& r) {
    return Json{{"found", r.found},
                {"w", to_json(r.w)},
                {"z", to_json(r.z)},
                {"midpoint_margin", r.midpoint_margin},
                {"seed", r.seed},
                {"trials", r.trials}};
}

}  // namespace tetra
