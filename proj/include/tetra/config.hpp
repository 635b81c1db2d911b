#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tetra/errors.hpp"

namespace tetra {

// Numerical tolerances used throughout the library.  Every tolerance can be
// overridden by name (the names below are the stable, documented spelling).
struct Tolerances {
    double sym = 1e-10;       // symmetry defect |m12 - m21|
    double unit = 1e-10;      // unitarity defect ||M M* - I||_max
    double contour = 1e-8;    // minimum modulus on a winding contour
    double den_eps = 1e-6;    // radius pad for denominator root certification
    double fix = 1e-11;       // fixed-point residual target
    double eq = 1e-7;         // equality gap threshold for reports
    double boundary = 1e-9;   // half width of the boundary band
    double zero = 1e-12;      // below this a coefficient counts as zero

    void set(const std::string& name, double value) {
        if (name == "tol_sym") sym = value;
        else if (name == "tol_unit") unit = value;
        else if (name == "tol_contour") contour = value;
        else if (name == "eps_den") den_eps = value;
        else if (name == "tol_fix") fix = value;
        else if (name == "tol_eq") eq = value;
        else if (name == "tol_boundary") boundary = value;
        else if (name == "tol_zero") zero = value;
        else throw ParameterError("unknown tolerance name: " + name);
    }

    static const Tolerances& defaults() {
        static const Tolerances t{};
        return t;
    }
};

// Run-wide configuration shared by the CLI and the verification suites.
struct RunConfig {
    std::uint64_t seed = 0;
    Tolerances tol{};
    int samples = 64;
    std::string out_path{};       // empty = stdout
    std::string format = "json";  // json | csv
};

}  // namespace tetra
