#pragma once

#include <cmath>
#include <complex>

#include "tetra/errors.hpp"
#include "tetra/mat2.hpp"

namespace tetra {

// Poincare distance on the unit disc, normalized as
//   p(a, b) = artanh |(a - b) / (1 - conj(b) a)|.
inline double poincare(Complex a, Complex b) {
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
        throw DomainError("poincare: arguments must lie in the open unit disc");
    const double m = std::abs((a - b) / (1.0 - std::conj(b) * a));
    return std::atanh(m);
}

// tau (lambda - gamma) / (1 - conj(gamma) lambda); disc automorphism when
// |gamma| < 1 and |tau| = 1.
inline Complex mobius(Complex gamma, Complex tau, Complex lambda) {
    if (std::abs(gamma) >= 1.0)
        throw ParameterError("mobius: |gamma| must be < 1");
    return tau * (lambda - gamma) / (1.0 - std::conj(gamma) * lambda);
}

// A disc automorphism in closed form, kept as a value so that inverses and
// compositions stay exact.
struct MobiusMap {
    Complex gamma{};    // zero of the map
    Complex tau{1.0};   // unimodular factor

    Complex operator()(Complex lambda) const { return mobius(gamma, tau, lambda); }

    Complex inverse_at(Complex w) const {
        // w = tau (l - gamma)/(1 - conj(gamma) l)  =>  l = (w/tau + gamma)/(1 + conj(gamma) w/tau)
        const Complex u = w / tau;
        return (u + gamma) / (1.0 + std::conj(gamma) * u);
    }

    MobiusMap inverse() const {
        // inverse(w) = (w + tau gamma) / (tau + conj(gamma) w)
        //            = conj(tau) (w - (-tau gamma)) / (1 - conj(-tau gamma) w)
        return {-tau * gamma, std::conj(tau)};
    }

    // Unique disc automorphism with given value and derivative at 0
    // (requires |h1| = 1 - |h0|^2, the Schwarz-Pick equality).
    static MobiusMap from_value_and_derivative(Complex h0, Complex h1) {
        const double ah1 = std::abs(h1);
        if (ah1 <= 0.0)
            throw ParameterError("MobiusMap: zero derivative");
        const Complex omega = h1 / ah1;
        return {-h0 / omega, omega};
    }
};

}  // namespace tetra
