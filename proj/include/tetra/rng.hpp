#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace tetra {

// xoshiro256++ seeded through splitmix64.  Self-contained so that streams
// are reproducible byte-for-byte across standard libraries (the std::
// distributions are implementation defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

    // Standard complex Gaussian (variance 1 per component).
    std::complex<double> gaussian() {
        const double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
        const double t = 2.0 * pi() * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

    std::complex<double> unit_complex() {
        const double t = 2.0 * pi() * uniform();
        return {std::cos(t), std::sin(t)};
    }

    // Area-uniform point of the disc of radius r.
    std::complex<double> disc_point(double r = 1.0) {
        return r * std::sqrt(uniform()) * unit_complex();
    }

    // Independent stream for task `index`, derived from this stream's seed
    // material; used to make batch runs order independent.
    Rng fork(std::uint64_t index) const {
        return Rng(state_[0] ^ (0x632be59bd9b4e019ULL * (index + 1)));
    }

    static constexpr double pi() { return 3.14159265358979323846; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4]{};
};

// Van der Corput radical inverse; bases 2 and 3 give the 2-d Halton pairs.
inline double halton(std::uint64_t index, std::uint64_t base) {
    double f = 1.0, r = 0.0;
    for (std::uint64_t i = index + 1; i > 0; i /= base) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(i % base);
    }
    return r;
}

// Low-discrepancy interior sample of the unit disc, radius capped by r_max.
inline std::complex<double> halton_disc(std::uint64_t index, double r_max = 0.96) {
    const double r = r_max * std::sqrt(halton(index, 2));
    const double t = 2.0 * Rng::pi() * halton(index, 3);
    return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace tetra
