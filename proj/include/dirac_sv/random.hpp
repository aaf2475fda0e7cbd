#pragma once

#include "dirac_sv/algebra.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace dirac_sv {

/// Seeded generator with portable uniform/normal draws (the standard
/// distributions are implementation-defined, the raw engine is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal()
    {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
    int integer(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)); }
    Vec3 unit_vector()
    {
        Vec3 v;
        do {
            v = Vec3(normal(), normal(), normal());
        } while (v.norm() < 1e-6);
        return v.normalized();
    }
    cplx complex_normal() { return {normal(), normal()}; }

private:
    std::mt19937_64 engine_;
};

}  // namespace dirac_sv
