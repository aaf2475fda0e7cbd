#pragma once

// Random draws and small formatting helpers shared by the suite sources.

#include "dirac_sv/algebra.hpp"
#include "dirac_sv/random.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <string>

namespace dirac_sv::suite {

inline Spinor random_spinor(Rng& rng, int n)
{
    Spinor s(n);
    for (int i = 0; i < n; ++i) s[i] = rng.complex_normal();
    return s;
}

inline ComplexMatrix random_matrix(Rng& rng, int n, double max_norm)
{
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m(i, k) = rng.complex_normal();
    return m * (max_norm * rng.uniform(0.1, 1.0) / m.norm());
}

/// Antisymmetric lower-index generator with entries in [-size, size].
inline RealMatrix random_generator(Rng& rng, int dim, double size)
{
    RealMatrix w = RealMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int k = i + 1; k < dim; ++k) {
            w(i, k) = rng.uniform(-size, size);
            w(k, i) = -w(i, k);
        }
    return w;
}

inline std::string cplx_str(cplx c) { return fmt::format("{:.6f}{:+.6f}i", c.real(), c.imag()); }

/// Slope of log(error) against log(step) between consecutive refinements.
inline double order_from_ratio(double coarse, double fine, double refinement = 2.0)
{
    return std::log(coarse / fine) / std::log(refinement);
}

}  // namespace dirac_sv::suite
