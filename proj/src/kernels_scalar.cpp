#include "dirac_sv/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace dirac_sv::kernels::scalar {

void diff_scaled(const double* a, const double* b, double* out, std::size_t n, double scale)
{
    for (std::size_t i = 0; i < n; ++i) out[i] = (a[i] - b[i]) * scale;
}

void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double max_modulus(const cplx* x, std::size_t n)
{
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::norm(x[i]));
    return std::sqrt(m);
}

double max_modulus_diff(const cplx* x, const cplx* y, std::size_t n)
{
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::norm(x[i] - y[i]));
    return std::sqrt(m);
}

double sum(const double* x, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

cplx csum(const cplx* x, std::size_t n)
{
    cplx s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

void central_diff_periodic(const cplx* in, cplx* out, std::size_t n, double scale)
{
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t next = i + 1 == n ? 0 : i + 1;
        const std::size_t prev = i == 0 ? n - 1 : i - 1;
        out[i] = (in[next] - in[prev]) * scale;
    }
}

}  // namespace dirac_sv::kernels::scalar
