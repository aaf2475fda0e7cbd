// Compiled with -mavx2 -mfma; only entered after a runtime CPU check.
#include "dirac_sv/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace dirac_sv::kernels::avx2 {

namespace {

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

inline double hmax(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d m = _mm_max_pd(lo, hi);
    return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

// |z|^2 for the two complex numbers held in v, duplicated into both lanes of each pair
inline __m256d pair_norms(__m256d v)
{
    const __m256d sq = _mm256_mul_pd(v, v);
    return _mm256_add_pd(sq, _mm256_permute_pd(sq, 0b0101));
}

}  // namespace

void diff_scaled(const double* a, const double* b, double* out, std::size_t n, double scale)
{
    const __m256d s = _mm256_set1_pd(scale);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(d, s));
    }
    for (; i < n; ++i) out[i] = (a[i] - b[i]) * scale;
}

void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n)
{
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const double* xd = as_doubles(x);
    double* yd = as_doubles(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d swapped = _mm256_permute_pd(xv, 0b0101);
        // (ar xr - ai xi, ar xi + ai xr)
        const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, swapped));
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

double max_modulus(const cplx* x, std::size_t n)
{
    const double* xd = as_doubles(x);
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) m = _mm256_max_pd(m, pair_norms(_mm256_loadu_pd(xd + 2 * i)));
    double r = hmax(m);
    for (; i < n; ++i) r = std::max(r, std::norm(x[i]));
    return std::sqrt(r);
}

double max_modulus_diff(const cplx* x, const cplx* y, std::size_t n)
{
    const double* xd = as_doubles(x);
    const double* yd = as_doubles(y);
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(xd + 2 * i), _mm256_loadu_pd(yd + 2 * i));
        m = _mm256_max_pd(m, pair_norms(d));
    }
    double r = hmax(m);
    for (; i < n; ++i) r = std::max(r, std::norm(x[i] - y[i]));
    return std::sqrt(r);
}

double sum(const double* x, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) s += x[i];
    return s;
}

cplx csum(const cplx* x, std::size_t n)
{
    const double* xd = as_doubles(x);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(xd + 2 * i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(xd + 2 * i + 4));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    cplx s(lanes[0] + lanes[2], lanes[1] + lanes[3]);
    for (; i < n; ++i) s += x[i];
    return s;
}

void central_diff_periodic(const cplx* in, cplx* out, std::size_t n, double scale)
{
    if (n < 3) {
        scalar::central_diff_periodic(in, out, n, scale);
        return;
    }
    out[0] = (in[1] - in[n - 1]) * scale;
    diff_scaled(as_doubles(in + 2), as_doubles(in), as_doubles(out + 1), 2 * (n - 2), scale);
    out[n - 1] = (in[0] - in[n - 2]) * scale;
}

}  // namespace dirac_sv::kernels::avx2
