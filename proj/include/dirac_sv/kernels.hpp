#pragma once

// Data-parallel inner loops over sampled fields.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2/FMA variant. The variant is picked once at first use from the CPU
// feature flags; DIRAC_SV_KERNELS=scalar in the environment (or set_active)
// forces the reference path. Complex arrays are std::complex<double>, which
// is laid out as interleaved (re, im) pairs.

#include <complex>
#include <cstddef>

namespace dirac_sv::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);
bool available(Isa isa);
Isa active();
void set_active(Isa isa);

/// out[i] = (a[i] - b[i]) * scale, n doubles. out may alias a or b.
void diff_scaled(const double* a, const double* b, double* out, std::size_t n, double scale);
/// y[i] += alpha * x[i]
void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
/// max_i |x[i]|
double max_modulus(const cplx* x, std::size_t n);
/// max_i |x[i] - y[i]|
double max_modulus_diff(const cplx* x, const cplx* y, std::size_t n);
double sum(const double* x, std::size_t n);
cplx csum(const cplx* x, std::size_t n);
/// Periodic second-order central difference along one contiguous line:
/// out[i] = (in[i+1] - in[i-1]) * scale with wrap-around. out must not alias in.
void central_diff_periodic(const cplx* in, cplx* out, std::size_t n, double scale);

namespace scalar {
void diff_scaled(const double* a, const double* b, double* out, std::size_t n, double scale);
void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
double max_modulus(const cplx* x, std::size_t n);
double max_modulus_diff(const cplx* x, const cplx* y, std::size_t n);
double sum(const double* x, std::size_t n);
cplx csum(const cplx* x, std::size_t n);
void central_diff_periodic(const cplx* in, cplx* out, std::size_t n, double scale);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define DIRAC_SV_HAVE_AVX2_KERNELS 1
namespace avx2 {
void diff_scaled(const double* a, const double* b, double* out, std::size_t n, double scale);
void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
double max_modulus(const cplx* x, std::size_t n);
double max_modulus_diff(const cplx* x, const cplx* y, std::size_t n);
double sum(const double* x, std::size_t n);
cplx csum(const cplx* x, std::size_t n);
void central_diff_periodic(const cplx* in, cplx* out, std::size_t n, double scale);
}  // namespace avx2
#endif

}  // namespace dirac_sv::kernels
