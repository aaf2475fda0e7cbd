#include "dirac_sv/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

namespace dirac_sv::kernels {

namespace {

struct Table {
    Isa isa;
    void (*diff_scaled)(const double*, const double*, double*, std::size_t, double);
    void (*caxpy)(cplx, const cplx*, cplx*, std::size_t);
    double (*max_modulus)(const cplx*, std::size_t);
    double (*max_modulus_diff)(const cplx*, const cplx*, std::size_t);
    double (*sum)(const double*, std::size_t);
    cplx (*csum)(const cplx*, std::size_t);
    void (*central_diff_periodic)(const cplx*, cplx*, std::size_t, double);
};

constexpr Table kScalar{Isa::scalar,      scalar::diff_scaled, scalar::caxpy, scalar::max_modulus,
                        scalar::max_modulus_diff, scalar::sum, scalar::csum,  scalar::central_diff_periodic};
#ifdef DIRAC_SV_HAVE_AVX2_KERNELS
constexpr Table kAvx2{Isa::avx2,      avx2::diff_scaled, avx2::caxpy, avx2::max_modulus,
                      avx2::max_modulus_diff, avx2::sum, avx2::csum,  avx2::central_diff_periodic};
#endif

const Table* pick_default()
{
    if (const char* env = std::getenv("DIRAC_SV_KERNELS"); env && std::string_view(env) == "scalar")
        return &kScalar;
#ifdef DIRAC_SV_HAVE_AVX2_KERNELS
    if (available(Isa::avx2)) return &kAvx2;
#endif
    return &kScalar;
}

std::atomic<const Table*>& current()
{
    static std::atomic<const Table*> table{pick_default()};
    return table;
}

const Table& t() { return *current().load(std::memory_order_relaxed); }

}  // namespace

const char* to_string(Isa isa)
{
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool available(Isa isa)
{
    if (isa == Isa::scalar) return true;
#ifdef DIRAC_SV_HAVE_AVX2_KERNELS
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa active() { return t().isa; }

void set_active(Isa isa)
{
    if (!available(isa)) throw std::runtime_error(std::string("kernel set not available: ") + to_string(isa));
#ifdef DIRAC_SV_HAVE_AVX2_KERNELS
    current().store(isa == Isa::avx2 ? &kAvx2 : &kScalar);
#else
    current().store(&kScalar);
#endif
}

void diff_scaled(const double* a, const double* b, double* out, std::size_t n, double scale)
{
    t().diff_scaled(a, b, out, n, scale);
}
void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) { t().caxpy(alpha, x, y, n); }
double max_modulus(const cplx* x, std::size_t n) { return t().max_modulus(x, n); }
double max_modulus_diff(const cplx* x, const cplx* y, std::size_t n) { return t().max_modulus_diff(x, y, n); }
double sum(const double* x, std::size_t n) { return t().sum(x, n); }
cplx csum(const cplx* x, std::size_t n) { return t().csum(x, n); }
void central_diff_periodic(const cplx* in, cplx* out, std::size_t n, double scale)
{
    t().central_diff_periodic(in, out, n, scale);
}

}  // namespace dirac_sv::kernels
