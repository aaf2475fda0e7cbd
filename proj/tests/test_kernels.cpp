#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac_sv/kernels.hpp"
#include "dirac_sv/random.hpp"

#include <cmath>
#include <vector>

using namespace dirac_sv;
namespace k = dirac_sv::kernels;

namespace {

std::vector<double> reals(Rng& rng, std::size_t n)
{
    std::vector<double> v(n);
    for (auto& x : v) x = rng.normal();
    return v;
}

std::vector<cplx> complexes(Rng& rng, std::size_t n)
{
    std::vector<cplx> v(n);
    for (auto& x : v) x = rng.complex_normal();
    return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

TEST_CASE("scalar reference kernels")
{
    const std::vector<cplx> x{{3, 4}, {0, -1}, {1, 1}};
    CHECK(k::scalar::max_modulus(x.data(), 3) == 5.0);
    CHECK(k::scalar::max_modulus(x.data(), 0) == 0.0);
    CHECK(k::scalar::csum(x.data(), 3) == cplx(4, 4));
    std::vector<cplx> y{{1, 0}, {1, 0}, {1, 0}};
    k::scalar::caxpy(kI, x.data(), y.data(), 3);
    CHECK(y[0] == cplx(-3, 3));
    CHECK(k::scalar::max_modulus_diff(x.data(), y.data(), 3) == doctest::Approx(std::abs(cplx(6, -1))));
    std::vector<cplx> out(3);
    k::scalar::central_diff_periodic(x.data(), out.data(), 3, 0.5);
    CHECK(out[0] == 0.5 * (x[1] - x[2]));
    CHECK(out[2] == 0.5 * (x[0] - x[1]));
    const std::vector<double> a{1, 2, 3}, b{0.5, 0.5, 0.5};
    std::vector<double> d(3);
    k::scalar::diff_scaled(a.data(), b.data(), d.data(), 3, 2.0);
    CHECK(d[2] == 5.0);
    CHECK(k::scalar::sum(a.data(), 3) == 6.0);
}

#ifdef DIRAC_SV_HAVE_AVX2_KERNELS
TEST_CASE("AVX2 kernels agree with the scalar reference")
{
    if (!k::available(k::Isa::avx2)) {
        MESSAGE("AVX2 not available on this CPU, skipping");
        return;
    }
    Rng rng(2024);
    for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 7u, 8u, 9u, 15u, 17u, 31u, 33u, 63u, 67u, 1001u}) {
        CAPTURE(n);
        const auto ra = reals(rng, n), rb = reals(rng, n);
        const auto ca = complexes(rng, n), cb = complexes(rng, n);
        const cplx alpha = rng.complex_normal();

        std::vector<double> d1(n), d2(n);
        k::scalar::diff_scaled(ra.data(), rb.data(), d1.data(), n, 0.3);
        k::avx2::diff_scaled(ra.data(), rb.data(), d2.data(), n, 0.3);
        CHECK(max_diff(d1, d2) <= 1e-15);
        // aliasing: out == a
        auto alias = ra;
        k::avx2::diff_scaled(alias.data(), rb.data(), alias.data(), n, 0.3);
        CHECK(max_diff(alias, d1) <= 1e-15);

        auto y1 = cb, y2 = cb;
        k::scalar::caxpy(alpha, ca.data(), y1.data(), n);
        k::avx2::caxpy(alpha, ca.data(), y2.data(), n);
        CHECK(max_diff(y1, y2) <= 1e-14);
        auto self = ca;
        k::avx2::caxpy(alpha, self.data(), self.data(), n);
        auto self_ref = ca;
        k::scalar::caxpy(alpha, self_ref.data(), self_ref.data(), n);
        CHECK(max_diff(self, self_ref) <= 1e-14);

        const double m1 = k::scalar::max_modulus(ca.data(), n), m2 = k::avx2::max_modulus(ca.data(), n);
        CHECK(std::abs(m1 - m2) <= 1e-15 * (1 + m1));
        const double e1 = k::scalar::max_modulus_diff(ca.data(), cb.data(), n);
        const double e2 = k::avx2::max_modulus_diff(ca.data(), cb.data(), n);
        CHECK(std::abs(e1 - e2) <= 1e-15 * (1 + e1));

        CHECK(std::abs(k::scalar::sum(ra.data(), n) - k::avx2::sum(ra.data(), n)) <= 1e-13 * (1.0 + n));
        CHECK(std::abs(k::scalar::csum(ca.data(), n) - k::avx2::csum(ca.data(), n)) <= 1e-13 * (1.0 + n));

        if (n >= 3) {
            std::vector<cplx> o1(n), o2(n);
            k::scalar::central_diff_periodic(ca.data(), o1.data(), n, 1.7);
            k::avx2::central_diff_periodic(ca.data(), o2.data(), n, 1.7);
            CHECK(max_diff(o1, o2) <= 1e-15 * 8);
        }
    }
}

TEST_CASE("dispatch follows set_active")
{
    const k::Isa before = k::active();
    Rng rng(1);
    const auto ca = complexes(rng, 37);
    k::set_active(k::Isa::scalar);
    CHECK(k::active() == k::Isa::scalar);
    const cplx s1 = k::csum(ca.data(), ca.size());
    CHECK(s1 == k::scalar::csum(ca.data(), ca.size()));
    if (k::available(k::Isa::avx2)) {
        k::set_active(k::Isa::avx2);
        CHECK(k::active() == k::Isa::avx2);
        CHECK(k::csum(ca.data(), ca.size()) == k::avx2::csum(ca.data(), ca.size()));
    }
    k::set_active(before);
    CHECK(std::string(k::to_string(k::Isa::avx2)) == "avx2");
}
#endif
