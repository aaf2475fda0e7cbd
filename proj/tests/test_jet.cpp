#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac_sv/jet.hpp"

#include <cmath>
#include <functional>

using namespace dirac_sv;

namespace {

using J = Jet<2>;

double central(const std::function<double(double, double)>& f, double x, double y, int axis)
{
    const double h = 1e-5;
    if (axis == 0) return (f(x + h, y) - f(x - h, y)) / (2 * h);
    return (f(x, y + h) - f(x, y - h)) / (2 * h);
}

}  // namespace

TEST_CASE("jet derivatives against central differences")
{
    const auto fj = [](const J& x, const J& y) {
        return sqrt(x * x + 1.0) * sin(y) / (2.0 + cos(x * y)) + exp(0.3 * x) * log(y) - cosh(x - y) + sinh(0.5 * y) +
               acosh(1.5 + x * x);
    };
    const auto fd = [](double x, double y) {
        return std::sqrt(x * x + 1.0) * std::sin(y) / (2.0 + std::cos(x * y)) + std::exp(0.3 * x) * std::log(y) -
               std::cosh(x - y) + std::sinh(0.5 * y) + std::acosh(1.5 + x * x);
    };
    for (double x : {-0.7, 0.1, 1.3})
        for (double y : {0.4, 1.0, 2.2}) {
            const J r = fj(J::variable(x, 0), J::variable(y, 1));
            CHECK(r.v == doctest::Approx(fd(x, y)).epsilon(1e-14));
            CHECK(r.d[0] == doctest::Approx(central(fd, x, y, 0)).epsilon(1e-8));
            CHECK(r.d[1] == doctest::Approx(central(fd, x, y, 1)).epsilon(1e-8));
        }
}

TEST_CASE("entire boost factors")
{
    for (double s : {-4.0, -1e-3, -1e-6, 0.0, 1e-6, 1e-3, 0.5, 9.0}) {
        const double r = std::sqrt(std::abs(s));
        const double ch = s >= 0 ? std::cosh(r) : std::cos(r);
        const double shc = s == 0 ? 1.0 : (s > 0 ? std::sinh(r) / r : std::sin(r) / r);
        CHECK(cosh_sqrt(s) == doctest::Approx(ch).epsilon(1e-14));
        CHECK(sinhc_sqrt(s) == doctest::Approx(shc).epsilon(1e-12));
        const double h = 1e-5;
        const double slope = (sinhc_sqrt(s + h) - sinhc_sqrt(s - h)) / (2 * h);
        CHECK(sinhc_sqrt_slope(s) == doctest::Approx(slope).epsilon(1e-7));
        const Jet<1> js = sinhc_sqrt(Jet<1>::variable(s, 0));
        CHECK(js.d[0] == doctest::Approx(slope).epsilon(1e-7));
        const Jet<1> jc = cosh_sqrt(Jet<1>::variable(s, 0));
        const double cslope = (cosh_sqrt(s + h) - cosh_sqrt(s - h)) / (2 * h);
        CHECK(jc.d[0] == doctest::Approx(cslope).epsilon(1e-7));
    }
}
