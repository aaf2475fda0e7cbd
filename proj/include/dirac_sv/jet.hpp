#pragma once

// Forward-mode first-derivative numbers.
//
// A Jet<N> carries a value together with its gradient with respect to N
// independent coordinates. All the smooth field checks evaluate Lagrangian
// densities through jets, so derivatives are exact to rounding rather than
// finite-difference approximations.

#include <array>
#include <cmath>
#include <complex>

namespace dirac_sv {

template <int N>
struct Jet {
    double v = 0.0;
    std::array<double, N> d{};

    constexpr Jet() = default;
    constexpr Jet(double value) : v(value) {}  // NOLINT: constants promote implicitly

    static constexpr Jet variable(double value, int axis)
    {
        Jet j(value);
        j.d[axis] = 1.0;
        return j;
    }

    Jet& operator+=(const Jet& o)
    {
        v += o.v;
        for (int i = 0; i < N; ++i) d[i] += o.d[i];
        return *this;
    }
    Jet& operator-=(const Jet& o)
    {
        v -= o.v;
        for (int i = 0; i < N; ++i) d[i] -= o.d[i];
        return *this;
    }
    Jet& operator*=(const Jet& o)
    {
        for (int i = 0; i < N; ++i) d[i] = d[i] * o.v + v * o.d[i];
        v *= o.v;
        return *this;
    }
    Jet& operator/=(const Jet& o)
    {
        const double inv = 1.0 / o.v;
        const double q = v * inv;
        for (int i = 0; i < N; ++i) d[i] = (d[i] - q * o.d[i]) * inv;
        v = q;
        return *this;
    }
    Jet& operator*=(double s)
    {
        v *= s;
        for (auto& x : d) x *= s;
        return *this;
    }
};

template <int N> Jet<N> operator+(Jet<N> a, const Jet<N>& b) { return a += b; }
template <int N> Jet<N> operator-(Jet<N> a, const Jet<N>& b) { return a -= b; }
template <int N> Jet<N> operator*(Jet<N> a, const Jet<N>& b) { return a *= b; }
template <int N> Jet<N> operator/(Jet<N> a, const Jet<N>& b) { return a /= b; }
template <int N> Jet<N> operator+(Jet<N> a, double b) { a.v += b; return a; }
template <int N> Jet<N> operator+(double a, Jet<N> b) { b.v += a; return b; }
template <int N> Jet<N> operator-(Jet<N> a, double b) { a.v -= b; return a; }
template <int N> Jet<N> operator-(double a, const Jet<N>& b) { return Jet<N>(a) - b; }
template <int N> Jet<N> operator*(Jet<N> a, double b) { return a *= b; }
template <int N> Jet<N> operator*(double a, Jet<N> b) { return b *= a; }
template <int N> Jet<N> operator/(Jet<N> a, double b) { return a *= (1.0 / b); }
template <int N> Jet<N> operator/(double a, const Jet<N>& b) { return Jet<N>(a) / b; }
template <int N> Jet<N> operator-(Jet<N> a) { return a *= -1.0; }

namespace detail {
template <int N>
Jet<N> chain(const Jet<N>& x, double value, double slope)
{
    Jet<N> r(value);
    for (int i = 0; i < N; ++i) r.d[i] = slope * x.d[i];
    return r;
}
}  // namespace detail

template <int N> Jet<N> sqrt(const Jet<N>& x)
{
    const double s = std::sqrt(x.v);
    return detail::chain(x, s, 0.5 / s);
}
template <int N> Jet<N> sin(const Jet<N>& x) { return detail::chain(x, std::sin(x.v), std::cos(x.v)); }
template <int N> Jet<N> cos(const Jet<N>& x) { return detail::chain(x, std::cos(x.v), -std::sin(x.v)); }
template <int N> Jet<N> exp(const Jet<N>& x)
{
    const double e = std::exp(x.v);
    return detail::chain(x, e, e);
}
template <int N> Jet<N> log(const Jet<N>& x) { return detail::chain(x, std::log(x.v), 1.0 / x.v); }
template <int N> Jet<N> cosh(const Jet<N>& x) { return detail::chain(x, std::cosh(x.v), std::sinh(x.v)); }
template <int N> Jet<N> sinh(const Jet<N>& x) { return detail::chain(x, std::sinh(x.v), std::cosh(x.v)); }
template <int N> Jet<N> acosh(const Jet<N>& x)
{
    return detail::chain(x, std::acosh(x.v), 1.0 / std::sqrt(x.v * x.v - 1.0));
}

// cosh(sqrt(s)) and sinh(sqrt(s))/sqrt(s): both are entire in s, which keeps
// boost factors smooth through zero rapidity.
inline double cosh_sqrt(double s)
{
    if (s < 0.0) return std::cos(std::sqrt(-s));
    return std::cosh(std::sqrt(s));
}
inline double sinhc_sqrt(double s)
{
    if (std::abs(s) < 1e-4) return 1.0 + s / 6.0 + s * s / 120.0 + s * s * s / 5040.0;
    if (s < 0.0) {
        const double r = std::sqrt(-s);
        return std::sin(r) / r;
    }
    const double r = std::sqrt(s);
    return std::sinh(r) / r;
}
// d/ds sinhc_sqrt(s) = (cosh_sqrt(s) - sinhc_sqrt(s)) / (2 s)
inline double sinhc_sqrt_slope(double s)
{
    if (std::abs(s) < 1e-3) return 1.0 / 6.0 + s / 60.0 + s * s / 1680.0 + s * s * s / 90720.0;
    return (cosh_sqrt(s) - sinhc_sqrt(s)) / (2.0 * s);
}
template <int N> Jet<N> cosh_sqrt(const Jet<N>& s)
{
    return detail::chain(s, cosh_sqrt(s.v), 0.5 * sinhc_sqrt(s.v));
}
template <int N> Jet<N> sinhc_sqrt(const Jet<N>& s)
{
    return detail::chain(s, sinhc_sqrt(s.v), sinhc_sqrt_slope(s.v));
}

inline double value_of(double x) { return x; }
template <int N> double value_of(const Jet<N>& x) { return x.v; }

// Spinor-valued jet: value plus one derivative spinor per coordinate.
template <int Components, int N>
struct SpinorJet {
    std::array<std::complex<double>, Components> v{};
    std::array<std::array<std::complex<double>, Components>, N> d{};
};

}  // namespace dirac_sv
