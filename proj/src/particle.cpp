#include "dirac_sv/particle.hpp"

#include <fmt/format.h>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace dirac_sv {

namespace {

const Metric& metric4()
{
    static const Metric g(4);
    return g;
}

}  // namespace

RealMatrix EMField::tensor(const RealVector& x) const
{
    const Vec3 e = electric(x);
    const Vec3 b = magnetic(x);
    RealMatrix f = RealMatrix::Zero(4, 4);
    for (int a = 0; a < 3; ++a) {
        f(a + 1, 0) = e[a];
        f(0, a + 1) = -e[a];
    }
    f(1, 2) = -b[2];
    f(2, 1) = b[2];
    f(1, 3) = b[1];
    f(3, 1) = -b[1];
    f(2, 3) = -b[0];
    f(3, 2) = b[0];
    return f;
}

TensorField EMField::as_tensor() const
{
    return [field = *this](const RealVector& x) { return field.tensor(x); };
}

EMField field_zero()
{
    EMField f;
    f.name = "zero";
    f.electric = [](const RealVector&) { return Vec3::Zero().eval(); };
    f.magnetic = [](const RealVector&) { return Vec3::Zero().eval(); };
    f.potential = [](const RealVector&) { return 0.0; };
    return f;
}

EMField field_constant(const Vec3& e, const Vec3& b, std::string name)
{
    EMField f;
    f.name = std::move(name);
    f.electric = [e](const RealVector&) { return e; };
    f.magnetic = [b](const RealVector&) { return b; };
    f.potential = [e](const RealVector& x) { return -(e[0] * x[1] + e[1] * x[2] + e[2] * x[3]); };
    return f;
}

EMField field_harmonic(double k, const Vec3& b)
{
    EMField f;
    f.name = "position_dependent";
    f.electric = [k](const RealVector& x) { return Vec3(-k * x[1], -k * x[2], 0.0); };
    f.magnetic = [b](const RealVector&) { return b; };
    f.potential = [k](const RealVector& x) { return 0.5 * k * (x[1] * x[1] + x[2] * x[2]); };
    return f;
}

TensorField transform_field(const TensorField& f, const LorentzTransform& lambda)
{
    const RealMatrix m = lambda.matrix;
    const RealMatrix inv = lambda.inverse();
    return [f, m, inv](const RealVector& x_t) -> RealMatrix { return m * f(inv * x_t) * m.transpose(); };
}

Vec3 rhs_noncovariant(const RealVector& x, const Vec3& v, const RealMatrix& f, const ParticleParams& p)
{
    (void)x;
    const double q = p.charge / p.mass;
    Vec3 a;
    for (int al = 0; al < 3; ++al) {
        // F^a_0 = F^{a0} g_00, F^a_b = F^{ab} g_bb
        double s = f(al + 1, 0);
        for (int be = 0; be < 3; ++be) s -= f(al + 1, be + 1) * v[be];
        a[al] = q * s;
    }
    return a;
}

double energy_identity_residual(const RealVector& x, const Vec3& v, const RealMatrix& f, const ParticleParams& p)
{
    const Vec3 a = rhs_noncovariant(x, v, f, p);
    double power = 0.0;
    for (int al = 0; al < 3; ++al) power += f(al + 1, 0) * v[al];
    return p.mass * v.dot(a) - p.charge * power;
}

RealVector covariant_momentum(const RealVector& xdot, const RealVector& l_lower)
{
    const Metric& g = metric4();
    const double a = l_lower.dot(xdot);
    if (std::abs(a) < 1e-12) throw DomainError("l.xdot vanishes");
    const RealVector l_up = g.lower(l_lower);  // diagonal metric: raising equals lowering
    return xdot / a - 0.5 * l_up * g.dot(xdot, xdot) / (a * a);
}

RealVector rhs_covariant(const RealVector& x, const RealVector& xdot, const RealMatrix& f, const RealVector& l_lower,
                         const ParticleParams& p)
{
    (void)x;
    const Metric& g = metric4();
    const double a = l_lower.dot(xdot);
    if (std::abs(a) < 1e-12) throw DomainError("l.xdot vanishes");
    const double b = g.dot(xdot, xdot);
    const RealVector l_up = g.lower(l_lower);
    const RealVector x_low = g.lower(xdot);

    Eigen::Matrix<double, 5, 4> system;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            system(i, k) = (i == k ? 1.0 / a : 0.0) - xdot[i] * l_lower[k] / (a * a) - l_up[i] * x_low[k] / (a * a) +
                           l_up[i] * b * l_lower[k] / (a * a * a);
    for (int k = 0; k < 4; ++k) system(4, k) = l_lower[k];

    Eigen::Matrix<double, 5, 1> rhs;
    rhs.head<4>() = (p.charge / p.mass) * (f * g.matrix() * xdot);
    rhs[4] = 0.0;
    const Eigen::Vector4d sol = system.colPivHouseholderQr().solve(rhs);
    return RealVector(sol);
}

Trajectory integrate(const SecondOrderRhs& rhs, const ParticleState& initial, double span, double step)
{
    if (!(step > 0.0)) throw std::invalid_argument("integration step must be positive");
    const long steps = std::lround(span / step);
    Trajectory t;
    t.samples.reserve(static_cast<std::size_t>(steps) + 1);
    ParticleState s = initial;
    t.samples.push_back(s);
    try {
        for (long n = 0; n < steps; ++n) {
            const RealVector& x = s.x;
            const RealVector& u = s.xdot;
            const RealVector a1 = rhs(x, u);
            const RealVector x2 = x + 0.5 * step * u, u2 = u + 0.5 * step * a1;
            const RealVector a2 = rhs(x2, u2);
            const RealVector x3 = x + 0.5 * step * u2, u3 = u + 0.5 * step * a2;
            const RealVector a3 = rhs(x3, u3);
            const RealVector x4 = x + step * u3, u4 = u + step * a3;
            const RealVector a4 = rhs(x4, u4);
            s.x = x + step / 6.0 * (u + 2.0 * u2 + 2.0 * u3 + u4);
            s.xdot = u + step / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
            s.tau = initial.tau + static_cast<double>(n + 1) * step;
            t.samples.push_back(s);
        }
    } catch (const DomainError& e) {
        t.aborted = true;
        t.reason = e.what();
    }
    return t;
}

Trajectory integrate_noncovariant(const TensorField& f, const ParticleParams& p, const RealVector& x0, const Vec3& v0,
                                  double span, double step)
{
    ParticleState init;
    init.tau = x0[0];
    init.x = x0;
    init.xdot = RealVector(4);
    init.xdot << 1.0, v0[0], v0[1], v0[2];
    const SecondOrderRhs rhs = [&](const RealVector& x, const RealVector& u) {
        const Vec3 a = rhs_noncovariant(x, Vec3(u[1], u[2], u[3]), f(x), p);
        RealVector out(4);
        out << 0.0, a[0], a[1], a[2];
        return out;
    };
    return integrate(rhs, init, span, step);
}

Trajectory integrate_covariant(const TensorField& f, const RealVector& l_lower, const ParticleParams& p,
                               const RealVector& x0, const RealVector& xdot0, double span, double step)
{
    ParticleState init;
    init.tau = 0.0;
    init.x = x0;
    init.xdot = xdot0;
    const SecondOrderRhs rhs = [&](const RealVector& x, const RealVector& u) {
        return rhs_covariant(x, u, f(x), l_lower, p);
    };
    return integrate(rhs, init, span, step);
}

double trajectory_distance(const Trajectory& a, const Trajectory& b)
{
    const std::size_t n = std::min(a.samples.size(), b.samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        d = std::max(d, (a.samples[i].x - b.samples[i].x).cwiseAbs().maxCoeff());
    return d;
}

Trajectory map_trajectory(const Trajectory& t, const RealMatrix& m)
{
    Trajectory out = t;
    for (auto& s : out.samples) {
        s.x = m * s.x;
        s.xdot = m * s.xdot;
    }
    return out;
}

bool position_at_time(const Trajectory& t, double time, Vec3& out)
{
    const auto& s = t.samples;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const double t0 = s[i].x[0], t1 = s[i + 1].x[0];
        if (time < t0 || time > t1 || t1 <= t0) continue;
        // Hermite basis in coordinate time, velocities dx/dt = xdot / xdot^0
        const double h = t1 - t0;
        const double u = (time - t0) / h;
        const double h00 = 2 * u * u * u - 3 * u * u + 1, h10 = u * u * u - 2 * u * u + u;
        const double h01 = -2 * u * u * u + 3 * u * u, h11 = u * u * u - u * u;
        for (int a = 0; a < 3; ++a) {
            const double v0 = s[i].xdot[a + 1] / s[i].xdot[0];
            const double v1 = s[i + 1].xdot[a + 1] / s[i + 1].xdot[0];
            out[a] = h00 * s[i].x[a + 1] + h10 * h * v0 + h01 * s[i + 1].x[a + 1] + h11 * h * v1;
        }
        return true;
    }
    return false;
}

void dump_trajectory(const Trajectory& t, std::ostream& out)
{
    for (const auto& s : t.samples)
        out << fmt::format("{:.17g} {:.17g} {:.17g} {:.17g} {:.17g}\n", s.tau, s.x[0], s.x[1], s.x[2], s.x[3]);
}

}  // namespace dirac_sv
