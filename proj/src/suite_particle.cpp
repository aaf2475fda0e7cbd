#include "dirac_sv/particle.hpp"
#include "dirac_sv/report.hpp"
#include "suite_util.hpp"

#include <fstream>

namespace dirac_sv {

using suite::order_from_ratio;

namespace {

constexpr double kSpan = 5.0;
constexpr double kStep = 0.01;

RealVector vec4(double a, double b, double c, double d)
{
    RealVector v(4);
    v << a, b, c, d;
    return v;
}

// Step-halving estimate of the global error: distance between the run at
// step h and the run at h/2 sampled at the common parameter values.
double integrator_tolerance(const TensorField& f, const ParticleParams& p, const RealVector& x0, const Vec3& v0)
{
    const Trajectory coarse = integrate_noncovariant(f, p, x0, v0, kSpan, kStep);
    const Trajectory fine = integrate_noncovariant(f, p, x0, v0, kSpan, kStep / 2);
    double d = 0.0;
    for (std::size_t i = 0; i < coarse.samples.size() && 2 * i < fine.samples.size(); ++i)
        d = std::max(d, (coarse.samples[i].x - fine.samples[2 * i].x).cwiseAbs().maxCoeff());
    return std::max(d, 1e-12);
}

}  // namespace

void run_particle_suite(SuiteContext& ctx)
{
    Rng& rng = ctx.rng();
    const ParticleParams pp{1.0, 0.8};
    const RealVector l = vec4(1.0, 0.0, 0.0, 0.0);
    const std::string gauge = "gauge l.xdot = 1";

    {
        const RealVector x = vec4(0.0, 0.3, -0.2, 0.1);
        const Vec3 zero_a = rhs_noncovariant(x, Vec3(0.4, 0.1, -0.3), field_zero().tensor(x), pp);
        const double e = 0.7;
        const Vec3 a = rhs_noncovariant(x, Vec3::Zero(), field_constant(Vec3(e, 0, 0), Vec3::Zero(), "e").tensor(x), pp);
        const double r = std::max(zero_a.cwiseAbs().maxCoeff(), (a - Vec3(pp.charge * e / pp.mass, 0, 0)).cwiseAbs().maxCoeff());
        ctx.check("force_examples", "m d^2x/dt^2 = e F^a_0 + e F^a_b dx^b/dt", r, 1e-15,
                  "F = 0 gives no acceleration; constant E from rest gives (eE/m, 0, 0)");
    }
    {
        double r = 0.0;
        for (int i = 0; i < 100; ++i) {
            const EMField f = field_constant(rng.unit_vector() * rng.uniform(0.0, 2.0),
                                             rng.unit_vector() * rng.uniform(0.0, 2.0), "random");
            const RealVector x = vec4(rng.normal(), rng.normal(), rng.normal(), rng.normal());
            const Vec3 v = rng.unit_vector() * rng.uniform(0.0, 0.9);
            r = std::max(r, std::abs(energy_identity_residual(x, v, f.tensor(x), pp)));
        }
        ctx.check("energy_identity", "m v.a = e F^a_0 v^a", r, 1e-14, "100 random constant fields and velocities");
    }
    {
        const Vec3 v0(0.3, -0.2, 0.5);
        const RealVector x0 = vec4(0.0, 1.0, 2.0, -1.0);
        const Trajectory a = integrate_noncovariant(field_zero().as_tensor(), pp, x0, v0, kSpan, 0.1);
        const Trajectory b = integrate_covariant(field_zero().as_tensor(), l, pp, x0, vec4(1.0, v0[0], v0[1], v0[2]),
                                                 kSpan, 0.1);
        double r = 0.0;
        for (const Trajectory* t : {&a, &b})
            for (const auto& s : t->samples) {
                const RealVector exact = x0 + s.tau * vec4(1.0, v0[0], v0[1], v0[2]);
                r = std::max(r, (s.x - exact).cwiseAbs().maxCoeff());
            }
        ctx.check("free_particle_exact", "straight lines for F = 0", r, 1e-12, "both integrators, step 0.1");
    }
    {
        const EMField f = field_constant(Vec3::Zero(), Vec3(0.2, 0.5, -0.4), "b");
        const Trajectory t = integrate_noncovariant(f.as_tensor(), pp, vec4(0, 0, 0, 0), Vec3(0.3, 0.1, -0.2), 20.0, kStep);
        const double v0 = t.samples.front().xdot.tail<3>().norm();
        double r = 0.0;
        for (const auto& s : t.samples) r = std::max(r, std::abs(s.xdot.tail<3>().norm() - v0));
        ctx.check("magnetic_speed_conserved", "magnetic force is orthogonal to v", r, 1e-10, "constant B, 2000 RK4 steps");
    }

    const std::vector<EMField> fields{field_zero(), field_constant(Vec3(0.3, -0.2, 0.1), Vec3::Zero(), "e_only"),
                                      field_constant(Vec3::Zero(), Vec3(0.2, 0.5, -0.4), "b_only"),
                                      field_constant(Vec3(0.3, 0.0, 0.0), Vec3(0.0, 0.0, 0.7), "crossed"),
                                      field_harmonic(0.5, Vec3(0.0, 0.0, 0.3))};
    const LorentzTransform boost = boost_4d(0.4, Vec3(1.0, 1.0, 0.0));
    const RealVector l_boosted = boost.apply_covector(l);
    for (const auto& field : fields) {
        const TensorField f = field.as_tensor();
        const RealVector x0 = vec4(0.0, 0.1, -0.2, 0.3);
        const Vec3 v0(0.2, -0.1, 0.15);
        const RealVector u0 = vec4(1.0, v0[0], v0[1], v0[2]);
        const double tol = integrator_tolerance(f, pp, x0, v0);

        const Trajectory plain = integrate_noncovariant(f, pp, x0, v0, kSpan, kStep);
        const Trajectory cov = integrate_covariant(f, l, pp, x0, u0, kSpan, kStep);
        ctx.check("reduction_" + field.name, "covariant equation with l = {1,0,0,0}, tau = t",
                  cov.aborted ? std::nan("") : trajectory_distance(plain, cov), 10.0 * tol,
                  fmt::format("{}; tolerance = 10 x step-halving estimate {:.3e}", gauge, tol));

        const TensorField f_boosted = transform_field(f, boost);
        const Trajectory moved =
            integrate_covariant(f_boosted, l_boosted, pp, boost.apply(x0), boost.apply(u0), kSpan, kStep);
        ctx.check("frame_covariance_" + field.name, "x~ = Lambda x, l~ = Lambda^-T l, F~ = Lambda F Lambda^T",
                  moved.aborted ? std::nan("") : trajectory_distance(plain, map_trajectory(moved, boost.inverse())),
                  10.0 * tol, "boost chi = 0.4 along (1, 1, 0), integrated there and mapped back");

        const RealVector u_fixed = boost.apply(u0) / l.dot(boost.apply(u0));
        const Trajectory fixed = map_trajectory(
            integrate_covariant(f_boosted, l, pp, boost.apply(x0), u_fixed, kSpan, kStep), boost.inverse());
        double deviation = 0.0;
        for (double t = 0.5; t <= 4.0; t += 0.25) {
            Vec3 a, b;
            if (position_at_time(plain, t, a) && position_at_time(fixed, t, b)) deviation = std::max(deviation, (a - b).norm());
        }
        ctx.info("preferred_frame_fixed_l_" + field.name, "l held at {1,0,0,0} in the boosted frame", deviation,
                 "max spatial deviation at equal coordinate time, t in [0.5, 4]");

        if (auto path = ctx.dump_path("particle_" + field.name + ".txt")) {
            std::ofstream out(*path);
            dump_trajectory(cov, out);
        }
    }

    {
        // circular orbit in constant B: r = m v / (e B), angular rate e B / m
        const double b = 1.0, v = 0.5, w = pp.charge * b / pp.mass, r = v / w;
        const EMField f = field_constant(Vec3::Zero(), Vec3(0.0, 0.0, b), "b");
        std::array<double, 3> pos{}, rad{};
        for (int k = 0; k < 3; ++k) {
            const Trajectory t =
                integrate_noncovariant(f.as_tensor(), pp, vec4(0.0, r, 0.0, 0.0), Vec3(0.0, -v, 0.0), 20.0, 0.2 / (1 << k));
            for (const auto& s : t.samples) {
                const Vec3 exact(r * std::cos(w * s.x[0]), -r * std::sin(w * s.x[0]), 0.0);
                pos[k] = std::max(pos[k], (Vec3(s.x[1], s.x[2], s.x[3]) - exact).norm());
                rad[k] = std::max(rad[k], std::abs(std::hypot(s.x[1], s.x[2]) - r));
            }
        }
        const double o1 = order_from_ratio(pos[0], pos[1]), o2 = order_from_ratio(pos[1], pos[2]);
        ctx.check("rk4_order_circular_orbit", "fourth-order global error", std::max(std::abs(o1 - 4.0), std::abs(o2 - 4.0)),
                  0.2,
                  fmt::format("position error ratios {:.2f}, {:.2f} (orders {:.3f}, {:.3f}); radius error orders "
                              "{:.3f}, {:.3f}",
                              pos[0] / pos[1], pos[1] / pos[2], o1, o2, order_from_ratio(rad[0], rad[1]),
                              order_from_ratio(rad[1], rad[2])));
    }
    {
        const EMField f = field_harmonic(0.5, Vec3(0.0, 0.0, 0.3));
        std::array<double, 3> drift{};
        for (int k = 0; k < 3; ++k) {
            const Trajectory t = integrate_noncovariant(f.as_tensor(), pp, vec4(0.0, 0.4, -0.2, 0.1), Vec3(0.1, 0.2, 0.05),
                                                        20.0, 0.2 / (1 << k));
            auto energy = [&](const ParticleState& s) {
                return 0.5 * pp.mass * s.xdot.tail<3>().squaredNorm() + pp.charge * f.potential(s.x);
            };
            const double e0 = energy(t.samples.front());
            for (const auto& s : t.samples) drift[k] = std::max(drift[k], std::abs(energy(s) - e0));
        }
        const double o1 = order_from_ratio(drift[0], drift[1]), o2 = order_from_ratio(drift[1], drift[2]);
        ctx.check("energy_drift_order", "energy balance of the nonrelativistic equations",
                  std::max(0.0, 4.0 - std::min(o1, o2)), 0.2,
                  fmt::format("static trap + B, drift {:.3e}, {:.3e}, {:.3e}; orders {:.3f}, {:.3f}", drift[0], drift[1],
                              drift[2], o1, o2));
    }
    {
        const Trajectory t = integrate_covariant(field_zero().as_tensor(), l, pp, vec4(0, 0, 0, 0), vec4(0.0, 1.0, 0.0, 0.0),
                                                 1.0, 0.1);
        ctx.check("singular_gauge_aborts", "l.xdot = 0 is singular", t.aborted && t.samples.size() == 1 ? 0.0 : 1.0, 0.0,
                  "integration stops and keeps the partial trajectory");
    }
}

}  // namespace dirac_sv
