#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac_sv/dirac2d.hpp"

#include <cmath>
#include <numbers>

using namespace dirac_sv;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

Spinor spinor2(cplx a, cplx b)
{
    Spinor s(2);
    s << a, b;
    return s;
}

RealVector vec2(double a, double b)
{
    RealVector v(2);
    v << a, b;
    return v;
}

Params2D random_params(Rng& rng)
{
    Params2D p;
    p.amplitude = rng.uniform(0.2, 2.0);
    Vec3 n = rng.unit_vector();
    n[1] = std::abs(n[1]);
    n[0] = std::abs(n[0]) + 1e-3;
    p.n = n.normalized();
    p.phi = rng.uniform(-3.0, 3.0);
    return p;
}

// Dirac density with derivatives from central differences of the parameter
// map; independent of the jet machinery.
cplx dirac_density_fd(const FieldConfig2D& c, const RealVector& x, double m)
{
    const GammaRep g = make_gamma_2d();
    const Spinor psi = psi_from_params_2d(c.params_at(x));
    std::array<Spinor, 4> d;
    const double h = 1e-5;
    for (int a = 0; a < 2; ++a) {
        RealVector xp = x, xm = x;
        xp[a] += h;
        xm[a] -= h;
        d[a] = (psi_from_params_2d(c.params_at(xp)) - psi_from_params_2d(c.params_at(xm))) / (2 * h);
    }
    cplx out = -m * (psi.adjoint() * g[0] * psi)(0, 0);
    for (int l = 0; l < 2; ++l) {
        const cplx fwd = (psi.adjoint() * g[0] * g[l] * d[l])(0, 0);
        const cplx back = (d[l].adjoint() * g[0] * g[l] * psi)(0, 0);
        out += 0.5 * kI * fwd - 0.5 * kI * back;
    }
    return out;
}

}  // namespace

TEST_CASE("observables of simple spinors")
{
    const Observables2D a = observables_2d(spinor2(1.0, 0.0));
    CHECK(a.rho == doctest::Approx(0.0));
    CHECK(a.j0 == doctest::Approx(1.0));
    CHECK(a.j1 == doctest::Approx(-1.0));
    const Observables2D b = observables_2d(spinor2(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)));
    CHECK(b.rho == doctest::Approx(1.0));
    CHECK(b.j0 == doctest::Approx(1.0));
    CHECK(b.j1 == doctest::Approx(0.0).epsilon(1e-15));
    const Observables2D z = observables_2d(spinor2(0.0, 0.0));
    CHECK(z.rho == 0.0);
    CHECK(z.j0 == 0.0);
}

TEST_CASE("spinor from parameters")
{
    Params2D p;
    p.amplitude = 0.0;
    CHECK(psi_from_params_2d(p).norm() == 0.0);

    p.amplitude = 1.0;
    p.n = Vec3(1, 0, 0);
    const Observables2D o = observables_2d(psi_from_params_2d(p));
    CHECK(o.rho == doctest::Approx(1.0));
    CHECK(o.j0 == doctest::Approx(1.0));
    CHECK(o.j1 == doctest::Approx(0.0).epsilon(1e-15));

    p.n = Vec3(std::sqrt(3.0) / 2, std::sqrt(1.0 / 8), std::sqrt(1.0 / 8));
    const Observables2D q = observables_2d(psi_from_params_2d(p));
    CHECK(q.rho == doctest::Approx(2 * 0.75 - 1));
    CHECK(q.j0 == doctest::Approx(1.0));
    CHECK(q.j1 == doctest::Approx(-2 * std::sqrt(1.0 / 8) * std::sqrt(3.0) / 2));

    // explicit 2x2 products: A (sigma.n) e^{i phi} applied to (1,1)/sqrt2
    Rng rng(8);
    const auto s = pauli_matrices();
    for (int i = 0; i < 50; ++i) {
        const Params2D r = random_params(rng);
        const ComplexMatrix sn = r.n[0] * s[0] + r.n[1] * s[1] + r.n[2] * s[2];
        const Spinor expect = r.amplitude * std::exp(kI * r.phi) * sn * spinor2(1, 1) / std::sqrt(2.0);
        CHECK((psi_from_params_2d(r) - expect).norm() < 1e-14);
        const Observables2D ob = observables_2d(expect);
        const double a2 = r.amplitude * r.amplitude;
        CHECK(ob.rho == doctest::Approx(a2 * (2 * r.n[0] * r.n[0] - 1)).epsilon(1e-12));
        CHECK(ob.j0 == doctest::Approx(a2).epsilon(1e-12));
        CHECK(ob.j1 == doctest::Approx(-2 * a2 * r.n[2] * r.n[0]).epsilon(1e-12));
        CHECK(ob.j0 * ob.j0 - ob.j1 * ob.j1 - ob.rho * ob.rho ==
              doctest::Approx(4 * a2 * a2 * r.n[0] * r.n[0] * r.n[1] * r.n[1]).epsilon(1e-10));
    }
}

TEST_CASE("parameters from observables")
{
    Observables2D o;
    o.rho = 1;
    o.j0 = 1;
    o.j1 = 0;
    const Params2D p = params_from_observables(o);
    CHECK(p.amplitude == doctest::Approx(1.0));
    CHECK((p.n - Vec3(1, 0, 0)).norm() < 1e-15);

    o.rho = 0;
    o.j1 = -1;
    const Params2D q = params_from_observables(o);
    CHECK((q.n - Vec3(1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0))).norm() < 1e-15);

    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        const Params2D r = random_params(rng);
        const Params2D back = params_from_observables(observables_2d(psi_from_params_2d(r)));
        CHECK(std::abs(back.amplitude - r.amplitude) < 1e-12);
        CHECK((back.n - r.n).norm() < 1e-7);
        CHECK(std::abs(std::remainder(back.phi - r.phi, kTau)) < 1e-7);
    }
    o.rho = -1;
    o.j0 = 1;
    o.j1 = 0;
    CHECK_THROWS_AS(params_from_observables(o), DomainError);
}

TEST_CASE("covariant vector q")
{
    const CovariantVars2D c = q_from_j(1.0, Eigen::Vector2d(2, 0));
    CHECK(c.q[0] == doctest::Approx(std::sqrt(3.0)));
    CHECK(c.q[1] == 0.0);
    CHECK(c.f[0] * c.f[0] - c.f[1] * c.f[1] == 1.0);
    const Eigen::Vector2d j = j_from_q(1.0, c.q);
    CHECK(j[0] == doctest::Approx(2.0));
    CHECK(std::abs(j[1]) < 1e-15);
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        const double rho = rng.uniform(-2.0, 2.0);
        const double j1 = rng.uniform(-3.0, 3.0);
        const double j0 = std::sqrt(rho * rho + j1 * j1) + rng.uniform(0.05, 2.0);
        const Eigen::Vector2d jj(j0, j1);
        if (std::abs(rho) < 1e-3) continue;
        CHECK((j_from_q(rho, q_from_j(rho, jj).q) - jj).norm() < 1e-9 * (1 + jj.norm()));
    }
    CHECK_THROWS_AS(q_from_j(1.0, Eigen::Vector2d(1, 0)), DomainError);
    CHECK_THROWS_AS(j_from_q(0.0, Eigen::Vector2d(2, 0)), DomainError);
    CHECK_THROWS_AS(j_from_q(1.0, Eigen::Vector2d(1, 0)), DomainError);
}

TEST_CASE("intertwining operator on a rest-frame wave")
{
    const Grid g = Grid::with_extents(2, 16, {kTau, kTau, 1, 1});
    PlaneWave w;
    w.k = vec2(1.0, 0.0);
    w.amplitudes = {1.0};
    const Field psi = Field::sample(g, w);
    const Field d = lhat_apply(vec2(1.0, 0.0), psi, 1.0);
    for (std::size_t p = 0; p < psi.points(); ++p) {
        CHECK(std::abs(d.at(0, p) - 2.0 * psi.at(0, p)) < 1e-14);
        CHECK(std::abs(d.at(1, p) - 2.0 * psi.at(0, p)) < 1e-14);
    }
    CHECK(dirac_residual_2d(d, 1.0).component < 1e-12);
    CHECK(dirac_residual_2d(Field(g, 2), 1.0).component == 0.0);
    CHECK(lhat_apply(vec2(1.0, 0.0), Field(g, 1), 1.0).max_abs() == 0.0);
    CHECK_THROWS_AS(lhat_apply(vec2(1.0, 1.0), psi, 1.0), DomainError);
    CHECK_THROWS_AS(lhat_apply(vec2(-2.0, 1.0), psi, 1.0), DomainError);

    // (psi_KG, 0) is not a solution
    Field bad(g, 2);
    for (std::size_t p = 0; p < psi.points(); ++p) bad.at(0, p) = psi.at(0, p);
    bad.set_wave(std::nullopt);
    CHECK(dirac_residual_2d(bad, 1.0).component > 0.5);

    const PlaneWave moving = kg_plane_wave(1.0, RealVector::Constant(1, 1.0), 1.0);
    CHECK(lhat_boost_check(0.0, vec2(1.0, 0.0), moving, g, 1.0) < 1e-14);
}

TEST_CASE("Dirac density of constant spinors")
{
    const Grid g = Grid::uniform(2, 8, 0.5);
    Params2D p;
    p.amplitude = 1.0;
    p.n = Vec3(1, 0, 0);
    const FieldConfig2D c = FieldConfig2D::constant(g, p);
    const ModelParams2D model{1.7};
    for (const cplx v : lagrangian_dirac_2d(c, g, model)) CHECK(std::abs(v + 1.7) < 1e-14);
    Params2D r;
    r.amplitude = 1.3;
    r.n = Vec3(0.6, 0.48, 0.64);
    r.phi = 0.4;
    const FieldConfig2D cr = FieldConfig2D::constant(g, r);
    const double rho = 1.69 * (2 * 0.36 - 1);
    for (const double v : lagrangian_n_form(cr, g, model)) CHECK(v == doctest::Approx(-1.7 * rho));
    for (const double v : lagrangian_j_form(cr, g, model)) CHECK(v == doctest::Approx(-1.7 * rho));
    for (const double v : lagrangian_covariant_2d(cr, g, model)) CHECK(v == doctest::Approx(-1.7 * rho));
    CHECK(Field(g, 2).max_abs() == 0.0);
    for (const cplx v : lagrangian_dirac_2d(Field(g, 2), model)) CHECK(v == cplx(0.0));
}

TEST_CASE("Lagrangian densities against a finite-difference oracle")
{
    Rng rng(77);
    const Grid g = Grid::uniform(2, 32, 0.2);
    const ModelParams2D model{1.3};
    for (int trial = 0; trial < 3; ++trial) {
        const FieldConfig2D c = FieldConfig2D::random(rng, g);
        for (int i = 0; i < 20; ++i) {
            const RealVector x = g.coordinates(static_cast<std::size_t>(rng.integer(0, static_cast<int>(g.size()) - 1)));
            const LagrangianSet2D l = lagrangians_2d(c, x, model);
            const cplx oracle = dirac_density_fd(c, x, model.m);
            CHECK(std::abs(l.dirac - oracle) < 1e-7);
            CHECK(std::abs(oracle.imag()) < 1e-7);
            CHECK(std::abs(l.n_form - oracle.real()) < 1e-7);
            CHECK(std::abs(l.j_form - oracle.real()) < 1e-7);
            CHECK(std::abs(l.covariant - oracle.real()) < 1e-7);
            CHECK(std::abs(l.covariant_doubled - l.j_form_doubled) < 1e-8);
        }
    }
}

TEST_CASE("covariance probe")
{
    Rng rng(4);
    const Grid g = Grid::uniform(2, 16, 0.3);
    const FieldConfig2D c = FieldConfig2D::random(rng, g);
    const CovarianceProbe zero = covariance_probe_2d(boost_2d(0.0), c, g, ModelParams2D{});
    CHECK(zero.transformed < 1e-13);
    CHECK(zero.fixed < 1e-13);
    const CovarianceProbe b = covariance_probe_2d(boost_2d(0.5), c, g, ModelParams2D{});
    CHECK(b.transformed < 1e-8);
    CHECK(b.fixed > 1e-3);
    CHECK_THROWS_AS(covariance_probe_2d(identity_transform(4), c, g, ModelParams2D{}), std::invalid_argument);
}
