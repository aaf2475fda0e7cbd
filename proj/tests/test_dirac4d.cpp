#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac_sv/dirac4d.hpp"

#include <cmath>

using namespace dirac_sv;

namespace {

RealVector vec4(double a, double b, double c, double d)
{
    RealVector v(4);
    v << a, b, c, d;
    return v;
}

Spinor random_spinor(Rng& rng)
{
    Spinor s(4);
    for (int i = 0; i < 4; ++i) s[i] = rng.complex_normal();
    return s;
}

Params4D random_params(Rng& rng)
{
    Params4D p;
    p.amplitude = rng.uniform(0.3, 1.5);
    p.kappa = rng.uniform(-1.0, 1.0);
    p.phi = rng.uniform(-3.0, 3.0);
    p.eta = rng.unit_vector() * rng.uniform(0.0, 1.5);
    p.n = rng.unit_vector();
    p.z = rng.unit_vector();
    return p;
}

double mdot(const RealVector& a, const RealVector& b) { return a[0] * b[0] - a.tail(3).dot(b.tail(3)); }

// psibar M psi by plain matrix products
cplx bilinear(const Spinor& psi, const ComplexMatrix& m)
{
    const GammaRep g = make_gamma_4d();
    return (psi.adjoint() * g[0] * m * psi)(0, 0);
}

// Dirac density with central differences of the matrix-exponential route.
cplx dirac_density_fd(const FieldConfig4D& c, const RealVector& x, const Vec3& z, double m)
{
    const GammaRep g = make_gamma_4d();
    const Spinor psi = psi_from_params_4d(c.params_at(x, z));
    cplx out = -m * bilinear(psi, g.identity());
    const double h = 1e-5;
    for (int l = 0; l < 4; ++l) {
        RealVector xp = x, xm = x;
        xp[l] += h;
        xm[l] -= h;
        const Spinor d = (psi_from_params_4d(c.params_at(xp, z)) - psi_from_params_4d(c.params_at(xm, z))) / (2 * h);
        out += 0.5 * kI * (psi.adjoint() * g[0] * g[l] * d)(0, 0) - 0.5 * kI * (d.adjoint() * g[0] * g[l] * psi)(0, 0);
    }
    return out;
}

}  // namespace

TEST_CASE("bilinears")
{
    const GammaRep g = make_gamma_4d();
    const ComplexMatrix g5 = gamma5(g);
    Spinor e0 = Spinor::Zero(4);
    e0[0] = 1.0;
    const Observables4D o = observables_4d(e0);
    CHECK((o.j - vec4(1, 0, 0, 0)).norm() < 1e-15);
    for (int l = 0; l < 4; ++l) CHECK(o.s[l] == doctest::Approx(std::real(kI * bilinear(e0, g5 * g[l]))));
    CHECK(observables_4d(Spinor::Zero(4)).j.norm() == 0.0);

    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        const Spinor psi = random_spinor(rng);
        const Observables4D b = observables_4d(psi);
        const double scale = std::pow(psi.squaredNorm(), 2);
        CHECK(std::abs(mdot(b.s, b.s) + mdot(b.j, b.j)) < 1e-12 * scale);
        CHECK(std::abs(mdot(b.j, b.s)) < 1e-12 * scale);
        for (int l = 0; l < 4; ++l) {
            CHECK(std::abs(b.j[l] - bilinear(psi, g[l]).real()) < 1e-12 * scale);
            CHECK(std::abs(b.s[l] - std::real(kI * bilinear(psi, g5 * g[l]))) < 1e-12 * scale);
        }
    }
}

TEST_CASE("wave function from parameters")
{
    Params4D p;
    p.amplitude = 0.0;
    CHECK(psi_from_params_4d(p).norm() == 0.0);

    p.amplitude = 1.3;
    p.n = Vec3(0.6, 0.0, 0.8);
    const Observables4D rest = observables_4d(psi_from_params_4d(p));
    CHECK(rest.j[0] == doctest::Approx(1.69));
    CHECK(rest.j.tail(3).norm() < 1e-14);

    Params4D base;
    base.amplitude = 1.0;
    const Spinor col = psi_from_params_4d(base);
    CHECK(std::abs(col[0].imag()) < 1e-15);
    CHECK(col[0].real() >= 0.0);

    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        const Params4D r = random_params(rng);
        const Spinor a = psi_from_params_4d(r);
        CHECK((a - psi_from_params_4d_closed(r)).norm() < 1e-12);
        const Observables4D o = observables_4d(a);
        const double eta = r.eta.norm();
        const double a2 = r.amplitude * r.amplitude;
        CHECK(o.j[0] == doctest::Approx(a2 * std::cosh(eta)).epsilon(1e-12));
        for (int k = 0; k < 3; ++k) CHECK(std::abs(o.j[k + 1] - a2 * r.eta[k] / eta * std::sinh(eta)) < 1e-12);
        CHECK(bilinear(a, ComplexMatrix::Identity(4, 4)).real() ==
              doctest::Approx(o.rho() * std::cos(r.kappa)).epsilon(1e-12));
        // mirrored product equals psi^dagger
        const auto row = conjugate_from_params_4d(r);
        CHECK((row - a.adjoint()).norm() < 1e-12);
    }
}

TEST_CASE("current and rapidity")
{
    const AEta rest = aeta_from_j(vec4(1, 0, 0, 0));
    CHECK(rest.amplitude == doctest::Approx(1.0));
    CHECK(rest.eta.norm() == 0.0);
    const AEta moving = aeta_from_j(vec4(std::cosh(1.0), std::sinh(1.0), 0, 0));
    CHECK(moving.amplitude == doctest::Approx(1.0));
    CHECK((moving.eta - Vec3(1, 0, 0)).norm() < 1e-12);
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const Vec3 sp = rng.unit_vector() * rng.uniform(0.0, 3.0);
        const RealVector j = vec4(sp.norm() + rng.uniform(0.01, 2.0), sp[0], sp[1], sp[2]);
        CHECK((j_from_aeta(aeta_from_j(j)) - j).norm() < 1e-10 * j.norm());
    }
    CHECK_THROWS_AS(aeta_from_j(vec4(1, 1, 0, 0)), DomainError);
    CHECK_THROWS_AS(aeta_from_j(vec4(-2, 1, 0, 0)), DomainError);
}

TEST_CASE("spin direction")
{
    CHECK((xi_from_s(vec4(1, 0, 0, 0), vec4(0, 0, 0, 1)) - Vec3(0, 0, 1)).norm() < 1e-15);
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        const Observables4D o = observables_4d(random_spinor(rng));
        const Vec3 xi = xi_from_s(o.j, o.s);
        CHECK(std::abs(xi.norm() - 1.0) < 1e-10);
        CHECK((s_from_xi(o.j, xi) - o.s).norm() < 1e-10 * o.j.norm());
        const Vec3 any = rng.unit_vector();
        const RealVector s = s_from_xi(o.j, any);
        CHECK(std::abs(mdot(s, s) + mdot(o.j, o.j)) < 1e-10 * mdot(o.j, o.j));
        CHECK(std::abs(mdot(s, o.j)) < 1e-10 * mdot(o.j, o.j));
    }
    CHECK_THROWS_AS(xi_from_s(vec4(1, 1, 0, 0), vec4(0, 0, 0, 1)), DomainError);
}

TEST_CASE("auxiliary vectors")
{
    const AuxVectors a = aux_vectors(vec4(1, 0, 0, 0), Vec3(0, 0, 1), Vec3(0, 0, 1));
    CHECK((a.nu - vec4(0, 0, 0, 1)).norm() < 1e-15);
    CHECK((a.mu - vec4(0, 0, 0, 0.5)).norm() < 1e-15);
    CHECK((a.q - vec4(1, 0, 0, 0)).norm() < 1e-15);
    CHECK((a.f - vec4(1, 0, 0, 0)).norm() == 0.0);
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const Observables4D o = observables_4d(random_spinor(rng));
        const Vec3 xi = xi_from_s(o.j, o.s);
        Vec3 z = rng.unit_vector();
        if (1.0 + xi.dot(z) < 1e-3) z = -z;
        const AuxVectors v = aux_vectors(o.j, xi, z);
        CHECK(v.nu[0] == 0.0);
        CHECK(mdot(v.nu, v.nu) == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(mdot(v.q, v.q) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mdot(v.f, v.z) == 0.0);
    }
    CHECK_THROWS_AS(aux_vectors(vec4(1, 0, 0, 0), Vec3(0, 0, -1), Vec3(0, 0, 1)), DomainError);
}

TEST_CASE("constant configurations")
{
    const Grid g = Grid::uniform(4, 8, 0.5);
    Params4D p;
    p.amplitude = 1.2;
    p.kappa = 0.6;
    p.phi = 0.3;
    p.eta = Vec3(0.2, -0.1, 0.4);
    p.n = Vec3(0.0, 0.6, 0.8);
    const Vec3 z(0, 0, 1);
    const Densities4D d = lagrangians_4d(FieldConfig4D::constant(g, p), g, z, z, 1.4);
    const double rho = p.amplitude * p.amplitude;
    for (std::size_t i = 0; i < d.dirac.size(); i += 97) {
        CHECK(std::abs(d.dirac[i] + 1.4 * rho * std::cos(p.kappa)) < 1e-12);
        CHECK(d.sv[i].total() == doctest::Approx(-1.4 * rho * std::cos(p.kappa)).epsilon(1e-12));
    }
    p.kappa = 0.0;
    const Densities4D d0 = lagrangians_4d(FieldConfig4D::constant(g, p), g, z, z, 1.4);
    CHECK(d0.sv[5].total() == doctest::Approx(-1.4 * rho).epsilon(1e-12));
    // the mass term is quadratic in kappa around 0
    const double k = 1e-4;
    p.kappa = k;
    const double lp = lagrangians_4d(FieldConfig4D::constant(g, p), g, z, z, 1.4).sv[5].total();
    p.kappa = -k;
    const double lm = lagrangians_4d(FieldConfig4D::constant(g, p), g, z, z, 1.4).sv[5].total();
    CHECK(std::abs((lp - lm) / (2 * k)) < 1e-8);

    Field zero(g, 4);
    for (const cplx v : lagrangian_dirac_4d(zero, 1.0)) CHECK(v == cplx(0.0));
}

TEST_CASE("densities against a finite-difference oracle")
{
    Rng rng(6);
    const Grid g = Grid::uniform(4, 8, 0.6);
    const Vec3 z = rng.unit_vector();
    const FieldConfig4D c = FieldConfig4D::random(rng, g, z);
    const double m = 1.1;
    const Densities4D d = lagrangians_4d(c, g, z, z, m);
    for (int i = 0; i < 30; ++i) {
        const std::size_t p = static_cast<std::size_t>(rng.integer(0, static_cast<int>(g.size()) - 1));
        const cplx oracle = dirac_density_fd(c, g.coordinates(p), z, m);
        CHECK(std::abs(d.dirac[p] - oracle) < 1e-7);
        CHECK(std::abs(oracle.imag()) < 1e-7);
        CHECK(std::abs(d.sv[p].total() - oracle.real()) < 1e-7);
    }
    const ActionComparison4D cmp = compare_actions_4d(d, g);
    CHECK(cmp.relative() < 1e-6);
    CHECK(cmp.imag_max < 1e-10);
}

TEST_CASE("covariance probe at the identity")
{
    Rng rng(7);
    const Grid g = Grid::uniform(4, 8, 0.6);
    const Vec3 z(0, 0, 1);
    const FieldConfig4D c = FieldConfig4D::random(rng, g, z);
    const CovarianceProbe id = covariance_probe_4d(identity_transform(4), c, g, z, 1.0);
    CHECK(id.transformed < 1e-12);
    CHECK(id.fixed < 1e-12);
    const CovarianceProbe b = covariance_probe_4d(boost_4d(0.3, Vec3(1, 0, 0)), c, g, z, 1.0);
    CHECK(b.transformed < 1e-6);
}
