#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac_sv/algebra.hpp"
#include "dirac_sv/random.hpp"

#include <complex>
#include <numbers>

using namespace dirac_sv;

namespace {

using lcplx = std::complex<long double>;

// Taylor series summed in long double, no scaling: fine for |A| <= 1.
ComplexMatrix exp_series_long(const ComplexMatrix& a)
{
    const int n = static_cast<int>(a.rows());
    Eigen::Matrix<lcplx, Eigen::Dynamic, Eigen::Dynamic> al(n, n), term, sum;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) al(i, k) = lcplx(a(i, k).real(), a(i, k).imag());
    term = Eigen::Matrix<lcplx, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
    sum = term;
    for (int k = 1; k < 60; ++k) {
        term = (term * al) / static_cast<long double>(k);
        sum += term;
    }
    ComplexMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            out(i, k) = cplx(static_cast<double>(sum(i, k).real()), static_cast<double>(sum(i, k).imag()));
    return out;
}

ComplexMatrix random_matrix(Rng& rng, int n, double norm)
{
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m(i, k) = rng.complex_normal();
    return m * (norm / m.norm());
}

ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d)
{
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

TEST_CASE("2x2 representation entries")
{
    const GammaRep g = make_gamma_2d();
    CHECK(max_abs_diff(g[0], mat2(0, 1, 1, 0)) == 0.0);
    CHECK(max_abs_diff(g[1], mat2(0, 1, -1, 0)) == 0.0);
    CHECK(max_abs_diff(g[0] * g[1], mat2(-1, 0, 0, 1)) == 0.0);
    CHECK(max_abs_diff(g[0] * g[0], g.identity()) == 0.0);
    CHECK(max_abs(g[0] * g[1] + g[1] * g[0]) == 0.0);
    // gamma^0 = sigma_1, gamma^1 = i sigma_2
    const auto p = pauli_matrices();
    CHECK(max_abs_diff(g[0], p[0]) == 0.0);
    CHECK(max_abs_diff(g[1], kI * p[1]) == 0.0);
}

TEST_CASE("anticommutators are exact in both representations")
{
    CHECK(anticommutator_residual(make_gamma_2d()) == 0.0);
    CHECK(anticommutator_residual(make_gamma_4d()) == 0.0);
}

TEST_CASE("Dirac representation")
{
    const GammaRep g = make_gamma_4d();
    ComplexMatrix g0 = ComplexMatrix::Zero(4, 4);
    g0.diagonal() << 1, 1, -1, -1;
    CHECK(max_abs_diff(g[0], g0) == 0.0);
    for (int l = 0; l < 4; ++l) CHECK(std::abs(g[l].trace()) == 0.0);
    CHECK(max_abs_diff(dagger(g[0]), g[0]) == 0.0);
    for (int a = 1; a < 4; ++a) CHECK(max_abs_diff(dagger(g[a]), -g[a]) == 0.0);
}

TEST_CASE("gamma5 without the factor i")
{
    const GammaRep g = make_gamma_4d();
    const ComplexMatrix g5 = gamma5(g);
    CHECK(max_abs_diff(g5, g[0] * g[1] * g[2] * g[3]) == 0.0);
    CHECK(max_abs_diff(g5 * g5, -g.identity()) == 0.0);
    CHECK(max_abs_diff(dagger(g5), -g5) == 0.0);
    CHECK(max_abs_diff(g[0] * dagger(g5) * g[0], g5) == 0.0);
    for (int l = 0; l < 4; ++l) CHECK(max_abs(g5 * g[l] + g[l] * g5) == 0.0);
    CHECK_THROWS_AS(gamma5(make_gamma_2d()), std::invalid_argument);
}

TEST_CASE("sigma matrices")
{
    const GammaRep g = make_gamma_4d();
    const auto s = sigma_matrices(g);
    CHECK(max_abs_diff(s[0], -kI * g[2] * g[3]) == 0.0);
    CHECK(max_abs_diff(s[1], -kI * g[3] * g[1]) == 0.0);
    CHECK(max_abs_diff(s[2], -kI * g[1] * g[2]) == 0.0);
    for (int a = 0; a < 3; ++a) CHECK(max_abs_diff(s[a] * s[a], g.identity()) == 0.0);
    // block-diagonal with minus the Pauli matrices on both blocks
    const auto p = pauli_matrices();
    for (int a = 0; a < 3; ++a) {
        CHECK(max_abs_diff(s[a].topLeftCorner(2, 2), -p[a]) == 0.0);
        CHECK(max_abs_diff(s[a].bottomRightCorner(2, 2), -p[a]) == 0.0);
    }
    CHECK(max_abs_diff(s[0] * s[1], -kI * s[2]) == 0.0);
    CHECK(max_abs_diff(p[0] * p[1], kI * p[2]) == 0.0);

    const Vec3 n(1.0, 0.0, 0.0);
    const ComplexMatrix sn = sigma_dot(s, n);
    for (int a = 0; a < 3; ++a)
        CHECK(max_abs_diff(sn * s[a] * sn, -n.squaredNorm() * s[a] + 2.0 * n[a] * sn) == 0.0);
}

TEST_CASE("projectors")
{
    const ComplexMatrix p2 = projector_pi_2d();
    CHECK(max_abs_diff(p2, mat2(0.5, 0.5, 0.5, 0.5)) == 0.0);
    CHECK(max_abs_diff(p2 * p2, p2) == 0.0);

    const GammaRep g = make_gamma_4d();
    const ComplexMatrix p4 = projector_pi_4d(g, Vec3(0, 0, 1));
    CHECK(max_abs_diff(p4 * p4, p4) < 1e-15);
    CHECK(std::abs(p4.trace() - 1.0) < 1e-15);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig{Eigen::Matrix4cd(p4)};
    int nonzero = 0;
    for (int i = 0; i < 4; ++i) nonzero += std::abs(eig.eigenvalues()[i]) > 1e-12 ? 1 : 0;
    CHECK(nonzero == 1);
    CHECK_THROWS_AS(projector_pi_4d(g, Vec3(0, 0, 2)), DomainError);
}

TEST_CASE("Levi-Civita symbol")
{
    const int a[4] = {0, 1, 2, 3}, b[4] = {1, 0, 2, 3}, c[4] = {0, 0, 2, 3}, d[4] = {3, 2, 1, 0};
    CHECK(levi_civita(a) == 1);
    CHECK(levi_civita(b) == -1);
    CHECK(levi_civita(c) == 0);
    CHECK(levi_civita(d) == 1);
    const int e[3] = {1, 2, 3}, f[3] = {2, 1, 3}, h[2] = {0, 1};
    CHECK(levi_civita(e) == 1);
    CHECK(levi_civita(f) == -1);
    CHECK(levi_civita(h) == 1);
}

TEST_CASE("matrix exponential")
{
    CHECK(max_abs_diff(mat_exp(ComplexMatrix::Zero(4, 4)), ComplexMatrix::Identity(4, 4)) == 0.0);
    const double h = std::numbers::pi / 2;
    CHECK(max_abs_diff(mat_exp(mat2(kI * h, 0, 0, -kI * h)), mat2(kI, 0, 0, -kI)) < 1e-15);

    Rng rng(12345);
    SUBCASE("long double series for |A| <= 1")
    {
        for (int i = 0; i < 200; ++i) {
            const int n = i % 2 ? 4 : 2;
            const ComplexMatrix a = random_matrix(rng, n, rng.uniform(0.01, 1.0));
            const ComplexMatrix ref = exp_series_long(a);
            CHECK(max_abs_diff(mat_exp(a), ref) / max_abs(ref) < 1e-14);
        }
    }
    SUBCASE("eigendecomposition for Hermitian and anti-Hermitian A up to |A| = 10")
    {
        for (int i = 0; i < 200; ++i) {
            const ComplexMatrix r = random_matrix(rng, 4, 1.0);
            ComplexMatrix h4 = r + dagger(r);
            h4 *= rng.uniform(0.5, 10.0) / h4.norm();
            const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig{Eigen::Matrix4cd(h4)};
            const Eigen::Matrix4cd v = eig.eigenvectors();
            const Eigen::Vector4d lam = eig.eigenvalues();
            const Eigen::Matrix4cd ref = v * lam.array().exp().matrix().cast<cplx>().asDiagonal() * v.adjoint();
            const Eigen::Matrix4cd ref_i =
                v * (kI * lam.cast<cplx>()).array().exp().matrix().asDiagonal() * v.adjoint();
            CHECK(max_abs_diff(mat_exp(h4), ComplexMatrix(ref)) / ref.cwiseAbs().maxCoeff() < 1e-13);
            CHECK(max_abs_diff(mat_exp(kI * h4), ComplexMatrix(ref_i)) < 1e-13);
        }
    }
    SUBCASE("exp(A + B) = exp(A) exp(B) for commuting A, B")
    {
        for (int i = 0; i < 100; ++i) {
            const ComplexMatrix a = random_matrix(rng, 4, 1.0);
            const ComplexMatrix b = 0.5 * a * a - 0.2 * a;
            const ComplexMatrix s = mat_exp(a + b);
            CHECK(max_abs_diff(s, mat_exp(a) * mat_exp(b)) / max_abs(s) < 1e-12);
        }
    }
    ComplexMatrix huge = ComplexMatrix::Identity(2, 2) * 1e6;
    CHECK_THROWS_AS(mat_exp(huge), std::overflow_error);
}

TEST_CASE("metric")
{
    const Metric g(4);
    RealVector a(4), b(4);
    a << 2, 1, 0, 0;
    b << 1, 1, 1, 1;
    CHECK(g.dot(a, b) == doctest::Approx(1.0));
    CHECK(g.dot(a, a) == doctest::Approx(3.0));
    CHECK(g.lower(a)[1] == -1.0);
    CHECK(Metric(2).diag(1) == -1.0);
}
