#include "dirac_sv/report.hpp"
#include "suite_util.hpp"

#include <array>

namespace dirac_sv {

using suite::random_matrix;

namespace {

// sigma_a sigma_b - (delta_ab I + sign i eps_abc sigma_c), max over the 9 pairs
double product_rule_residual(const std::array<ComplexMatrix, 3>& s, double sign)
{
    const int n = static_cast<int>(s[0].rows());
    double worst = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            ComplexMatrix rhs = (a == b ? 1.0 : 0.0) * ComplexMatrix::Identity(n, n);
            for (int c = 0; c < 3; ++c) {
                const int idx[3] = {a + 1, b + 1, c + 1};
                const int e = levi_civita(idx);
                if (e != 0) rhs += sign * kI * static_cast<double>(e) * s[c];
            }
            worst = std::max(worst, max_abs_diff(s[a] * s[b], rhs));
        }
    return worst;
}

// (sigma n) sigma_a (sigma n) + n^2 sigma_a - 2 n_a (sigma n)
double sandwich_residual(const std::array<ComplexMatrix, 3>& s, const Vec3& n)
{
    const ComplexMatrix sn = sigma_dot(s, n);
    double worst = 0.0;
    for (int a = 0; a < 3; ++a)
        worst = std::max(worst, max_abs(sn * s[a] * sn + n.squaredNorm() * s[a] - 2.0 * n[a] * sn));
    return worst;
}

double idempotency(const ComplexMatrix& p) { return max_abs_diff(p * p, p); }

}  // namespace

void run_clifford_suite(SuiteContext& ctx)
{
    Rng& rng = ctx.rng();
    const GammaRep g2 = make_gamma_2d();
    const GammaRep g4 = make_gamma_4d();

    ctx.check("anticommutators_2d", "defining relation, 2x2 representation", anticommutator_residual(g2), 1e-12);
    ctx.check("anticommutators_4d", "defining relation, Dirac representation", anticommutator_residual(g4), 1e-12);

    ComplexMatrix diag(2, 2);
    diag << -1, 0, 0, 1;
    ctx.check("gamma0_gamma1_diagonal", "diagonal pseudoscalar gamma^0 gamma^1",
              max_abs_diff(g2[0] * g2[1], diag), 1e-12, "gamma^0 gamma^1 = diag(-1, 1)");

    double trace = 0.0;
    for (int l = 0; l < 4; ++l) trace = std::max(trace, std::abs(g4[l].trace()));
    ctx.check("gamma_traceless_4d", "Dirac representation", trace, 1e-12);

    const auto pauli = pauli_matrices();
    const auto sigma = sigma_matrices(g4);
    ctx.check("pauli_product_rule", "sigma_a sigma_b = delta_ab + i eps_abc sigma_c", product_rule_residual(pauli, 1.0),
              1e-12, "all 9 pairs");
    ctx.check("sigma4d_product_rule", "sigma_a sigma_b = delta_ab - i eps_abc sigma_c for -i gamma^b gamma^c",
              product_rule_residual(sigma, -1.0), 1e-12,
              "the 4x4 sigma built as -i gamma^2 gamma^3, ... follows the rule with eps -> -eps");
    ctx.info("sigma4d_product_rule_plus_eps", "sigma_a sigma_b = delta_ab + i eps_abc sigma_c on 4x4 sigma",
             product_rule_residual(sigma, 1.0), "deviation of the +eps form for the 4x4 sigma (orientation)");

    double sandwich = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Vec3 n = rng.unit_vector();
        sandwich = std::max({sandwich, sandwich_residual(pauli, n), sandwich_residual(sigma, n)});
    }
    ctx.check("sigma_sandwich_identity", "(sigma n) sigma_a (sigma n) = -n^2 sigma_a + 2 n_a (sigma n)", sandwich, 1e-12,
              "100 random unit n, 2x2 and 4x4 sigma");

    const ComplexMatrix g5 = gamma5(g4);
    double anti = 0.0;
    for (int l = 0; l < 4; ++l) anti = std::max(anti, max_abs(g5 * g4[l] + g4[l] * g5));
    ctx.check("gamma5_anticommutes", "gamma5 = gamma^0 gamma^1 gamma^2 gamma^3", anti, 1e-12);
    ctx.check("gamma5_square", "gamma5^2 = -I", max_abs_diff(g5 * g5, -g4.identity()), 1e-12);
    ctx.check("gamma5_anti_hermitian", "gamma5^dagger = -gamma5", max_abs_diff(dagger(g5), -g5), 1e-12);
    ctx.check("gamma5_bar", "gamma^0 gamma5^dagger gamma^0 = gamma5", max_abs_diff(g4[0] * dagger(g5) * g4[0], g5), 1e-12,
              "anti-Hermitian and anticommuting with gamma^0, so the two signs cancel");

    const ComplexMatrix pi2 = projector_pi_2d();
    ctx.check("projector_2d_idempotent", "Pi = (1 + gamma^0) / 2", std::max(idempotency(pi2), max_abs_diff(g2[0] * pi2, pi2)),
              1e-12, "Pi^2 = Pi and gamma^0 Pi = Pi");
    double pi4 = 0.0, rank = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ComplexMatrix p = projector_pi_4d(g4, rng.unit_vector());
        pi4 = std::max(pi4, idempotency(p));
        rank = std::max(rank, std::abs(p.trace() - 1.0));
    }
    ctx.check("projector_4d_idempotent", "Pi = (1 + gamma^0)(1 + z sigma) / 4", pi4, 1e-12, "100 random unit z");
    ctx.check("projector_4d_trace", "Pi = (1 + gamma^0)(1 + z sigma) / 4", rank, 1e-12, "tr Pi = 1 (rank one)");

    double inverse = 0.0, commuting = 0.0;
    for (int i = 0; i < 50; ++i) {
        const int n = i % 2 == 0 ? 2 : 4;
        const ComplexMatrix a = random_matrix(rng, n, 1.0);
        inverse = std::max(inverse, max_abs_diff(mat_exp(a) * mat_exp(-a), ComplexMatrix::Identity(n, n)));
        const ComplexMatrix b = 0.7 * a - 0.3 * a * a + ComplexMatrix::Identity(n, n) * rng.complex_normal();
        commuting = std::max(commuting, max_abs_diff(mat_exp(a + b), mat_exp(a) * mat_exp(b)) /
                                            std::max(1.0, max_abs(mat_exp(a + b))));
    }
    ctx.check("mat_exp_inverse", "matrix exponential", inverse, 1e-12, "exp(A) exp(-A) = I, |A| <= 1");
    ctx.check("mat_exp_commuting_sum", "matrix exponential", commuting, 1e-12, "exp(A + B) = exp(A) exp(B), [A, B] = 0");
}

}  // namespace dirac_sv
