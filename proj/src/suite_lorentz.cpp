#include "dirac_sv/lorentz.hpp"
#include "dirac_sv/report.hpp"
#include "suite_util.hpp"

#include <numbers>

namespace dirac_sv {

using suite::random_generator;
using suite::random_spinor;

namespace {

double pair_residual(const CurrentPair& c)
{
    const double scale = std::max(1.0, c.direct.cwiseAbs().maxCoeff());
    return std::max({(c.way_vector_gamma - c.way_spinor).cwiseAbs().maxCoeff(),
                     (c.way_vector_gamma - c.direct).cwiseAbs().maxCoeff(),
                     (c.way_spinor - c.direct).cwiseAbs().maxCoeff()}) /
           scale;
}

// lightcone image compared with the vector rule through w+- = w0 +- w1
double lightcone_residual(const LightconeVector& image, const RealVector& w)
{
    return std::max(std::abs(image.w0() - w[0]), std::abs(image.w1() - w[1]));
}

}  // namespace

void run_lorentz_suite(SuiteContext& ctx)
{
    Rng& rng = ctx.rng();
    const GammaRep g2 = make_gamma_2d();
    const GammaRep g4 = make_gamma_4d();

    double metric = 0.0;
    for (int i = 0; i < 50; ++i) {
        metric = std::max({metric, boost_2d(rng.uniform(-2.0, 2.0)).metric_residual(),
                           boost_4d(rng.uniform(-2.0, 2.0), rng.unit_vector()).metric_residual(),
                           rotation_4d(rng.uniform(-3.0, 3.0), rng.unit_vector()).metric_residual(),
                           finite_transform(random_generator(rng, 4, 1.0)).metric_residual()});
    }
    metric = std::max({metric, reflect_space_2d().metric_residual(), reflect_time_2d().metric_residual()});
    ctx.check("metric_preserved", "Lambda^T g Lambda = g", metric, 1e-13,
              "random 2D/4D boosts, rotations, general transforms and both reflections");

    double finite_2d = 0.0, conj_2d = 0.0;
    for (int i = 0; i < 50; ++i) {
        const SpinorRep s = spinor_rep_finite_boost(rng.uniform(-2.0, 2.0), Vec3::UnitX(), g2);
        finite_2d = std::max(finite_2d, check_intertwine(s.s, s.transform, g2));
        conj_2d = std::max(conj_2d, s.conjugation_residual(g2));
    }
    ctx.check("intertwine_finite_boost_2d", "S^-1 gamma^l S = Lambda^l_s gamma^s", finite_2d, 1e-10,
              "50 random finite boosts, S from the exponentiated generator");

    double ratio = 0.0, conj_inf = 0.0;
    for (int i = 0; i < 50; ++i) {
        const RealMatrix w = random_generator(rng, 4, rng.uniform(1e-4, 0.1));
        const SpinorRep s = spinor_rep_infinitesimal(w, g4);
        ratio = std::max(ratio, check_intertwine(s.s, s.transform, g4) / w.squaredNorm());
        conj_inf = std::max(conj_inf, s.conjugation_residual(g4) / w.squaredNorm());
    }
    ctx.check("intertwine_infinitesimal_4d", "S^-1 gamma^l S = Lambda^l_s gamma^s, first order", ratio, 10.0,
              "max residual / |delta omega|^2 over 50 random generators");

    double finite_4d = 0.0, conj_4d = conj_2d;
    for (int i = 0; i < 50; ++i) {
        const SpinorRep b = spinor_rep_finite_boost(rng.uniform(-1.5, 1.5), rng.unit_vector(), g4);
        const SpinorRep r = spinor_rep_finite_rotation(rng.uniform(-3.0, 3.0), rng.unit_vector(), g4);
        const SpinorRep gen = spinor_rep_finite(random_generator(rng, 4, 0.8), g4);
        finite_4d = std::max({finite_4d, check_intertwine(b.s, b.transform, g4), check_intertwine(r.s, r.transform, g4),
                              check_intertwine(gen.s, gen.transform, g4)});
        conj_4d = std::max({conj_4d, b.conjugation_residual(g4), r.conjugation_residual(g4),
                            gen.conjugation_residual(g4)});
    }
    ctx.check("intertwine_finite_4d", "S^-1 gamma^l S = Lambda^l_s gamma^s", finite_4d, 1e-10,
              "50 boosts, rotations and general transforms");
    ctx.check("spinor_conjugation", "S^dagger gamma^0 = gamma^0 S^-1", conj_4d, 1e-12, "finite 2D and 4D transforms");
    ctx.info("spinor_conjugation_infinitesimal", "S^dagger gamma^0 = gamma^0 S^-1, first order", conj_inf,
             "max residual / |delta omega|^2 (exactly conjugation-compatible generator)");

    double composition = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double a = rng.uniform(-1.0, 1.0), b = rng.uniform(-1.0, 1.0);
        const Vec3 n = rng.unit_vector();
        composition = std::max({composition,
                                max_abs_diff(spinor_rep_finite_boost(a, Vec3::UnitX(), g2).s *
                                                 spinor_rep_finite_boost(b, Vec3::UnitX(), g2).s,
                                             spinor_rep_finite_boost(a + b, Vec3::UnitX(), g2).s),
                                max_abs_diff(spinor_rep_finite_boost(a, n, g4).s * spinor_rep_finite_boost(b, n, g4).s,
                                             spinor_rep_finite_boost(a + b, n, g4).s)});
    }
    ctx.check("spinor_boost_composition", "S(chi1) S(chi2) = S(chi1 + chi2)", composition, 1e-12,
              "collinear boosts in 2D and 4D");

    const ComplexMatrix g01 = g2[0] * g2[1];
    double prefactor = 0.0, literal = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double chi = rng.uniform(-2.0, 2.0);
        const ComplexMatrix prefactor_m = mat_exp(-0.5 * chi * g01);
        prefactor = std::max(prefactor, max_abs_diff(spinor_rep_finite_boost(-chi, Vec3::UnitX(), g2).s, prefactor_m));
        literal = std::max(literal, max_abs_diff(spinor_rep_finite_boost(chi, Vec3::UnitX(), g2).s, prefactor_m) /
                                        std::max(1.0, max_abs(prefactor_m)));
    }
    ctx.check("spinor_boost_lightcone_prefactor", "exp(-gamma^0 gamma^1 chi / 2) as a spinor boost", prefactor, 1e-12,
              "the prefactor equals S of the vector boost with rapidity -chi (x~ = Lambda(-chi) x)");
    ctx.info("spinor_boost_prefactor_same_sign", "exp(-gamma^0 gamma^1 chi / 2) vs S(chi)", literal,
             "relative deviation when the prefactor is paired with Lambda(+chi)");

    {
        RealMatrix w = RealMatrix::Zero(2, 2);
        const double eps = 0.05;
        w(0, 1) = eps;
        w(1, 0) = -eps;
        ComplexMatrix expect = ComplexMatrix::Zero(2, 2);
        expect(0, 0) = std::exp(-eps / 2);
        expect(1, 1) = std::exp(eps / 2);
        ctx.check("infinitesimal_generator_2d", "S = exp(delta_omega_ik (gamma^i gamma^k - gamma^k gamma^i) / 8)",
                  max_abs_diff(spinor_rep_infinitesimal(w, g2).s, expect), 1e-14,
                  "delta_omega_01 = 0.05 gives exp(+gamma^0 gamma^1 eps / 2) = diag(e^-eps/2, e^eps/2)");
    }

    double lc_boost = 0.0, lc_space = 0.0, lc_time = 0.0;
    for (int i = 0; i < 100; ++i) {
        RealVector w(2);
        w << rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0);
        const double chi = rng.uniform(-2.0, 2.0);
        const LightconeVector lc = LightconeVector::from_components(w[0], w[1]);
        lc_boost = std::max(lc_boost, lightcone_residual(boost_lightcone(lc, chi), boost_2d(chi).apply(w)));
        lc_space = std::max(lc_space, lightcone_residual(space_reflect_lightcone(lc), reflect_space_2d().apply(w)));
        lc_time = std::max(lc_time, lightcone_residual(time_reflect_lightcone(lc), reflect_time_2d().apply(w)));
    }
    ctx.check("lightcone_boost_rule", "w+ -> e^chi w+, w- -> e^-chi w-", lc_boost, 1e-12,
              "against the vector boost through w+- = w0 +- w1");
    ctx.check("lightcone_space_reflection_rule", "w+ <-> w-", lc_space, 1e-12);
    ctx.check("lightcone_time_reflection_rule", "w+ -> e^{i pi} w-, w- -> e^{-i pi} w+", lc_time, 1e-12,
              "phases tracked in polar form");
    {
        const LightconeVector w{Phased{2.0, 0.0}, Phased{3.0, 0.0}};
        const LightconeVector t = time_reflect_lightcone(w);
        const LightconeVector tt = time_reflect_lightcone(t);
        const double r = std::max({std::abs(t.plus.value() + 3.0), std::abs(t.minus.value() + 2.0),
                                   std::abs(tt.plus.value() - 2.0), std::abs(tt.minus.value() - 3.0)});
        ctx.check("lightcone_time_reflection_involution", "w+ -> e^{i pi} w-, w- -> e^{-i pi} w+", r, 1e-14,
                  fmt::format("(2, 3) -> (-3, -2); twice -> phases {:.6f} pi, {:.6f} pi", tt.plus.phase / std::numbers::pi,
                              tt.minus.phase / std::numbers::pi));
    }

    double two_way_2d = 0.0, two_way_4d = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Spinor p2 = random_spinor(rng, 2);
        const Spinor p4 = random_spinor(rng, 4);
        two_way_2d = std::max(two_way_2d, pair_residual(transform_current_two_ways(
                                              p2, spinor_rep_finite_boost(rng.uniform(-1.5, 1.5), Vec3::UnitX(), g2), g2)));
        const SpinorRep s4 = i % 2 == 0 ? spinor_rep_finite_rotation(rng.uniform(-3.0, 3.0), rng.unit_vector(), g4)
                                        : spinor_rep_finite_boost(rng.uniform(-1.5, 1.5), rng.unit_vector(), g4);
        two_way_4d = std::max(two_way_4d, pair_residual(transform_current_two_ways(p4, s4, g4)));
    }
    ctx.check("current_two_ways_2d", "gamma transformed as a vector vs psi~ = S psi", two_way_2d, 1e-12,
              "100 random spinors; both ways and Lambda j agree (relative)");
    ctx.check("current_two_ways_4d", "gamma transformed as a vector vs psi~ = S psi", two_way_4d, 1e-12,
              "100 random spinors, boosts and rotations (relative)");
}

}  // namespace dirac_sv
