#include "dirac_sv/dirac2d.hpp"
#include "dirac_sv/report.hpp"
#include "suite_util.hpp"

#include <fstream>
#include <numbers>

namespace dirac_sv {

using suite::cplx_str;
using suite::order_from_ratio;

namespace {

constexpr double kPi = std::numbers::pi;

struct WavePair {
    PeriodicKgWave kg;
    RealVector w;
};

RealVector vec2(double a, double b)
{
    RealVector v(2);
    v << a, b;
    return v;
}

RealVector random_timelike(Rng& rng)
{
    const double w0 = rng.uniform(0.5, 3.0);
    return vec2(w0, w0 * rng.uniform(-0.9, 0.9));
}

// Periodic KG wave with m0 > |m1| so that k is future timelike.
PeriodicKgWave random_kg_wave(Rng& rng, const Grid& grid)
{
    const int m0 = rng.integer(1, 4);
    const int bound = m0 - 1;
    const int m1 = rng.integer(-bound, bound);
    return periodic_kg_wave(grid, {m0, m1, 0, 0}, std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * kPi)));
}

Params2D random_params(Rng& rng, bool gauge)
{
    Params2D p;
    p.amplitude = rng.uniform(0.2, 2.0);
    Vec3 n = rng.unit_vector();
    if (gauge) {
        n[0] = std::abs(n[0]);
        n[1] = std::abs(n[1]);
        if (n[0] < 0.05) n[0] = 0.05 + n[0];
        n.normalize();
    }
    p.n = n;
    p.phi = rng.uniform(-kPi + 1e-3, kPi - 1e-3);
    return p;
}

double obs_diff(const Observables2D& a, const Observables2D& b)
{
    return std::max({std::abs(a.rho - b.rho), std::abs(a.j0 - b.j0), std::abs(a.j1 - b.j1)});
}

template <class F>
bool throws_domain(F&& f)
{
    try {
        f();
    } catch (const DomainError&) {
        return true;
    }
    return false;
}

void dump(SuiteContext& ctx, const std::string& file, const Field& f)
{
    if (auto path = ctx.dump_path(file)) {
        std::ofstream out(*path);
        dump_field(f, out);
    }
}

void intertwining_checks(SuiteContext& ctx)
{
    Rng& rng = ctx.rng();
    const int n = ctx.grid_2d();
    const double h = ctx.spacing_2d();
    const Grid grid = Grid::uniform(2, n, h);

    // KG plane waves
    double kg_analytic = 0.0;
    std::vector<WavePair> pairs;
    const std::array<RealVector, 3> fixed_w{vec2(1.0, 0.0), vec2(std::cosh(1.0), std::sinh(1.0)), vec2(2.0, 1.0)};
    for (int i = 0; i < 20; ++i) {
        WavePair p{random_kg_wave(rng, grid), i < 3 ? fixed_w[i] : random_timelike(rng)};
        const Field psi = Field::sample(grid, p.kg.wave);
        kg_analytic = std::max(kg_analytic, kg_residual(psi, p.kg.lambda, Derivative::analytic) /
                                                std::abs(p.kg.wave.amplitudes[0]));
        pairs.push_back(p);
    }
    ctx.check("kg_plane_wave_analytic", "lambda^2 d_l d^l psi + psi = 0", kg_analytic, 1e-12,
              "20 periodic waves on the KG shell, relative to |amplitude|");

    const PeriodicKgWave low = periodic_kg_wave(grid, {2, 1, 0, 0}, cplx(0.8, -0.6));
    {
        Field psi = Field::sample(grid, low.wave);
        dump(ctx, "dirac2d_kg_wave.txt", psi);
        psi.drop_wave();
        ctx.check("kg_plane_wave_fd", "lambda^2 d_l d^l psi + psi = 0, central differences",
                  kg_residual(psi, low.lambda, Derivative::finite_difference) / std::abs(low.wave.amplitudes[0]), 0.05,
                  fmt::format("mode (2, 1), N = {}, h = {}", n, h));
    }
    {
        // k.k = 2 / lambda^2: residual equals |amplitude|
        const double lambda = 0.7;
        PlaneWave off;
        off.k = vec2(std::sqrt(2.0 + 0.25) / lambda, 0.5 / lambda);
        off.amplitudes = {cplx(1.3, 0.4)};
        const double r = kg_residual(Field::sample(grid, off), lambda, Derivative::analytic);
        ctx.check("kg_violation_detected", "lambda^2 d_l d^l psi + psi = 0", std::abs(r / std::abs(off.amplitudes[0]) - 1.0),
                  1e-12, "k.k = 2 / lambda^2 gives residual |amplitude|");
    }

    // FD derivative order on three grids with fixed extents
    {
        const std::array<double, 4> ext{n * h, n * h, 1.0, 1.0};
        std::array<double, 3> err{};
        for (int r = 0; r < 3; ++r) {
            const Grid g = Grid::with_extents(2, n << r, ext);
            const PeriodicKgWave wv = periodic_kg_wave(g, {3, 1, 0, 0}, 1.0);
            Field sampled = Field::sample(g, wv.wave);
            Field bare = sampled;
            bare.drop_wave();
            for (int axis = 0; axis < 2; ++axis)
                err[r] = std::max(err[r], max_abs_diff(partial(bare, axis, Derivative::finite_difference),
                                                       partial(sampled, axis, Derivative::analytic)));
        }
        const double o1 = order_from_ratio(err[0], err[1]), o2 = order_from_ratio(err[1], err[2]);
        ctx.check("fd_derivative_order", "second-order central differences",
                  std::max(std::abs(o1 - 2.0), std::abs(o2 - 2.0)), 0.1,
                  fmt::format("orders {:.4f}, {:.4f} on N = {}, {}, {}", o1, o2, n, 2 * n, 4 * n));
    }
    {
        Field noise(grid, 1);
        for (std::size_t p = 0; p < grid.size(); ++p) noise.at(0, p) = rng.complex_normal();
        double total = 0.0;
        for (int axis = 0; axis < 2; ++axis) {
            const Field d = partial(noise, axis, Derivative::finite_difference);
            cplx s = 0.0;
            for (cplx v : d.component(0)) s += v;
            total = std::max(total, std::abs(s));
        }
        ctx.check("periodic_total_derivative", "grid sum of d_l(anything) vanishes", total,
                  1e-10 * static_cast<double>(grid.size()), "random samples, central differences");
    }

    // L-hat builds Dirac solutions
    double dirac = 0.0, forms = 0.0, converse = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        const Field psi = Field::sample(grid, p.kg.wave);
        const Field psi_d = lhat_apply(p.w, psi, p.kg.lambda, Derivative::analytic);
        if (i == 0) dump(ctx, "dirac2d_lhat_psi.txt", psi_d);
        const double scale = psi_d.max_abs();
        const DiracResidual2D r = dirac_residual_2d(psi_d, p.kg.lambda, Derivative::analytic);
        dirac = std::max(dirac, std::max(r.component, r.matrix) / scale);
        forms = std::max(forms, std::abs(r.component - r.matrix) / scale);
        for (int c = 0; c < 2; ++c)
            converse = std::max(converse,
                                kg_residual(psi_d.component_field(c), p.kg.lambda, Derivative::analytic) / scale);
    }
    ctx.check("lhat_dirac_analytic", "psi_D = L(w, d, lambda) psi solves the Dirac equation", dirac, 1e-10,
              "20 (KG wave, timelike w) pairs incl. w = (1,0), (cosh 1, sinh 1), (2,1); relative to max |psi_D|");
    ctx.check("dirac_forms_agree", "component form vs matrix form of the Dirac equation", forms, 1e-12);
    ctx.check("dirac_components_kg", "components of a Dirac solution solve KG", converse, 1e-10);
    {
        const Field psi = Field::sample(grid, pairs[0].kg.wave);
        Field not_solution(grid, 2);
        for (std::size_t q = 0; q < grid.size(); ++q) not_solution.at(0, q) = psi.at(0, q);
        const double r = dirac_residual_2d(not_solution, pairs[0].kg.lambda, Derivative::finite_difference).component;
        ctx.check("dirac_violation_detected", "psi+ = i lambda d+ psi-, psi- = i lambda d- psi+",
                  std::max(0.0, 1.0 - r / std::abs(pairs[0].kg.wave.amplitudes[0])), 1e-12,
                  "(psi_KG, 0) leaves a residual of at least |amplitude|");
    }
    {
        // lambda = 1, w = (1, 0), psi = e^{-it}: psi_D = 2 (psi, psi)
        const Grid g = Grid::with_extents(2, n, {2.0 * kPi, 2.0 * kPi, 1.0, 1.0});
        PlaneWave rest;
        rest.k = vec2(1.0, 0.0);
        rest.amplitudes = {1.0};
        const Field psi = Field::sample(g, rest);
        const Field psi_d = lhat_apply(vec2(1.0, 0.0), psi, 1.0, Derivative::analytic);
        Field expect = Field::stack(std::array<Field, 2>{psi.scaled(2.0), psi.scaled(2.0)});
        ctx.check("lhat_rest_frame_example", "L((1,0), d, 1) e^{-it} = (2 e^{-it}, 2 e^{-it})",
                  max_abs_diff(psi_d, expect), 1e-14);
    }
    ctx.check("lhat_rejects_spacelike_w", "L(w, d, lambda) needs timelike w with w0 > 0",
              throws_domain([&] { lhat_apply(vec2(1.0, 2.0), Field::sample(grid, low.wave), low.lambda); }) &&
                      throws_domain([&] { lhat_apply(vec2(-2.0, 1.0), Field::sample(grid, low.wave), low.lambda); })
                  ? 0.0
                  : 1.0,
              0.0, "w = (1, 2) and w = (-2, 1) raise a domain error");

    // measured FD convergence of the whole construction
    {
        const std::array<double, 4> ext{n * h, n * h, 1.0, 1.0};
        const RealVector w = vec2(2.0, 1.0);
        std::array<double, 3> err{};
        for (int r = 0; r < 3; ++r) {
            const Grid g = Grid::with_extents(2, n << r, ext);
            const PeriodicKgWave wv = periodic_kg_wave(g, {3, 1, 0, 0}, cplx(0.7, 0.0));
            Field psi = Field::sample(g, wv.wave);
            psi.drop_wave();
            const Field psi_d = lhat_apply(w, psi, wv.lambda, Derivative::finite_difference);
            err[r] = dirac_residual_2d(psi_d, wv.lambda, Derivative::finite_difference).component;
        }
        const double o1 = order_from_ratio(err[0], err[1]), o2 = order_from_ratio(err[1], err[2]);
        ctx.check("lhat_dirac_fd_order", "psi_D = L(w, d, lambda) psi, central differences",
                  std::max(std::abs(o1 - 2.0), std::abs(o2 - 2.0)), 0.1,
                  fmt::format("residuals {:.4e}, {:.4e}, {:.4e}; orders {:.4f}, {:.4f}", err[0], err[1], err[2], o1, o2));
    }

    // transformation rules of L-hat
    double boost = 0.0, frame = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto& p = pairs[i];
        const double chi = i == 0 ? 0.8 : rng.uniform(-1.5, 1.5);
        const RealVector w = i == 0 ? vec2(1.0, 0.0) : p.w;
        const double scale = std::abs(p.kg.wave.amplitudes[0]);
        boost = std::max(boost, lhat_boost_check(chi, w, p.kg.wave, grid, p.kg.lambda) / scale);
        frame = std::max(frame, lhat_frame_check(chi, w, p.kg.wave, grid, p.kg.lambda) / scale);
    }
    ctx.check("lhat_boost_lightcone", "L(w~, d~, lambda) = exp(-gamma^0 gamma^1 chi / 2) L(w, d, lambda)", boost, 1e-10,
              "w+- and d+- scaled by e^{+-chi}; includes chi = 0.8, w = (1, 0)");
    ctx.check("lhat_boost_vector_frame", "L(w~, d~, lambda) = S L(w, d, lambda) with S intertwining Lambda", frame, 1e-10,
              "covariant w and k transformed by Lambda(chi), S = spinor boost of the same chi");

    ReflectionFit space{}, time{};
    double space_c = 0.0, time_c = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto& p = pairs[i];
        const ReflectionFit s = lhat_space_reflection_fit(p.w, p.kg.wave, grid, p.kg.lambda);
        const ReflectionFit t = lhat_time_reflection_fit(p.w, p.kg.wave, grid, p.kg.lambda);
        const double scale = std::abs(p.kg.wave.amplitudes[0]);
        if (s.residual / scale >= space.residual) space = {s.c, s.residual / scale};
        if (t.residual / scale >= time.residual) time = {t.c, t.residual / scale};
        space_c = std::max(space_c, std::abs(s.c - 1.0));
        time_c = std::max(time_c, std::abs(t.c - kI));
    }
    ctx.check("lhat_space_reflection", "L(w~, d~, lambda) = c gamma^0 L(w, d, lambda)", space.residual, 1e-10,
              fmt::format("least-squares fit over 10 pairs, c = {}", cplx_str(space.c)));
    ctx.info("space_reflection_best_fit_c", "c in L(w~, d~, lambda) = c gamma^0 L(w, d, lambda)", space_c,
             fmt::format("max |c - 1| over 10 pairs; c = {}", cplx_str(space.c)));
    ctx.check("lhat_time_reflection", "L(w~, d~, lambda) = e^{i pi/2} gamma^1 L(w, d, lambda)",
              std::max(time.residual, time_c), 1e-10,
              fmt::format("phases e^{{+-i pi}} tracked through the square roots, c = {}", cplx_str(time.c)));
}

void variable_checks(SuiteContext& ctx)
{
    Rng& rng = ctx.rng();
    {
        double r = 0.0;
        Params2D p{1.0, Vec3(1.0, 0.0, 0.0), 0.0};
        r = std::max(r, obs_diff(observables_2d(psi_from_params_2d(p)), {1.0, 1.0, 0.0, 0.0}));
        p.n = Vec3(std::sqrt(3.0) / 2.0, std::sqrt(1.0 / 8.0), std::sqrt(1.0 / 8.0));
        r = std::max(r, obs_diff(observables_2d(psi_from_params_2d(p)),
                                 {2.0 * p.n[0] * p.n[0] - 1.0, 1.0, -2.0 * p.n[2] * p.n[0], 0.0}));
        Spinor up(2);
        up << 1.0, 0.0;
        r = std::max(r, obs_diff(observables_2d(up), {0.0, 1.0, -1.0, 0.0}));
        Spinor sym(2);
        sym << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
        r = std::max(r, obs_diff(observables_2d(sym), {1.0, 1.0, 0.0, 0.0}));
        const Params2D back = params_from_observables({0.0, 1.0, -1.0, 0.0});
        r = std::max(r, (back.n - Vec3(std::sqrt(0.5), 0.0, std::sqrt(0.5))).cwiseAbs().maxCoeff());
        ctx.check("observable_examples", "rho = A^2 (2 n1^2 - 1), j0 = A^2, j1 = -2 A^2 n3 n1", r, 1e-14,
                  "hand-computed bilinears of (1,0), (1,1)/sqrt2 and two parameter points");
    }

    double gap = 0.0, trip = 0.0, back = 0.0;
    for (int i = 0; i < 500; ++i) {
        const Params2D p = random_params(rng, true);
        const Observables2D o = observables_2d(psi_from_params_2d(p));
        const double a4 = std::pow(p.amplitude, 4);
        gap = std::max(gap, std::abs(o.j0 * o.j0 - o.j1 * o.j1 - o.rho * o.rho -
                                     4.0 * a4 * p.n[0] * p.n[0] * p.n[1] * p.n[1]) / a4);
        const Params2D q = params_from_observables(o);
        trip = std::max({trip, std::abs(q.amplitude - p.amplitude), (q.n - p.n).cwiseAbs().maxCoeff(),
                         std::abs(std::polar(1.0, q.phi) - std::polar(1.0, p.phi))});
        const Observables2D o2 = observables_2d(psi_from_params_2d(q));
        back = std::max({back, obs_diff(o, o2), std::abs(std::polar(1.0, o.phi) - std::polar(1.0, o2.phi))});
    }
    ctx.check("current_gap_identity", "j.j - rho^2 = 4 A^4 n1^2 n2^2", gap, 1e-12, "500 random parameter points");
    ctx.check("params_observables_round_trip", "params -> (rho, j, phi) -> params", std::max(trip, back), 1e-10,
              "500 random points in the gauge n1 > 0, n2 >= 0, both directions");

    {
        const CovariantVars2D q = q_from_j(1.0, Eigen::Vector2d(2.0, 0.0));
        const Eigen::Vector2d j = j_from_q(1.0, q.q);
        ctx.check("q_example", "q = (j + rho f) / sqrt(j.j - rho^2)",
                  std::max((q.q - Eigen::Vector2d(std::sqrt(3.0), 0.0)).cwiseAbs().maxCoeff(),
                           (j - Eigen::Vector2d(2.0, 0.0)).cwiseAbs().maxCoeff()),
                  1e-14, "rho = 1, j = (2, 0) -> q = (sqrt3, 0) and back");
    }
    double q_trip = 0.0;
    for (int i = 0; i < 500; ++i) {
        double rho = rng.uniform(-2.0, 2.0);
        if (std::abs(rho) < 0.05) rho = 0.05;
        const double j1 = rng.uniform(-3.0, 3.0);
        const double j0 = std::sqrt(j1 * j1 + rho * rho + rng.uniform(0.05, 4.0)) * (rng.uniform() < 0.1 ? -1.0 : 1.0);
        const Eigen::Vector2d j(j0, j1);
        const Eigen::Vector2d back_j = j_from_q(rho, q_from_j(rho, j).q);
        q_trip = std::max(q_trip, (back_j - j).cwiseAbs().maxCoeff() / j.cwiseAbs().maxCoeff());
    }
    ctx.check("q_round_trip", "(rho, j) -> q -> j", q_trip, 1e-10, "500 random points with j.j - rho^2 > 0, rho != 0");
    const bool singular = throws_domain([] { q_from_j(1.0, Eigen::Vector2d(1.0, 0.0)); }) &&
                          throws_domain([] { j_from_q(0.0, Eigen::Vector2d(2.0, 0.0)); }) &&
                          throws_domain([] { j_from_q(1.0, Eigen::Vector2d(1.0, 0.0)); }) &&
                          throws_domain([] { params_from_observables({-1.0, 1.0, 0.0, 0.0}); });
    ctx.check("singular_inputs_rejected", "domains of the changes of variables", singular ? 0.0 : 1.0, 0.0,
              "lightlike (rho, j), rho = 0, q.q = 1 and j0 + rho = 0 raise domain errors");
}

void lagrangian_checks(SuiteContext& ctx)
{
    Rng& rng = ctx.rng();
    const Grid grid = Grid::uniform(2, ctx.grid_2d(), ctx.spacing_2d());
    const ModelParams2D model{1.3};

    double d_n = 0.0, n_j = 0.0, j_cov = 0.0, imag = 0.0, action = 0.0, doubled = 0.0, doubled_pair = 0.0,
           doubled_action = 0.0;
    FieldConfig2D first;
    for (int c = 0; c < 20; ++c) {
        const FieldConfig2D cfg = FieldConfig2D::random(rng, grid);
        if (c == 0) first = cfg;
        std::vector<double> ld(grid.size()), lc(grid.size()), lp(grid.size());
        for (std::size_t p = 0; p < grid.size(); ++p) {
            const LagrangianSet2D l = lagrangians_2d(cfg, grid.coordinates(p), model);
            d_n = std::max(d_n, std::abs(l.dirac.real() - l.n_form));
            n_j = std::max(n_j, std::abs(l.n_form - l.j_form));
            j_cov = std::max(j_cov, std::abs(l.j_form - l.covariant));
            imag = std::max(imag, std::abs(l.dirac.imag()));
            doubled = std::max(doubled, std::abs(l.j_form_doubled - l.dirac.real()));
            doubled_pair = std::max(doubled_pair, std::abs(l.j_form_doubled - l.covariant_doubled));
            ld[p] = l.dirac.real();
            lc[p] = l.covariant;
            lp[p] = l.covariant_doubled;
        }
        const double sd = grid_sum(ld), sc = grid_sum(lc), sp = grid_sum(lp);
        action = std::max(action, std::abs(sd - sc) / std::max(1.0, std::abs(sd)));
        doubled_action = std::max(doubled_action, std::abs(sd - sp) / std::max(1.0, std::abs(sd)));
    }
    const std::string note = "20 random smooth configurations, analytic derivatives, pointwise max";
    ctx.check("chain_dirac_n_form", "Dirac density = n-form density", d_n, 1e-8, note);
    ctx.check("chain_n_form_j_form", "n-form density = (rho, j, phi) density", n_j, 1e-8, note);
    ctx.check("chain_j_form_covariant", "(rho, j, phi) density = covariant density with f", j_cov, 1e-8, note);
    ctx.check("dirac_density_real", "Im of the Dirac density", imag, 1e-10, note);
    ctx.check("chain_action_level", "Dirac action = covariant action", action, 1e-8,
              fmt::format("relative grid sums; level holding: pointwise (max pointwise gap {:.3e})",
                          std::max({d_n, n_j, j_cov})));
    ctx.info("spin_term_coefficient_doubled", "(rho, j, phi) density with spin coefficient 1 and covariant with 2",
             doubled,
             fmt::format("pointwise gap to the Dirac density; relative action gap {:.3e}; coefficients 1/2 and 1 "
                         "reproduce the Dirac density",
                         doubled_action));
    ctx.info("doubled_forms_mutually_consistent", "(rho, j, phi) density vs covariant density, doubled spin terms",
             doubled_pair, "the doubled forms still agree with each other pointwise");

    {
        Params2D p{1.1, Vec3(0.6, 0.7, std::sqrt(1.0 - 0.85)), 0.4};
        const FieldConfig2D cfg = FieldConfig2D::constant(grid, p);
        const double rho = observables_2d(psi_from_params_2d(p)).rho;
        double r = 0.0;
        for (std::size_t q = 0; q < grid.size(); q += 97) {
            const LagrangianSet2D l = lagrangians_2d(cfg, grid.coordinates(q), model);
            const double ref = -model.m * rho;
            r = std::max({r, std::abs(l.dirac - ref), std::abs(l.n_form - ref), std::abs(l.j_form - ref),
                          std::abs(l.covariant - ref)});
        }
        ctx.check("constant_fields_mass_term", "all densities reduce to -m rho", r, 1e-12);
    }

    const CovarianceProbe id = covariance_probe_2d(identity_transform(2), first, grid, model);
    ctx.check("covariance_identity", "covariant density with f", std::max(id.transformed, id.fixed), 1e-12,
              "chi = 0 leaves both probes at zero");
    const CovarianceProbe probe = covariance_probe_2d(boost_2d(0.5), first, grid, model);
    ctx.check("covariance_f_transformed", "covariant density with f transformed as a vector", probe.transformed, 1e-8,
              "boost chi = 0.5, all grid points");
    ctx.info("preferred_frame_f_fixed", "covariant density with f held at {1, 0}", probe.fixed,
             "nonzero: f singles out a frame");
}

}  // namespace

void run_dirac2d_suite(SuiteContext& ctx)
{
    intertwining_checks(ctx);
    variable_checks(ctx);
    lagrangian_checks(ctx);
}

}  // namespace dirac_sv
