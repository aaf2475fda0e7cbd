#include "dirac_sv/dirac2d.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dirac_sv {

namespace {

const GammaRep& rep2()
{
    static const GammaRep rep = make_gamma_2d();
    return rep;
}

LightconeVector timelike_lightcone(const RealVector& w)
{
    if (w.size() != 2) throw std::invalid_argument("w must have two components");
    if (!(w[0] > 0.0) || !(w[0] * w[0] - w[1] * w[1] > 0.0))
        throw DomainError("L-hat needs a timelike w with w0 > 0");
    return LightconeVector::from_components(w[0], w[1]);
}

std::array<Jet<2>, 4> point_jets(const RealVector& x)
{
    return {Jet<2>::variable(x[0], 0), Jet<2>::variable(x[1], 1), Jet<2>(0.0), Jet<2>(0.0)};
}

ReflectionFit fit_scalar(const Field& target, const Field& basis)
{
    cplx num = 0.0;
    double den = 0.0;
    for (int c = 0; c < target.components(); ++c)
        for (std::size_t p = 0; p < target.points(); ++p) {
            num += std::conj(basis.at(c, p)) * target.at(c, p);
            den += std::norm(basis.at(c, p));
        }
    ReflectionFit fit;
    fit.c = den > 0.0 ? num / den : cplx(0.0);
    Field r = target;
    r.add_scaled(-fit.c, basis);
    fit.residual = r.max_abs();
    return fit;
}

Field scaled_by(const Field& f, cplx s) { return f.scaled(s); }

}  // namespace

ModelParams2D ModelParams2D::from_lambda(double lambda)
{
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    return {1.0 / lambda};
}

DiracResidual2D dirac_residual_2d(const Field& psi_d, double lambda, Derivative mode)
{
    if (psi_d.components() != 2 || psi_d.grid().dim != 2)
        throw std::invalid_argument("2D Dirac residual takes a two-component field on a 2D grid");
    const Field plus = psi_d.component_field(0);
    const Field minus = psi_d.component_field(1);
    const cplx il(0.0, lambda);

    Field r1 = plus;
    r1.add_scaled(-il, partial_lightcone(minus, +1, mode));
    Field r2 = minus;
    r2.add_scaled(-il, partial_lightcone(plus, -1, mode));

    DiracResidual2D out;
    out.component = std::max(r1.max_abs(), r2.max_abs());

    const Field d0 = partial(psi_d, 0, mode);
    const Field d1 = partial(psi_d, 1, mode);
    Field m = mix_components(il * rep2()[0], d0);
    m.add_scaled(1.0, mix_components(il * rep2()[1], d1));
    m.add_scaled(-1.0, psi_d);
    out.matrix = m.max_abs();
    return out;
}

Field lhat_from_derivatives(const LightconeVector& w, const Field& psi, const Field& d_plus, const Field& d_minus,
                            double lambda)
{
    if (psi.components() != 1) throw std::invalid_argument("L-hat acts on a scalar field");
    const cplx sp = w.plus.sqrt().value();
    const cplx sm = w.minus.sqrt().value();
    const cplx il(0.0, lambda);
    Field top = psi.scaled(sp);
    top.add_scaled(il * sm, d_plus);
    Field bottom = psi.scaled(sm);
    bottom.add_scaled(il * sp, d_minus);
    const std::array<Field, 2> parts{top, bottom};
    return Field::stack(parts);
}

Field lhat_apply(const RealVector& w_lower, const Field& psi, double lambda, Derivative mode)
{
    const LightconeVector w = timelike_lightcone(w_lower);
    return lhat_from_derivatives(w, psi, partial_lightcone(psi, +1, mode), partial_lightcone(psi, -1, mode), lambda);
}

double lhat_boost_check(double chi, const RealVector& w_lower, const PlaneWave& wave, const Grid& grid, double lambda)
{
    const LightconeVector w = timelike_lightcone(w_lower);
    const Field psi = Field::sample(grid, wave);
    const Field dp = partial_lightcone(psi, +1, Derivative::analytic);
    const Field dm = partial_lightcone(psi, -1, Derivative::analytic);

    const Field lhs = lhat_from_derivatives(boost_lightcone(w, chi), psi, scaled_by(dp, std::exp(chi)),
                                            scaled_by(dm, std::exp(-chi)), lambda);
    const ComplexMatrix prefactor = mat_exp(cplx(-chi / 2.0) * rep2()[0] * rep2()[1]);
    const Field rhs = mix_components(prefactor, lhat_from_derivatives(w, psi, dp, dm, lambda));
    return max_abs_diff(lhs, rhs);
}

double lhat_frame_check(double chi, const RealVector& w_lower, const PlaneWave& wave, const Grid& grid, double lambda)
{
    const LightconeVector w = timelike_lightcone(w_lower);
    const LorentzTransform boost = boost_2d(chi);
    const RealVector w_t = boost.apply_covector(w_lower);
    const RealVector k_t = boost.apply_covector(wave.k);

    // psi~(x~_p) = psi(x_p), so the samples are shared and only the
    // derivative symbols change.
    const Field psi = Field::sample(grid, wave);
    const Field dp = partial_lightcone(psi, +1, Derivative::analytic);
    const Field dm = partial_lightcone(psi, -1, Derivative::analytic);
    const Field dp_t = psi.scaled(-kI * (k_t[0] + k_t[1]));
    const Field dm_t = psi.scaled(-kI * (k_t[0] - k_t[1]));

    const Field lhs = lhat_from_derivatives(timelike_lightcone(w_t), psi, dp_t, dm_t, lambda);
    const SpinorRep s = spinor_rep_finite_boost(chi, Vec3::UnitX(), rep2());
    const Field rhs = mix_components(s.s, lhat_from_derivatives(w, psi, dp, dm, lambda));
    return max_abs_diff(lhs, rhs);
}

ReflectionFit lhat_space_reflection_fit(const RealVector& w_lower, const PlaneWave& wave, const Grid& grid,
                                        double lambda)
{
    const LightconeVector w = timelike_lightcone(w_lower);
    const Field psi = Field::sample(grid, wave);
    const Field dp = partial_lightcone(psi, +1, Derivative::analytic);
    const Field dm = partial_lightcone(psi, -1, Derivative::analytic);
    const Field lhs = lhat_from_derivatives(space_reflect_lightcone(w), psi, dm, dp, lambda);
    const Field basis = mix_components(rep2()[0], lhat_from_derivatives(w, psi, dp, dm, lambda));
    return fit_scalar(lhs, basis);
}

ReflectionFit lhat_time_reflection_fit(const RealVector& w_lower, const PlaneWave& wave, const Grid& grid,
                                       double lambda)
{
    const LightconeVector w = timelike_lightcone(w_lower);
    const Field psi = Field::sample(grid, wave);
    const Field dp = partial_lightcone(psi, +1, Derivative::analytic);
    const Field dm = partial_lightcone(psi, -1, Derivative::analytic);
    const cplx up = std::polar(1.0, std::numbers::pi);
    const cplx down = std::polar(1.0, -std::numbers::pi);
    const Field lhs =
        lhat_from_derivatives(time_reflect_lightcone(w), psi, scaled_by(dm, up), scaled_by(dp, down), lambda);
    const Field basis = mix_components(rep2()[1], lhat_from_derivatives(w, psi, dp, dm, lambda));
    return fit_scalar(lhs, basis);
}

Spinor psi_from_params_2d(const Params2D& p)
{
    const ComplexMatrix sn = sigma_dot(pauli_matrices(), p.n);
    const ComplexMatrix m = p.amplitude * std::exp(kI * p.phi) * sn * projector_pi_2d();
    Spinor column(2);
    column << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return m * column;
}

Observables2D observables_2d(const Spinor& psi)
{
    const GammaRep& rep = rep2();
    Observables2D o;
    o.rho = std::real((psi.adjoint() * rep[0] * psi)(0, 0));
    o.j0 = std::real((psi.adjoint() * psi)(0, 0));
    o.j1 = std::real((psi.adjoint() * rep[0] * rep[1] * psi)(0, 0));
    const cplx s = psi[0] + psi[1];
    o.phi = std::abs(s) > 0.0 ? std::arg(s) : 0.0;
    return o;
}

Params2D params_from_observables(const Observables2D& o)
{
    if (!(o.j0 > 0.0)) throw DomainError("params_from_observables needs j0 > 0");
    if (!(o.j0 + o.rho > 0.0)) throw DomainError("params_from_observables: j0 + rho = 0 is singular");
    double gap = o.j0 * o.j0 - o.j1 * o.j1 - o.rho * o.rho;
    if (gap < 0.0) {
        if (gap < -1e-12 * o.j0 * o.j0) throw DomainError("params_from_observables needs j.j - rho^2 >= 0");
        gap = 0.0;
    }
    const double d = 2.0 * o.j0 * (o.j0 + o.rho);
    Params2D p;
    p.amplitude = std::sqrt(o.j0);
    p.n = Vec3(std::sqrt((o.j0 + o.rho) / (2.0 * o.j0)), std::sqrt(gap / d), -o.j1 / std::sqrt(d));
    p.phi = o.phi;
    return p;
}

CovariantVars2D q_from_j(double rho, const Eigen::Vector2d& j)
{
    const double gap = j[0] * j[0] - j[1] * j[1] - rho * rho;
    if (!(gap > 0.0)) throw DomainError("q_from_j needs j.j - rho^2 > 0");
    CovariantVars2D out;
    out.q = (j + rho * out.f) / std::sqrt(gap);
    return out;
}

Eigen::Vector2d j_from_q(double rho, const Eigen::Vector2d& q)
{
    if (rho == 0.0) throw DomainError("j_from_q needs rho != 0");
    const double qq = q[0] * q[0] - q[1] * q[1];
    if (qq == 1.0) throw DomainError("j_from_q needs q.q != 1");
    const Eigen::Vector2d f(1.0, 0.0);
    const double qf = q[0];
    return 2.0 * rho * qf / (qq - 1.0) * q - rho * f;
}

FieldConfig2D FieldConfig2D::random(Rng& rng, const Grid& grid, double margin)
{
    if (grid.dim != 2) throw std::invalid_argument("2D field configuration needs a 2D grid");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        FieldConfig2D c;
        c.amplitude = TrigField::random(rng, grid, 1.0, 0.3, 3, 2);
        c.direction[0] = TrigField::random(rng, grid, 1.0, 0.4, 3, 2);
        c.direction[1] = TrigField::random(rng, grid, 0.8, 0.3, 3, 2);
        c.direction[2] = TrigField::random(rng, grid, 0.0, 0.8, 3, 2);
        c.phase = TrigField::random(rng, grid, 0.0, 1.0, 3, 2);
        if (c.margin(grid) > margin) return c;
    }
    throw std::runtime_error("could not draw a 2D field configuration inside the valid domain");
}

FieldConfig2D FieldConfig2D::constant(const Grid& grid, const Params2D& p)
{
    FieldConfig2D c;
    c.amplitude = TrigField::constant(grid, p.amplitude);
    for (int a = 0; a < 3; ++a) c.direction[a] = TrigField::constant(grid, p.n[a]);
    c.phase = TrigField::constant(grid, p.phi);
    return c;
}

Params2D FieldConfig2D::params_at(const RealVector& x) const
{
    Params2D p;
    p.amplitude = amplitude.eval(x);
    p.n = Vec3(direction[0].eval(x), direction[1].eval(x), direction[2].eval(x)).normalized();
    p.phi = phase.eval(x);
    return p;
}

double FieldConfig2D::margin(const Grid& grid) const
{
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const Params2D q = params_at(grid.coordinates(p));
        if (!(q.n[1] > 0.0)) return -1.0;
        const double a2 = q.amplitude * q.amplitude;
        worst = std::min({worst, 2.0 * a2 * q.n[0] * q.n[0], 4.0 * a2 * a2 * q.n[0] * q.n[0] * q.n[1] * q.n[1]});
    }
    return worst;
}

LagrangianSet2D lagrangians_2d(const FieldConfig2D& config, const RealVector& x, const ModelParams2D& model)
{
    const ParamPoint2D<2> p = config.at(point_jets(x));
    const ObsPoint2D<2> o = observables_from_params(p);
    const auto [psi, dpsi] = psi_jet_2d(p);
    LagrangianSet2D out;
    out.dirac = dirac_density(psi, dpsi, rep2(), model.m);
    out.n_form = n_form_density(p, model.m);
    out.j_form = j_form_density(o, model.m, SpinTerm::derived);
    out.covariant = covariant_density(o, Eigen::Vector2d(1.0, 0.0), model.m, SpinTerm::derived);
    out.j_form_doubled = j_form_density(o, model.m, SpinTerm::doubled);
    out.covariant_doubled = covariant_density(o, Eigen::Vector2d(1.0, 0.0), model.m, SpinTerm::doubled);
    return out;
}

std::vector<cplx> lagrangian_dirac_2d(const FieldConfig2D& config, const Grid& grid, const ModelParams2D& model)
{
    std::vector<cplx> out(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const auto [psi, dpsi] = psi_jet_2d(config.at(point_jets(grid.coordinates(p))));
        out[p] = dirac_density(psi, dpsi, rep2(), model.m);
    }
    return out;
}

std::vector<cplx> lagrangian_dirac_2d(const Field& psi, const ModelParams2D& model, Derivative mode)
{
    if (psi.components() != 2 || psi.grid().dim != 2)
        throw std::invalid_argument("2D Dirac Lagrangian takes a two-component field on a 2D grid");
    const Field d0 = partial(psi, 0, mode);
    const Field d1 = partial(psi, 1, mode);
    std::vector<cplx> out(psi.points());
    Spinor v(2);
    std::array<Spinor, 4> d{Spinor(2), Spinor(2), Spinor(2), Spinor(2)};
    for (std::size_t p = 0; p < psi.points(); ++p) {
        for (int c = 0; c < 2; ++c) {
            v[c] = psi.at(c, p);
            d[0][c] = d0.at(c, p);
            d[1][c] = d1.at(c, p);
        }
        out[p] = dirac_density(v, d, rep2(), model.m);
    }
    return out;
}

std::vector<double> lagrangian_n_form(const FieldConfig2D& config, const Grid& grid, const ModelParams2D& model)
{
    std::vector<double> out(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p)
        out[p] = n_form_density(config.at(point_jets(grid.coordinates(p))), model.m);
    return out;
}

std::vector<double> lagrangian_j_form(const FieldConfig2D& config, const Grid& grid, const ModelParams2D& model,
                                      SpinTerm term)
{
    std::vector<double> out(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p)
        out[p] = j_form_density(observables_from_params(config.at(point_jets(grid.coordinates(p)))), model.m, term);
    return out;
}

std::vector<double> lagrangian_covariant_2d(const FieldConfig2D& config, const Grid& grid,
                                            const ModelParams2D& model, SpinTerm term)
{
    std::vector<double> out(grid.size());
    const Eigen::Vector2d f(1.0, 0.0);
    for (std::size_t p = 0; p < grid.size(); ++p)
        out[p] = covariant_density(observables_from_params(config.at(point_jets(grid.coordinates(p)))), f,
                                   model.m, term);
    return out;
}

CovarianceProbe covariance_probe_2d(const LorentzTransform& lambda, const FieldConfig2D& config, const Grid& grid,
                                    const ModelParams2D& model)
{
    if (lambda.dim != 2) throw std::invalid_argument("2D covariance probe needs a 2D transform");
    const RealMatrix& m = lambda.matrix;
    const RealMatrix inv = lambda.inverse();
    const Eigen::Vector2d f(1.0, 0.0);
    const Eigen::Vector2d f_t = m * f;

    CovarianceProbe out;
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const RealVector x = grid.coordinates(p);
        const double reference =
            covariant_density(observables_from_params(config.at(point_jets(x))), f, model.m);

        const RealVector x_t = m * x;
        const ObsPoint2D<2> o = observables_from_params(config.at(pulled_back_jets<2>(inv, x_t)));
        ObsPoint2D<2> o_t = o;
        o_t.j0 = m(0, 0) * o.j0 + m(0, 1) * o.j1;
        o_t.j1 = m(1, 0) * o.j0 + m(1, 1) * o.j1;

        out.transformed = std::max(out.transformed, std::abs(covariant_density(o_t, f_t, model.m) - reference));
        out.fixed = std::max(out.fixed, std::abs(covariant_density(o_t, f, model.m) - reference));
    }
    return out;
}

}  // namespace dirac_sv
