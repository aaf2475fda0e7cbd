#pragma once

// The 1+1D program: the two-component Dirac system in lightcone form, the
// intertwining operator L(w, d, lambda) from Klein-Gordon to Dirac
// solutions, the change to scalar-vector variables (rho, j, phi) and the
// chain of equivalent Lagrangian densities ending in the covariant form with
// the constant vector f.
//
// Spinor components are (psi+, psi-) in the representation
// gamma^0 = [[0,1],[1,0]], gamma^1 = [[0,1],[-1,0]].

#include "dirac_sv/algebra.hpp"
#include "dirac_sv/dirac.hpp"
#include "dirac_sv/fields.hpp"
#include "dirac_sv/lorentz.hpp"

#include <vector>

namespace dirac_sv {

struct ModelParams2D {
    double m = 1.0;

    double lambda() const { return 1.0 / m; }
    static ModelParams2D from_lambda(double lambda);
};

struct Params2D {
    double amplitude = 0.0;
    Vec3 n{1.0, 0.0, 0.0};
    double phi = 0.0;
};

struct Observables2D {
    double rho = 0.0;
    double j0 = 0.0;
    double j1 = 0.0;
    double phi = 0.0;
};

struct CovariantVars2D {
    Eigen::Vector2d q{0.0, 0.0};
    Eigen::Vector2d f{1.0, 0.0};
};

// ---- Dirac system and the intertwining operator -------------------------

struct DiracResidual2D {
    double component = 0.0;  // max |psi+ - i lambda d+ psi-|, |psi- - i lambda d- psi+|
    double matrix = 0.0;     // max |i lambda gamma^l d_l psi - psi|
};

DiracResidual2D dirac_residual_2d(const Field& psi_d, double lambda, Derivative mode = Derivative::automatic);

/// (sqrt(w+) psi + i lambda sqrt(w-) d+ psi, sqrt(w-) psi + i lambda sqrt(w+) d- psi)
/// with the derivative fields supplied by the caller.
Field lhat_from_derivatives(const LightconeVector& w, const Field& psi, const Field& d_plus, const Field& d_minus,
                            double lambda);
/// L(w, d, lambda) psi for a constant covariant w_l = (w0, w1). Throws
/// DomainError unless w is timelike with w0 > 0.
Field lhat_apply(const RealVector& w_lower, const Field& psi, double lambda,
                 Derivative mode = Derivative::automatic);

/// Boost in lightcone form: max |L(w~, d~) psi - exp(-gamma^0 gamma^1 chi / 2) L(w, d) psi|
/// with w~+- = e^{+-chi} w+-, d~+- = e^{+-chi} d+- on a sampled plane wave.
double lhat_boost_check(double chi, const RealVector& w_lower, const PlaneWave& wave, const Grid& grid,
                        double lambda);

/// Same statement in vector form: covariant w and k transformed with the
/// boost_2d(chi) matrix, compared with spinor_rep_finite_boost(chi) L(w, d) psi.
double lhat_frame_check(double chi, const RealVector& w_lower, const PlaneWave& wave, const Grid& grid,
                        double lambda);

/// Least-squares c in L(w~, d~) psi = c M L(w, d) psi for M = gamma^0 (space
/// reflection) or gamma^1 (time reflection, where c = e^{i pi/2} is expected).
struct ReflectionFit {
    cplx c{0.0, 0.0};
    double residual = 0.0;
};
ReflectionFit lhat_space_reflection_fit(const RealVector& w_lower, const PlaneWave& wave, const Grid& grid,
                                        double lambda);
ReflectionFit lhat_time_reflection_fit(const RealVector& w_lower, const PlaneWave& wave, const Grid& grid,
                                       double lambda);

// ---- Scalar-vector variables ---------------------------------------------

/// A (sigma n) e^{i phi} Pi applied to the column (1,1)/sqrt(2).
Spinor psi_from_params_2d(const Params2D& p);
/// rho = psibar psi, j^l = psibar gamma^l psi, phi = arg(psi+ + psi-).
Observables2D observables_2d(const Spinor& psi);
/// Inverse of the observable map in the gauge n1 >= 0, n2 >= 0.
Params2D params_from_observables(const Observables2D& o);

/// q^l = (j^l + rho f^l) / sqrt(j.j - rho^2) with f = {1, 0}.
CovariantVars2D q_from_j(double rho, const Eigen::Vector2d& j);
/// j^l = 2 rho (q.f) / (q.q - 1) q^l - rho f^l
Eigen::Vector2d j_from_q(double rho, const Eigen::Vector2d& q);

// ---- Smooth field configurations and Lagrangian densities ----------------

/// Coefficient of the spin term in the j-form and covariant densities.
/// `derived` is the one that reproduces the Dirac density; `doubled` is
/// twice as large.
enum class SpinTerm { derived, doubled };

template <int N>
struct ParamPoint2D {
    Jet<N> amplitude;
    std::array<Jet<N>, 3> n;
    Jet<N> phi;
};

template <int N>
struct ObsPoint2D {
    Jet<N> rho;
    Jet<N> j0;
    Jet<N> j1;
    Jet<N> phi;
};

/// Smooth periodic (A, n, phi) built from trigonometric fields; n is the
/// normalized raw direction.
struct FieldConfig2D {
    TrigField amplitude;
    std::array<TrigField, 3> direction;
    TrigField phase;

    /// Random configuration whose grid values keep j0 + rho and j.j - rho^2
    /// above `margin` and n2 > 0.
    static FieldConfig2D random(Rng& rng, const Grid& grid, double margin = 0.1);
    static FieldConfig2D constant(const Grid& grid, const Params2D& p);

    Params2D params_at(const RealVector& x) const;

    template <int N>
    ParamPoint2D<N> at(const std::array<Jet<N>, 4>& x) const
    {
        ParamPoint2D<N> out;
        out.amplitude = amplitude.eval(x);
        out.phi = phase.eval(x);
        std::array<Jet<N>, 3> raw{direction[0].eval(x), direction[1].eval(x), direction[2].eval(x)};
        const Jet<N> norm = sqrt(raw[0] * raw[0] + raw[1] * raw[1] + raw[2] * raw[2]);
        for (int a = 0; a < 3; ++a) out.n[a] = raw[a] / norm;
        return out;
    }

    /// min over the grid of min(j0 + rho, j.j - rho^2)
    double margin(const Grid& grid) const;
};

template <int N>
ObsPoint2D<N> observables_from_params(const ParamPoint2D<N>& p)
{
    const Jet<N> a2 = p.amplitude * p.amplitude;
    return {a2 * (2.0 * p.n[0] * p.n[0] - 1.0), a2, -2.0 * a2 * p.n[2] * p.n[0], p.phi};
}

/// Spinor value and coordinate derivatives of psi_from_params_2d at a point.
template <int N>
std::pair<Spinor, std::array<Spinor, 4>> psi_jet_2d(const ParamPoint2D<N>& p)
{
    const Jet<N> scale = p.amplitude * (1.0 / std::sqrt(2.0));
    const CJet<N> e = expi(p.phi);
    const CJet<N> u0{p.n[0] + p.n[2], -p.n[1]};
    const CJet<N> u1{p.n[0] - p.n[2], p.n[1]};
    const CJet<N> c0 = scale * (e * u0);
    const CJet<N> c1 = scale * (e * u1);
    Spinor v(2);
    v << value_of(c0), value_of(c1);
    std::array<Spinor, 4> d;
    for (int a = 0; a < N; ++a) {
        d[a] = Spinor(2);
        d[a] << derivative_of(c0, a), derivative_of(c1, a);
    }
    return {v, d};
}

template <int N>
double n_form_density(const ParamPoint2D<N>& p, double m)
{
    if (!(p.n[1].v > 0.0)) throw DomainError("n-form density needs n2 > 0");
    const ObsPoint2D<N> o = observables_from_params(p);
    const Jet<N> r3 = p.n[2] / p.n[1];
    const Jet<N> r1 = p.n[0] / p.n[1];
    const double a2 = p.amplitude.v * p.amplitude.v;
    return -m * o.rho.v - a2 * p.n[1].v * p.n[1].v * (r3.d[0] - r1.d[1]) - (o.j0.v * o.phi.d[0] + o.j1.v * o.phi.d[1]);
}

template <int N>
double j_form_density(const ObsPoint2D<N>& o, double m, SpinTerm term = SpinTerm::derived)
{
    const Jet<N> gap = o.j0 * o.j0 - o.j1 * o.j1 - o.rho * o.rho;
    if (!(gap.v > 0.0)) throw DomainError("j-form density needs j.j - rho^2 > 0");
    if (!(o.j0.v + o.rho.v > 0.0)) throw DomainError("j-form density needs j0 + rho > 0");
    const Jet<N> s = sqrt(gap);
    const Jet<N> a = o.j1 / s;
    const Jet<N> b = (o.j0 + o.rho) / s;
    const double coef = term == SpinTerm::derived ? 0.5 : 1.0;
    return -m * o.rho.v + coef * gap.v / (o.j0.v + o.rho.v) * (a.d[0] + b.d[1]) -
           (o.j0.v * o.phi.d[0] + o.j1.v * o.phi.d[1]);
}

/// Covariant density with an explicit contravariant f (f = {1,0} in the
/// defining frame).
template <int N>
double covariant_density(const ObsPoint2D<N>& o, const Eigen::Vector2d& f, double m,
                         SpinTerm term = SpinTerm::derived)
{
    const Jet<N> gap = o.j0 * o.j0 - o.j1 * o.j1 - o.rho * o.rho;
    if (!(gap.v > 0.0)) throw DomainError("covariant density needs j.j - rho^2 > 0");
    const Jet<N> s = sqrt(gap);
    const Jet<N> q0 = (o.j0 + o.rho * f[0]) / s;
    const Jet<N> q1 = (o.j1 + o.rho * f[1]) / s;
    const double qq = q0.v * q0.v - q1.v * q1.v;
    // d_0 q_1 - d_1 q_0 with q_0 = q^0, q_1 = -q^1
    const double curl = -q1.d[0] - q0.d[1];
    const double coef = term == SpinTerm::derived ? 1.0 : 2.0;
    return -m * o.rho.v - coef * o.rho.v * curl / (qq - 1.0) - (o.j0.v * o.phi.d[0] + o.j1.v * o.phi.d[1]);
}

struct LagrangianSet2D {
    cplx dirac;
    double n_form = 0.0;
    double j_form = 0.0;
    double covariant = 0.0;
    double j_form_doubled = 0.0;
    double covariant_doubled = 0.0;
};

LagrangianSet2D lagrangians_2d(const FieldConfig2D& config, const RealVector& x, const ModelParams2D& model);

/// Grid versions of the individual densities, one value per grid point.
std::vector<cplx> lagrangian_dirac_2d(const FieldConfig2D& config, const Grid& grid, const ModelParams2D& model);
std::vector<cplx> lagrangian_dirac_2d(const Field& psi, const ModelParams2D& model,
                                      Derivative mode = Derivative::automatic);
std::vector<double> lagrangian_n_form(const FieldConfig2D& config, const Grid& grid, const ModelParams2D& model);
std::vector<double> lagrangian_j_form(const FieldConfig2D& config, const Grid& grid, const ModelParams2D& model,
                                      SpinTerm term = SpinTerm::derived);
std::vector<double> lagrangian_covariant_2d(const FieldConfig2D& config, const Grid& grid,
                                            const ModelParams2D& model, SpinTerm term = SpinTerm::derived);

/// Evaluate the covariant density at x~ = Lambda x_p for every grid point,
/// either transforming f with Lambda (residual `transformed`) or keeping
/// f = {1,0} in the new frame (residual `fixed`), against the density at x_p.
CovarianceProbe covariance_probe_2d(const LorentzTransform& lambda, const FieldConfig2D& config, const Grid& grid,
                                    const ModelParams2D& model);

}  // namespace dirac_sv
