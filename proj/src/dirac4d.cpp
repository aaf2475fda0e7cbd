#include "dirac_sv/dirac4d.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dirac_sv {

namespace {

const GammaRep& rep4()
{
    static const GammaRep rep = make_gamma_4d();
    return rep;
}

const ComplexMatrix& g5()
{
    static const ComplexMatrix m = gamma5(rep4());
    return m;
}

const std::array<ComplexMatrix, 3>& sigmas()
{
    static const std::array<ComplexMatrix, 3> s = sigma_matrices(rep4());
    return s;
}

struct Perm {
    std::array<int, 4> idx;
    double sign;
};

const std::vector<Perm>& permutations4()
{
    static const std::vector<Perm> perms = [] {
        std::vector<Perm> out;
        std::array<int, 4> p{0, 1, 2, 3};
        do {
            out.push_back({p, static_cast<double>(levi_civita(p))});
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

constexpr std::array<double, 4> kMetric{1.0, -1.0, -1.0, -1.0};

using J4 = Jet<4>;
using JVec = std::array<J4, 4>;

J4 mdot(const JVec& a, const JVec& b)
{
    J4 s = a[0] * b[0];
    for (int i = 1; i < 4; ++i) s -= a[i] * b[i];
    return s;
}

J4 mdot(const JVec& a, const RealVector& b)
{
    J4 s = a[0] * b[0];
    for (int i = 1; i < 4; ++i) s -= a[i] * b[i];
    return s;
}

ComplexMatrix sigma_of(const std::array<double, 3>& v)
{
    return sigma_dot(sigmas(), Vec3(v[0], v[1], v[2]));
}

JVec transform_jets(const RealMatrix& m, const JVec& v)
{
    JVec out;
    for (int i = 0; i < 4; ++i) {
        J4 s(0.0);
        for (int k = 0; k < 4; ++k) s += m(i, k) * v[k];
        out[i] = s;
    }
    return out;
}


struct ObsJets {
    JVec j;
    JVec s;
};

ObsJets observable_jets(const Spinor& psi, const std::array<Spinor, 4>& dpsi)
{
    ObsJets o;
    for (int l = 0; l < 4; ++l) {
        o.j[l] = bilinear_jet<4>(psi, dpsi, rep4()[l], rep4());
        o.s[l] = bilinear_jet<4>(psi, dpsi, kI * g5() * rep4()[l], rep4());
    }
    return o;
}

RealVector spatial4(const Vec3& v)
{
    RealVector out(4);
    out << 0.0, v[0], v[1], v[2];
    return out;
}

RealVector unit_f()
{
    RealVector f(4);
    f << 1.0, 0.0, 0.0, 0.0;
    return f;
}

}  // namespace

double minkowski(const RealVector& a, const RealVector& b)
{
    double s = a[0] * b[0];
    for (Eigen::Index i = 1; i < a.size(); ++i) s -= a[i] * b[i];
    return s;
}

double Observables4D::rho() const
{
    const double jj = minkowski(j, j);
    if (!(jj > 0.0)) throw DomainError("rho needs a timelike current");
    return std::sqrt(jj);
}

Observables4D observables_4d(const Spinor& psi)
{
    if (psi.size() != 4) throw std::invalid_argument("observables_4d takes a 4-spinor");
    Observables4D o;
    const Spinor b = (psi.adjoint() * rep4()[0]).transpose();
    for (int l = 0; l < 4; ++l) {
        o.j[l] = std::real((b.transpose() * rep4()[l] * psi)(0, 0));
        o.s[l] = std::real((kI * b.transpose() * g5() * rep4()[l] * psi)(0, 0));
    }
    return o;
}

Spinor reference_column(const Vec3& z)
{
    const ComplexMatrix pi = projector_pi_4d(rep4(), z);
    Eigen::Index best = 0;
    for (Eigen::Index c = 1; c < 4; ++c)
        if (pi.col(c).norm() > pi.col(best).norm()) best = c;
    Spinor col = pi.col(best) / pi.col(best).norm();
    const Spinor probe = kI * sigma_dot(sigmas(), z) * col;
    for (int k = 0; k < 4; ++k)
        if (std::abs(probe[k]) > 1e-12) {
            col *= std::exp(-kI * std::arg(probe[k]));
            break;
        }
    return col;
}

Spinor psi_from_params_4d(const Params4D& p)
{
    const ComplexMatrix k = mat_exp(cplx(0.5 * p.kappa) * g5());
    const ComplexMatrix b = mat_exp(cplx(0.0, -0.5) * g5() * sigma_dot(sigmas(), p.eta));
    const ComplexMatrix n = mat_exp(cplx(0.0, 0.5 * std::numbers::pi) * sigma_dot(sigmas(), p.n));
    return p.amplitude * std::exp(kI * p.phi) * (k * b * n * reference_column(p.z));
}

Spinor psi_from_params_4d_closed(const Params4D& p)
{
    const ComplexMatrix id = rep4().identity();
    const ComplexMatrix k = std::cos(0.5 * p.kappa) * id + std::sin(0.5 * p.kappa) * g5();
    const double s = p.eta.squaredNorm() / 4.0;
    const ComplexMatrix b =
        cosh_sqrt(s) * id + sinhc_sqrt(s) * (cplx(0.0, -0.5) * g5() * sigma_dot(sigmas(), p.eta));
    const ComplexMatrix n = kI * sigma_dot(sigmas(), p.n);
    return p.amplitude * std::exp(kI * p.phi) * (k * b * n * reference_column(p.z));
}

Eigen::Matrix<cplx, 1, Eigen::Dynamic, Eigen::RowMajor, 1, 4> conjugate_from_params_4d(const Params4D& p)
{
    const ComplexMatrix pi = projector_pi_4d(rep4(), p.z);
    const ComplexMatrix n = mat_exp(cplx(0.0, -0.5 * std::numbers::pi) * sigma_dot(sigmas(), p.n));
    const ComplexMatrix b = mat_exp(cplx(0.0, -0.5) * g5() * sigma_dot(sigmas(), p.eta));
    const ComplexMatrix k = mat_exp(cplx(-0.5 * p.kappa) * g5());
    const Spinor col = reference_column(p.z);
    return p.amplitude * std::exp(-kI * p.phi) * (col.adjoint() * pi * n * b * k);
}

AEta aeta_from_j(const RealVector& j)
{
    const double jj = minkowski(j, j);
    if (!(jj > 0.0) || !(j[0] > 0.0)) throw DomainError("aeta_from_j needs a future-timelike current");
    const double rho = std::sqrt(jj);
    const Vec3 spatial(j[1], j[2], j[3]);
    AEta out;
    out.amplitude = std::sqrt(rho);
    const double len = spatial.norm();
    if (len > 0.0) out.eta = std::asinh(len / rho) * spatial / len;
    return out;
}

RealVector j_from_aeta(const AEta& p)
{
    const double eta = p.eta.norm();
    const double a2 = p.amplitude * p.amplitude;
    RealVector j(4);
    j[0] = a2 * std::cosh(eta);
    const Vec3 v = eta > 0.0 ? Vec3(p.eta / eta) : Vec3::Zero();
    for (int a = 0; a < 3; ++a) j[a + 1] = a2 * v[a] * std::sinh(eta);
    return j;
}

Vec3 xi_from_s(const RealVector& j, const RealVector& s)
{
    const double jj = minkowski(j, j);
    if (!(jj > 0.0)) throw DomainError("xi_from_s needs a timelike current");
    const double rho = std::sqrt(jj);
    if (!(j[0] + rho > 0.0)) throw DomainError("xi_from_s needs j0 + rho > 0");
    Vec3 xi;
    for (int a = 0; a < 3; ++a) xi[a] = (s[a + 1] - j[a + 1] * s[0] / (j[0] + rho)) / rho;
    return xi;
}

RealVector s_from_xi(const RealVector& j, const Vec3& xi)
{
    const double jj = minkowski(j, j);
    if (!(jj > 0.0)) throw DomainError("s_from_xi needs a timelike current");
    const double rho = std::sqrt(jj);
    if (!(j[0] + rho > 0.0)) throw DomainError("s_from_xi needs j0 + rho > 0");
    const Vec3 spatial(j[1], j[2], j[3]);
    const double jxi = spatial.dot(xi);
    RealVector s(4);
    s[0] = jxi;
    for (int a = 0; a < 3; ++a) s[a + 1] = rho * xi[a] + jxi * spatial[a] / (rho + j[0]);
    return s;
}

AuxVectors aux_vectors(const RealVector& j, const Vec3& xi, const Vec3& z)
{
    const double jj = minkowski(j, j);
    if (!(jj > 0.0)) throw DomainError("aux_vectors needs a timelike current");
    const double rho = std::sqrt(jj);
    if (!(1.0 + xi.dot(z) > 0.0)) throw DomainError("aux_vectors: xi.z = -1 is singular");
    AuxVectors out;
    out.f = unit_f();
    out.z = spatial4(z);
    const RealVector xi4 = spatial4(xi);
    out.nu = xi4 - minkowski(xi4, out.f) * out.f;
    out.mu = out.nu / std::sqrt(2.0 * (1.0 - minkowski(out.nu, out.z)));
    const double base = 2.0 * rho * (rho + minkowski(j, out.f));
    if (!(base > 0.0)) throw DomainError("aux_vectors needs rho + j.f > 0");
    out.q = (j + out.f * rho) / std::sqrt(base);
    return out;
}

FieldConfig4D FieldConfig4D::random(Rng& rng, const Grid& grid, const Vec3& z, double margin)
{
    if (grid.dim != 4) throw std::invalid_argument("4D field configuration needs a 4D grid");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        FieldConfig4D c;
        c.amplitude = TrigField::random(rng, grid, 1.0, 0.2, 2, 1);
        c.kappa = TrigField::random(rng, grid, 0.0, 0.5, 2, 1);
        c.phase = TrigField::random(rng, grid, 0.0, 0.8, 2, 1);
        for (int a = 0; a < 3; ++a) {
            c.eta[a] = TrigField::random(rng, grid, 0.0, 0.35, 2, 1);
            c.direction[a] = TrigField::random(rng, grid, z[a], 0.35, 2, 1);
        }
        if (c.margin(grid, z) > margin) return c;
    }
    throw std::runtime_error("could not draw a 4D field configuration inside the valid domain");
}

FieldConfig4D FieldConfig4D::constant(const Grid& grid, const Params4D& p)
{
    FieldConfig4D c;
    c.amplitude = TrigField::constant(grid, p.amplitude);
    c.kappa = TrigField::constant(grid, p.kappa);
    c.phase = TrigField::constant(grid, p.phi);
    for (int a = 0; a < 3; ++a) {
        c.eta[a] = TrigField::constant(grid, p.eta[a]);
        c.direction[a] = TrigField::constant(grid, p.n[a]);
    }
    return c;
}

Params4D FieldConfig4D::params_at(const RealVector& x, const Vec3& z) const
{
    Params4D p;
    p.amplitude = amplitude.eval(x);
    p.kappa = kappa.eval(x);
    p.phi = phase.eval(x);
    for (int a = 0; a < 3; ++a) p.eta[a] = eta[a].eval(x);
    p.n = Vec3(direction[0].eval(x), direction[1].eval(x), direction[2].eval(x)).normalized();
    p.z = z;
    return p;
}

double FieldConfig4D::margin(const Grid& grid, const Vec3& z) const
{
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const Observables4D o = observables_4d(psi_from_params_4d_closed(params_at(grid.coordinates(p), z)));
        const double jj = minkowski(o.j, o.j);
        if (!(jj > 0.0)) return -1.0;
        const Vec3 xi = xi_from_s(o.j, o.s);
        worst = std::min({worst, std::sqrt(jj), 1.0 + xi.dot(z)});
    }
    return worst;
}

std::pair<Spinor, std::array<Spinor, 4>> psi_jet_4d(const ParamPoint4D<4>& p, const Spinor& column)
{
    const ComplexMatrix id = rep4().identity();
    const ComplexMatrix& gamma5m = g5();

    const double ck = std::cos(0.5 * p.kappa.v);
    const double sk = std::sin(0.5 * p.kappa.v);
    const ComplexMatrix k = ck * id + sk * gamma5m;
    const ComplexMatrix dk_unit = 0.5 * (-sk * id + ck * gamma5m);  // dK / d kappa

    const J4 s = (p.eta[0] * p.eta[0] + p.eta[1] * p.eta[1] + p.eta[2] * p.eta[2]) * 0.25;
    const J4 ch = cosh_sqrt(s);
    const J4 sc = sinhc_sqrt(s);
    const cplx half_i(0.0, -0.5);
    const ComplexMatrix m = half_i * gamma5m * sigma_of({p.eta[0].v, p.eta[1].v, p.eta[2].v});
    const ComplexMatrix b = ch.v * id + sc.v * m;
    const ComplexMatrix n = kI * sigma_of({p.n[0].v, p.n[1].v, p.n[2].v});

    const CJet<4> a = p.amplitude * expi(p.phi);
    const cplx av = value_of(a);

    const Spinor u = n * column;
    const Spinor bu = b * u;
    const Spinor kbu = k * bu;

    std::pair<Spinor, std::array<Spinor, 4>> out;
    out.first = av * kbu;
    for (int ax = 0; ax < 4; ++ax) {
        const ComplexMatrix dm = half_i * gamma5m * sigma_of({p.eta[0].d[ax], p.eta[1].d[ax], p.eta[2].d[ax]});
        const ComplexMatrix db = ch.d[ax] * id + sc.d[ax] * m + sc.v * dm;
        const ComplexMatrix dn = kI * sigma_of({p.n[0].d[ax], p.n[1].d[ax], p.n[2].d[ax]});
        const Spinor inner = (p.kappa.d[ax] * dk_unit) * bu + k * (db * u + b * (dn * column));
        out.second[ax] = derivative_of(a, ax) * kbu + av * inner;
    }
    return out;
}

SvTerms sv_density(const JVec& j, const JVec& s, const J4& phi, const J4& kappa, const RealVector& f,
                   const RealVector& z, double m)
{
    const J4 jj = mdot(j, j);
    if (!(jj.v > 0.0)) throw DomainError("scalar-vector density needs a timelike current");
    const J4 rho = sqrt(jj);
    const J4 jf = mdot(j, f);
    const J4 sf = mdot(s, f);
    if (!(jf.v + rho.v > 0.0)) throw DomainError("scalar-vector density needs rho + j.f > 0");

    JVec xi, nu, mu, q;
    for (int i = 0; i < 4; ++i) xi[i] = (s[i] - (j[i] + rho * f[i]) * sf / (jf + rho)) / rho;
    const J4 xif = mdot(xi, f);
    for (int i = 0; i < 4; ++i) nu[i] = xi[i] - xif * f[i];
    const J4 gap = 1.0 - mdot(nu, z);
    if (!(gap.v > 0.0)) throw DomainError("scalar-vector density: xi.z = -1 is singular");
    const J4 mu_norm = sqrt(2.0 * gap);
    const J4 q_norm = sqrt(2.0 * rho * (rho + jf));
    for (int i = 0; i < 4; ++i) {
        mu[i] = nu[i] / mu_norm;
        q[i] = (j[i] + f[i] * rho) / q_norm;
    }

    // S rebuilt from xi (equal to s on the constraint surface)
    const double jxi = mdot(j, xi).v;
    std::array<double, 4> s_xi{};
    for (int i = 0; i < 4; ++i) s_xi[i] = rho.v * xi[i].v - jxi * (j[i].v + rho.v * f[i]) / (rho.v + jf.v);

    double t1 = 0.0;
    double t2 = 0.0;
    for (const Perm& p : permutations4()) {
        const auto [i, k, l, mm] = p.idx;
        double mu_flow = 0.0;
        for (int a = 0; a < 4; ++a) mu_flow += j[a].v * mu[k].d[a];
        t1 += p.sign * mu[i].v * mu_flow * z[l] * f[mm];
        t2 += p.sign * q[i].v * kMetric[k] * q[l].d[k] * nu[mm].v;
    }

    double j_dphi = 0.0;
    double s_dkappa = 0.0;
    for (int a = 0; a < 4; ++a) {
        j_dphi += j[a].v * phi.d[a];
        s_dkappa += s_xi[a] * kappa.d[a];
    }
    const double sin_half = std::sin(0.5 * kappa.v);

    SvTerms out;
    out.classical = -m * rho.v - j_dphi - t1;
    out.classical_plus = -m * rho.v - j_dphi + t1;
    out.q1 = 2.0 * m * rho.v * sin_half * sin_half - 0.5 * s_dkappa;
    out.q2 = -rho.v * t2;
    return out;
}

std::vector<cplx> lagrangian_dirac_4d(const Field& psi, double m, Derivative mode)
{
    if (psi.components() != 4 || psi.grid().dim != 4)
        throw std::invalid_argument("4D Dirac Lagrangian takes a four-component field on a 4D grid");
    std::array<Field, 4> d{partial(psi, 0, mode), partial(psi, 1, mode), partial(psi, 2, mode),
                           partial(psi, 3, mode)};
    std::vector<cplx> out(psi.points());
    Spinor v(4);
    std::array<Spinor, 4> dv{Spinor(4), Spinor(4), Spinor(4), Spinor(4)};
    for (std::size_t p = 0; p < psi.points(); ++p) {
        for (int c = 0; c < 4; ++c) {
            v[c] = psi.at(c, p);
            for (int a = 0; a < 4; ++a) dv[a][c] = d[a].at(c, p);
        }
        out[p] = dirac_density(v, dv, rep4(), m);
    }
    return out;
}

Densities4D lagrangians_4d(const FieldConfig4D& config, const Grid& grid, const Vec3& z_build, const Vec3& z_eval,
                           double m)
{
    const Spinor column = reference_column(z_build);
    const RealVector f = unit_f();
    const RealVector z4 = spatial4(z_eval);
    Densities4D out;
    out.dirac.resize(grid.size());
    out.sv.resize(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const ParamPoint4D<4> pp = config.at(coordinate_jets<4>(grid, p));
        const auto [psi, dpsi] = psi_jet_4d(pp, column);
        out.dirac[p] = dirac_density(psi, dpsi, rep4(), m);
        const ObsJets o = observable_jets(psi, dpsi);
        out.sv[p] = sv_density(o.j, o.s, pp.phi, pp.kappa, f, z4, m);
    }
    return out;
}

double ActionComparison4D::relative() const
{
    return std::abs(dirac_action - sv_action) / std::max(std::abs(dirac_action), 1e-300);
}

double ActionComparison4D::relative_plus() const
{
    return std::abs(dirac_action - sv_action_plus) / std::max(std::abs(dirac_action), 1e-300);
}

ActionComparison4D compare_actions_4d(const Densities4D& d, const Grid& grid)
{
    std::vector<double> ld(d.dirac.size()), lsv(d.sv.size()), lpr(d.sv.size());
    ActionComparison4D out;
    for (std::size_t p = 0; p < d.dirac.size(); ++p) {
        ld[p] = d.dirac[p].real();
        lsv[p] = d.sv[p].total();
        lpr[p] = d.sv[p].total_plus();
        out.pointwise_max = std::max(out.pointwise_max, std::abs(ld[p] - lsv[p]));
        out.imag_max = std::max(out.imag_max, std::abs(d.dirac[p].imag()));
    }
    const double vol = grid.cell_volume();
    out.dirac_action = grid_sum(ld) * vol;
    out.sv_action = grid_sum(lsv) * vol;
    out.sv_action_plus = grid_sum(lpr) * vol;
    return out;
}

CovarianceProbe covariance_probe_4d(const LorentzTransform& lambda, const FieldConfig4D& config, const Grid& grid,
                                    const Vec3& z, double m)
{
    if (lambda.dim != 4) throw std::invalid_argument("4D covariance probe needs a 4D transform");
    const RealMatrix& lm = lambda.matrix;
    const RealMatrix inv = lambda.inverse();
    const Spinor column = reference_column(z);
    const RealVector f = unit_f();
    const RealVector z4 = spatial4(z);
    const RealVector f_t = lm * f;
    const RealVector z_t = lm * z4;

    CovarianceProbe out;
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const RealVector x = grid.coordinates(p);
        const ParamPoint4D<4> pp = config.at(coordinate_jets<4>(grid, p));
        const auto [psi, dpsi] = psi_jet_4d(pp, column);
        const ObsJets o = observable_jets(psi, dpsi);
        const double reference = sv_density(o.j, o.s, pp.phi, pp.kappa, f, z4, m).total();

        const RealVector x_t = lm * x;
        const ParamPoint4D<4> pt = config.at(pulled_back_jets<4>(inv, x_t));
        const auto [psi_t, dpsi_t] = psi_jet_4d(pt, column);
        const ObsJets ot = observable_jets(psi_t, dpsi_t);
        const JVec j_t = transform_jets(lm, ot.j);
        const JVec s_t = transform_jets(lm, ot.s);

        out.transformed = std::max(
            out.transformed, std::abs(sv_density(j_t, s_t, pt.phi, pt.kappa, f_t, z_t, m).total() - reference));
        out.fixed =
            std::max(out.fixed, std::abs(sv_density(j_t, s_t, pt.phi, pt.kappa, f, z4, m).total() - reference));
    }
    return out;
}

}  // namespace dirac_sv
