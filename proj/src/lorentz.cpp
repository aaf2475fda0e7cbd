#include "dirac_sv/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dirac_sv {

const char* to_string(TransformKind kind)
{
    switch (kind) {
    case TransformKind::identity: return "identity";
    case TransformKind::boost: return "boost";
    case TransformKind::rotation: return "rotation";
    case TransformKind::space_reflection: return "space-reflection";
    case TransformKind::time_reflection: return "time-reflection";
    case TransformKind::infinitesimal: return "infinitesimal";
    case TransformKind::composite: return "composite";
    }
    return "unknown";
}

RealMatrix LorentzTransform::inverse() const
{
    const RealMatrix g = Metric(dim).matrix();
    return g * matrix.transpose() * g;
}

double LorentzTransform::metric_residual() const
{
    const RealMatrix g = Metric(dim).matrix();
    return (matrix.transpose() * g * matrix - g).cwiseAbs().maxCoeff();
}

LorentzTransform LorentzTransform::then(const LorentzTransform& next) const
{
    LorentzTransform t;
    t.dim = dim;
    t.matrix = next.matrix * matrix;
    t.kind = TransformKind::composite;
    return t;
}

LorentzTransform identity_transform(int dim)
{
    return {dim, RealMatrix::Identity(dim, dim), TransformKind::identity, std::nullopt};
}

LorentzTransform boost_2d(double chi)
{
    if (!std::isfinite(chi)) throw std::invalid_argument("boost_2d: non-finite rapidity");
    RealMatrix m(2, 2);
    m << std::cosh(chi), std::sinh(chi), std::sinh(chi), std::cosh(chi);
    return {2, m, TransformKind::boost, chi};
}

LorentzTransform reflect_space_2d()
{
    RealMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return {2, m, TransformKind::space_reflection, std::nullopt};
}

LorentzTransform reflect_time_2d()
{
    RealMatrix m(2, 2);
    m << -1, 0, 0, 1;
    return {2, m, TransformKind::time_reflection, std::nullopt};
}

namespace {

Vec3 unit(const Vec3& v, const char* what)
{
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument(std::string(what) + ": zero or non-finite direction");
    return v / n;
}

void require_antisymmetric(const RealMatrix& w)
{
    if (w.rows() != w.cols() || (w.rows() != 2 && w.rows() != 4))
        throw std::invalid_argument("generator must be a 2x2 or 4x4 matrix");
    if ((w + w.transpose()).cwiseAbs().maxCoeff() > 1e-15 * std::max(1.0, w.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("generator must be antisymmetric");
}

RealMatrix real_exp(const RealMatrix& m)
{
    return mat_exp(m.cast<cplx>()).real();
}

RealMatrix raise_first(const RealMatrix& omega_lower)
{
    const RealMatrix g = Metric(static_cast<int>(omega_lower.rows())).matrix();
    return g * omega_lower;
}

ComplexMatrix spin_generator(const RealMatrix& omega_lower, const GammaRep& rep)
{
    const int d = rep.dim;
    ComplexMatrix gen = ComplexMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            if (omega_lower(i, k) != 0.0)
                gen += (omega_lower(i, k) / 8.0) * (rep[i] * rep[k] - rep[k] * rep[i]);
    return gen;
}

}  // namespace

RealMatrix boost_generator(int dim, double chi, const Vec3& direction)
{
    RealMatrix w = RealMatrix::Zero(dim, dim);
    if (dim == 2) {
        const double sign = direction[0] < 0.0 ? -1.0 : 1.0;
        w(0, 1) = sign * chi;
        w(1, 0) = -sign * chi;
        return w;
    }
    const Vec3 n = unit(direction, "boost direction");
    // Lambda^0_a = chi n_a at first order; omega_0a = g_00 Lambda^0_a
    for (int a = 0; a < 3; ++a) {
        w(0, a + 1) = chi * n[a];
        w(a + 1, 0) = -chi * n[a];
    }
    return w;
}

RealMatrix rotation_generator(double angle, const Vec3& axis)
{
    const Vec3 n = unit(axis, "rotation axis");
    RealMatrix w = RealMatrix::Zero(4, 4);
    // Lambda^a_b = -angle eps_abc n_c (right-handed rotation of vectors);
    // omega_ab = g_aa Lambda^a_b = angle eps_abc n_c
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                const int idx[3] = {a + 1, b + 1, c + 1};
                const int e = levi_civita(idx);
                if (e != 0) w(a + 1, b + 1) += angle * e * n[c];
            }
    return w;
}

LorentzTransform boost_4d(double chi, const Vec3& direction)
{
    auto t = finite_transform(boost_generator(4, chi, direction));
    t.kind = TransformKind::boost;
    t.rapidity = chi;
    return t;
}

LorentzTransform rotation_4d(double angle, const Vec3& axis)
{
    auto t = finite_transform(rotation_generator(angle, axis));
    t.kind = TransformKind::rotation;
    return t;
}

LorentzTransform finite_transform(const RealMatrix& omega_lower)
{
    require_antisymmetric(omega_lower);
    const int d = static_cast<int>(omega_lower.rows());
    return {d, real_exp(raise_first(omega_lower)), TransformKind::composite, std::nullopt};
}

LorentzTransform infinitesimal_transform(const RealMatrix& delta_omega_lower)
{
    require_antisymmetric(delta_omega_lower);
    const int d = static_cast<int>(delta_omega_lower.rows());
    return {d, RealMatrix::Identity(d, d) + raise_first(delta_omega_lower), TransformKind::infinitesimal,
            std::nullopt};
}

Phased Phased::from_real(double x)
{
    return x < 0.0 ? Phased{-x, std::numbers::pi} : Phased{x, 0.0};
}

LightconeVector LightconeVector::from_components(double w0, double w1)
{
    return {Phased::from_real(w0 + w1), Phased::from_real(w0 - w1)};
}

LightconeVector boost_lightcone(const LightconeVector& w, double chi)
{
    return {w.plus.scaled(std::exp(chi)), w.minus.scaled(std::exp(-chi))};
}

LightconeVector space_reflect_lightcone(const LightconeVector& w)
{
    return {w.minus, w.plus};
}

LightconeVector time_reflect_lightcone(const LightconeVector& w)
{
    return {w.minus.rotated(std::numbers::pi), w.plus.rotated(-std::numbers::pi)};
}

double SpinorRep::conjugation_residual(const GammaRep& rep) const
{
    return max_abs_diff(s.adjoint() * rep[0], rep[0] * s.inverse());
}

SpinorRep spinor_rep_infinitesimal(const RealMatrix& delta_omega_lower, const GammaRep& rep)
{
    require_antisymmetric(delta_omega_lower);
    if (delta_omega_lower.rows() != rep.dim) throw std::invalid_argument("generator dimension mismatch");
    if (delta_omega_lower.cwiseAbs().maxCoeff() > 0.1)
        throw std::invalid_argument("infinitesimal generator entries must not exceed 0.1");
    return {mat_exp(spin_generator(delta_omega_lower, rep)), infinitesimal_transform(delta_omega_lower)};
}

SpinorRep spinor_rep_finite(const RealMatrix& omega_lower, const GammaRep& rep)
{
    require_antisymmetric(omega_lower);
    if (omega_lower.rows() != rep.dim) throw std::invalid_argument("generator dimension mismatch");
    return {mat_exp(spin_generator(omega_lower, rep)), finite_transform(omega_lower)};
}

SpinorRep spinor_rep_finite_boost(double chi, const Vec3& direction, const GammaRep& rep)
{
    auto s = spinor_rep_finite(boost_generator(rep.dim, chi, direction), rep);
    s.transform.kind = TransformKind::boost;
    s.transform.rapidity = chi;
    return s;
}

SpinorRep spinor_rep_finite_rotation(double angle, const Vec3& axis, const GammaRep& rep)
{
    if (rep.dim != 4) throw std::invalid_argument("rotations need the 4-dimensional representation");
    auto s = spinor_rep_finite(rotation_generator(angle, axis), rep);
    s.transform.kind = TransformKind::rotation;
    return s;
}

double check_intertwine(const ComplexMatrix& s, const LorentzTransform& lambda, const GammaRep& rep)
{
    if (s.rows() != rep.spinor_dim() || lambda.dim != rep.dim) throw std::invalid_argument("dimension mismatch");
    const cplx det = s.determinant();
    if (std::abs(det) < 1e-14) throw DomainError("check_intertwine: singular S");
    const ComplexMatrix s_inv = s.inverse();
    double worst = 0.0;
    for (int l = 0; l < rep.dim; ++l) {
        ComplexMatrix rhs = ComplexMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
        for (int k = 0; k < rep.dim; ++k) rhs += lambda.matrix(l, k) * rep[k];
        worst = std::max(worst, max_abs_diff(s_inv * rep[l] * s, rhs));
    }
    return worst;
}

RealVector current(const Spinor& psi, const GammaRep& rep)
{
    RealVector j(rep.dim);
    const auto row = psi.adjoint() * rep[0];
    for (int l = 0; l < rep.dim; ++l) j[l] = (row * rep[l] * psi)(0, 0).real();
    return j;
}

CurrentPair transform_current_two_ways(const Spinor& psi, const SpinorRep& rep_s, const GammaRep& rep)
{
    const RealMatrix& lam = rep_s.transform.matrix;
    const int d = rep.dim;
    CurrentPair out;
    out.way_vector_gamma.resize(d);
    out.way_spinor.resize(d);

    const auto psibar = psi.adjoint() * rep[0];
    for (int l = 0; l < d; ++l) {
        ComplexMatrix g_t = ComplexMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
        for (int s = 0; s < d; ++s) g_t += lam(l, s) * rep[s];
        out.way_vector_gamma[l] = (psibar * g_t * psi)(0, 0).real();
    }

    // psi~ = S psi with psibar~ = psi~^dagger gamma^0, which equals psibar S^{-1}
    // exactly when S^dagger gamma^0 = gamma^0 S^{-1}
    const Spinor psi_t = rep_s.s * psi;
    const auto psibar_t = psi_t.adjoint() * rep[0];
    for (int l = 0; l < d; ++l) out.way_spinor[l] = (psibar_t * rep[l] * psi_t)(0, 0).real();

    out.direct = lam * current(psi, rep);
    return out;
}

}  // namespace dirac_sv
