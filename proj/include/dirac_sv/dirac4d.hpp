#pragma once

// The 3+1D program: bilinears j^l and S^l, the eight-parameter form of the
// wave function, the parameter <-> observable maps, the auxiliary vectors
// f, z, nu, mu, q and the scalar-vector Lagrangian against the Dirac one.
//
// Vectors are contravariant 4-component RealVectors, Minkowski products use
// (+,-,-,-) and eps_{0123} = +1.

#include "dirac_sv/algebra.hpp"
#include "dirac_sv/dirac.hpp"
#include "dirac_sv/fields.hpp"
#include "dirac_sv/lorentz.hpp"

#include <vector>

namespace dirac_sv {

struct Params4D {
    double amplitude = 0.0;
    double kappa = 0.0;
    double phi = 0.0;
    Vec3 eta = Vec3::Zero();
    Vec3 n{0.0, 0.0, 1.0};
    Vec3 z{0.0, 0.0, 1.0};
};

struct Observables4D {
    RealVector j = RealVector::Zero(4);
    RealVector s = RealVector::Zero(4);

    double rho() const;
};

struct AEta {
    double amplitude = 0.0;
    Vec3 eta = Vec3::Zero();
};

struct AuxVectors {
    RealVector f;
    RealVector z;
    RealVector nu;
    RealVector mu;
    RealVector q;
};

double minkowski(const RealVector& a, const RealVector& b);

Observables4D observables_4d(const Spinor& psi);

/// Unit column spanning the range of Pi(z), phased so that i (sigma z)
/// applied to it has a real positive first nonzero component.
Spinor reference_column(const Vec3& z);

/// A e^{i phi + gamma5 kappa / 2} e^{-(i/2) gamma5 sigma.eta} e^{(i pi / 2) sigma.n}
/// applied to reference_column(z), evaluated with mat_exp.
Spinor psi_from_params_4d(const Params4D& p);
/// The same product from the closed forms of the three exponentials.
Spinor psi_from_params_4d_closed(const Params4D& p);
/// Row A col^dagger Pi e^{-(i pi/2) sigma.n} e^{-(i/2) gamma5 sigma.eta} e^{-i phi - gamma5 kappa / 2}:
/// the mirrored product, to be compared with psi^dagger.
Eigen::Matrix<cplx, 1, Eigen::Dynamic, Eigen::RowMajor, 1, 4> conjugate_from_params_4d(const Params4D& p);

/// A = (j.j)^{1/4}, |eta| = arsinh(|j_vec| / sqrt(j.j)), eta parallel to j_vec.
AEta aeta_from_j(const RealVector& j);
/// j^0 = A^2 cosh|eta|, j^a = A^2 v^a sinh|eta|
RealVector j_from_aeta(const AEta& p);

/// xi^a = (S^a - j^a S^0 / (j^0 + rho)) / rho
Vec3 xi_from_s(const RealVector& j, const RealVector& s);
/// S^0 = j.xi, S^a = rho xi^a + (j.xi) j^a / (rho + j^0)
RealVector s_from_xi(const RealVector& j, const Vec3& xi);

AuxVectors aux_vectors(const RealVector& j, const Vec3& xi, const Vec3& z);

// ---- Smooth configurations and Lagrangians -------------------------------

template <int N>
struct ParamPoint4D {
    Jet<N> amplitude;
    Jet<N> kappa;
    Jet<N> phi;
    std::array<Jet<N>, 3> eta;
    std::array<Jet<N>, 3> n;
};

struct FieldConfig4D {
    TrigField amplitude;
    TrigField kappa;
    TrigField phase;
    std::array<TrigField, 3> eta;
    std::array<TrigField, 3> direction;

    /// Random configuration with n concentrated around z, so that
    /// 1 + xi.z stays above `margin` at every grid point.
    static FieldConfig4D random(Rng& rng, const Grid& grid, const Vec3& z, double margin = 0.1);
    static FieldConfig4D constant(const Grid& grid, const Params4D& p);

    Params4D params_at(const RealVector& x, const Vec3& z) const;

    template <int N>
    ParamPoint4D<N> at(const std::array<Jet<N>, 4>& x) const
    {
        ParamPoint4D<N> out;
        out.amplitude = amplitude.eval(x);
        out.kappa = kappa.eval(x);
        out.phi = phase.eval(x);
        std::array<Jet<N>, 3> raw;
        for (int a = 0; a < 3; ++a) {
            out.eta[a] = eta[a].eval(x);
            raw[a] = direction[a].eval(x);
        }
        const Jet<N> norm = sqrt(raw[0] * raw[0] + raw[1] * raw[1] + raw[2] * raw[2]);
        for (int a = 0; a < 3; ++a) out.n[a] = raw[a] / norm;
        return out;
    }

    /// min over the grid of min(rho, 1 + xi.z) for the wave function built with z.
    double margin(const Grid& grid, const Vec3& z) const;
};

/// psi and d psi / d x^a at a point, from the closed-form product.
std::pair<Spinor, std::array<Spinor, 4>> psi_jet_4d(const ParamPoint4D<4>& p, const Spinor& column);

struct SvTerms {
    double classical = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
    /// classical term with a + sign on the eps-contraction
    double classical_plus = 0.0;

    double total() const { return classical + q1 + q2; }
    double total_plus() const { return classical_plus + q1 + q2; }
};

/// Scalar-vector density from jets of j, S, phi, kappa with explicit f and
/// z (contravariant 4-vectors). xi is taken orthogonal to f and S is rebuilt
/// from xi before entering the kappa term.
SvTerms sv_density(const std::array<Jet<4>, 4>& j, const std::array<Jet<4>, 4>& s, const Jet<4>& phi,
                   const Jet<4>& kappa, const RealVector& f, const RealVector& z, double m);

/// Dirac density from a sampled 4-spinor field.
std::vector<cplx> lagrangian_dirac_4d(const Field& psi, double m, Derivative mode = Derivative::automatic);

/// Pointwise densities of the configuration on the grid, the wave function
/// built with z_build and the scalar-vector form evaluated with z_eval.
struct Densities4D {
    std::vector<cplx> dirac;
    std::vector<SvTerms> sv;
};
Densities4D lagrangians_4d(const FieldConfig4D& config, const Grid& grid, const Vec3& z_build, const Vec3& z_eval,
                           double m);

struct ActionComparison4D {
    double dirac_action = 0.0;
    double sv_action = 0.0;
    double sv_action_plus = 0.0;
    double pointwise_max = 0.0;  // max |L_D - L_sv| over the grid
    double imag_max = 0.0;       // max |Im L_D|
    double relative() const;
    double relative_plus() const;
};
ActionComparison4D compare_actions_4d(const Densities4D& d, const Grid& grid);

/// As covariance_probe_2d: at x~ = Lambda x_p, j and S transform as vectors,
/// phi and kappa as scalars; f and z either transform or stay fixed.
CovarianceProbe covariance_probe_4d(const LorentzTransform& lambda, const FieldConfig4D& config, const Grid& grid,
                                    const Vec3& z, double m);

}  // namespace dirac_sv
