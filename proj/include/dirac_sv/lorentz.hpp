#pragma once

// Lorentz transformations in their vector, lightcone and spinor
// representations, and the two ways of carrying a transformation through
// the bilinear current: transforming gamma as a vector with psi fixed, or
// keeping gamma fixed and transforming psi with S.

#include "dirac_sv/algebra.hpp"

#include <optional>
#include <utility>

namespace dirac_sv {

enum class TransformKind { identity, boost, rotation, space_reflection, time_reflection, infinitesimal, composite };

const char* to_string(TransformKind kind);

struct LorentzTransform {
    int dim = 0;
    RealMatrix matrix;  // Lambda^i_k = d x~^i / d x^k
    TransformKind kind = TransformKind::identity;
    std::optional<double> rapidity;

    /// g Lambda^T g, the inverse of a Lorentz matrix.
    RealMatrix inverse() const;
    RealVector apply(const RealVector& v) const { return matrix * v; }
    /// Covariant components: c~ = Lambda^{-T} c.
    RealVector apply_covector(const RealVector& c) const { return inverse().transpose() * c; }
    /// max |Lambda^T g Lambda - g|
    double metric_residual() const;
    LorentzTransform then(const LorentzTransform& next) const;
};

LorentzTransform identity_transform(int dim);
LorentzTransform boost_2d(double chi);
LorentzTransform reflect_space_2d();
LorentzTransform reflect_time_2d();
LorentzTransform boost_4d(double chi, const Vec3& direction);
LorentzTransform rotation_4d(double angle, const Vec3& axis);
/// Lambda = exp(g^{-1} omega) for an antisymmetric generator with lower indices.
LorentzTransform finite_transform(const RealMatrix& omega_lower);
/// Lambda = I + g^{-1} delta_omega, the first-order transform x -> x + delta_omega x.
LorentzTransform infinitesimal_transform(const RealMatrix& delta_omega_lower);

/// A complex number held in polar form so that square roots follow the
/// tracked phase instead of a branch cut.
struct Phased {
    double modulus = 0.0;
    double phase = 0.0;

    static Phased from_real(double x);
    cplx value() const { return std::polar(modulus, phase); }
    Phased sqrt() const { return {std::sqrt(modulus), 0.5 * phase}; }
    Phased rotated(double extra_phase) const { return {modulus, phase + extra_phase}; }
    Phased scaled(double factor) const { return {modulus * factor, phase}; }
};

/// Lightcone components w+ = w0 + w1, w- = w0 - w1 of a 2-vector.
struct LightconeVector {
    Phased plus;
    Phased minus;

    static LightconeVector from_components(double w0, double w1);
    cplx w0() const { return 0.5 * (plus.value() + minus.value()); }
    cplx w1() const { return 0.5 * (plus.value() - minus.value()); }
};

// Lightcone actions of the three basic 2D transformations on contravariant
// components: boost scales by e^{+-chi}, space reflection swaps, time
// reflection swaps and attaches the phases e^{+i pi} and e^{-i pi}.
LightconeVector boost_lightcone(const LightconeVector& w, double chi);
LightconeVector space_reflect_lightcone(const LightconeVector& w);
LightconeVector time_reflect_lightcone(const LightconeVector& w);

struct SpinorRep {
    ComplexMatrix s;
    LorentzTransform transform;

    /// max |S^dagger gamma^0 - gamma^0 S^{-1}|
    double conjugation_residual(const GammaRep& rep) const;
};

/// S = exp(delta_omega_ik / 8 (gamma^i gamma^k - gamma^k gamma^i)), paired
/// with the first-order vector transform. Requires an antisymmetric input
/// with entries no larger than 0.1.
SpinorRep spinor_rep_infinitesimal(const RealMatrix& delta_omega_lower, const GammaRep& rep);

/// Same generator exponentiated at finite size, paired with the exact
/// Lambda = exp(g^{-1} omega).
SpinorRep spinor_rep_finite(const RealMatrix& omega_lower, const GammaRep& rep);

/// Finite boost of rapidity chi along a spatial direction (2D: ignored beyond
/// its sign along x^1). Intertwines with boost_2d / boost_4d of the same chi.
SpinorRep spinor_rep_finite_boost(double chi, const Vec3& direction, const GammaRep& rep);
SpinorRep spinor_rep_finite_rotation(double angle, const Vec3& axis, const GammaRep& rep);

/// Generator matrix omega_ik of a boost/rotation with lower indices.
RealMatrix boost_generator(int dim, double chi, const Vec3& direction);
RealMatrix rotation_generator(double angle, const Vec3& axis);

/// max over l and matrix entries of |S^{-1} gamma^l S - Lambda^l_s gamma^s|.
/// Throws DomainError for a singular S.
double check_intertwine(const ComplexMatrix& s, const LorentzTransform& lambda, const GammaRep& rep);

struct CurrentPair {
    RealVector way_vector_gamma;  // psi fixed, gamma~ = Lambda gamma
    RealVector way_spinor;        // gamma fixed, psi~ = S psi
    RealVector direct;            // Lambda j
};

/// Current j^l = psibar gamma^l psi transformed both ways.
CurrentPair transform_current_two_ways(const Spinor& psi, const SpinorRep& rep_s, const GammaRep& rep);

RealVector current(const Spinor& psi, const GammaRep& rep);
inline Spinor bar(const Spinor& psi, const GammaRep& rep) { return (psi.adjoint() * rep[0]).transpose(); }

}  // namespace dirac_sv
