#pragma once

// Charged particle in a given electromagnetic field: the nonrelativistic
// equations of motion, their covariant rewrite with a constant unit
// timelike covector l_k, and a classical RK4 integrator.
//
// The covariant equation is implicit in the second derivative; it is solved
// together with the gauge l_k xdot^k = 1 (so tau = t when l = {1,0,0,0}).

#include "dirac_sv/algebra.hpp"
#include "dirac_sv/lorentz.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dirac_sv {

/// Contravariant field tensor F^{ik} as a function of the event x.
using TensorField = std::function<RealMatrix(const RealVector&)>;

struct EMField {
    std::string name;
    std::function<Vec3(const RealVector&)> electric;
    std::function<Vec3(const RealVector&)> magnetic;
    /// Static scalar potential with E = -grad phi, when one exists.
    std::function<double(const RealVector&)> potential;

    /// F^{a0} = E^a, F^{ab} = -eps^{abc} B_c
    RealMatrix tensor(const RealVector& x) const;
    TensorField as_tensor() const;
};

EMField field_zero();
EMField field_constant(const Vec3& e, const Vec3& b, std::string name);
/// E = -k (x^1, x^2, 0): a static harmonic trap in the transverse plane,
/// plus a constant B.
EMField field_harmonic(double k, const Vec3& b);

/// F~(x~) = Lambda F(Lambda^{-1} x~) Lambda^T
TensorField transform_field(const TensorField& f, const LorentzTransform& lambda);

struct ParticleParams {
    double mass = 1.0;
    double charge = 1.0;
};

struct ParticleState {
    double tau = 0.0;
    RealVector x = RealVector::Zero(4);
    RealVector xdot = RealVector::Zero(4);
};

struct Trajectory {
    std::vector<ParticleState> samples;
    bool aborted = false;
    std::string reason;
};

/// a^a = (e/m)(F^a_0 + F^a_b v^b) at the event x = (t, position).
Vec3 rhs_noncovariant(const RealVector& x, const Vec3& v, const RealMatrix& f, const ParticleParams& p);
/// m v.a - e F^a_0 v^a (zero along exact solutions)
double energy_identity_residual(const RealVector& x, const Vec3& v, const RealMatrix& f, const ParticleParams& p);

/// xddot solving d/dtau P(xdot) = (e/m) F g xdot together with l.xddot = 0,
/// with P^i = xdot^i / (l.xdot) - (1/2) l^i (xdot.xdot) / (l.xdot)^2.
/// Throws DomainError when l.xdot vanishes.
RealVector rhs_covariant(const RealVector& x, const RealVector& xdot, const RealMatrix& f, const RealVector& l_lower,
                         const ParticleParams& p);
/// The bracket P^i itself.
RealVector covariant_momentum(const RealVector& xdot, const RealVector& l_lower);

/// dy/dtau for y = (x, xdot); both 4-vectors.
using SecondOrderRhs = std::function<RealVector(const RealVector& x, const RealVector& xdot)>;

/// Classical RK4 over [tau0, tau0 + span] with a fixed step. A DomainError
/// raised by the right-hand side stops the run and keeps the samples so far.
Trajectory integrate(const SecondOrderRhs& rhs, const ParticleState& initial, double span, double step);

Trajectory integrate_noncovariant(const TensorField& f, const ParticleParams& p, const RealVector& x0, const Vec3& v0,
                                  double span, double step);
Trajectory integrate_covariant(const TensorField& f, const RealVector& l_lower, const ParticleParams& p,
                               const RealVector& x0, const RealVector& xdot0, double span, double step);

/// max over common samples of |x_a - x_b| (all four components)
double trajectory_distance(const Trajectory& a, const Trajectory& b);
/// Trajectory with every event and velocity mapped by a linear map.
Trajectory map_trajectory(const Trajectory& t, const RealMatrix& m);
/// Spatial position at coordinate time t, by cubic Hermite interpolation
/// in the samples (needs x^0 increasing). Returns false outside the range.
bool position_at_time(const Trajectory& t, double time, Vec3& out);

/// Plain-text rows "tau x0 x1 x2 x3".
void dump_trajectory(const Trajectory& t, std::ostream& out);

}  // namespace dirac_sv
