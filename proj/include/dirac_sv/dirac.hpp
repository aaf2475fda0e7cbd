#pragma once

// Pieces shared by the 1+1D and 3+1D programs: the Dirac Lagrangian density
// at a point from a spinor and its coordinate derivatives, and a
// complex-valued jet pair for building spinor jets component by component.

#include "dirac_sv/algebra.hpp"
#include "dirac_sv/jet.hpp"

#include <array>

namespace dirac_sv {

/// Lagrangian density differences between a frame and its transform:
/// `transformed` moves f (and z) with the transformation, `fixed` keeps them.
struct CovarianceProbe {
    double transformed = 0.0;
    double fixed = 0.0;
};

/// -m psibar psi + (i/2) psibar gamma^l d_l psi - (i/2) (d_l psibar) gamma^l psi
/// with hbar = 1. dpsi[l] = d psi / d x^l for l < rep.dim.
cplx dirac_density(const Spinor& psi, const std::array<Spinor, 4>& dpsi, const GammaRep& rep, double m);

/// psibar M psi and its derivatives, given psi and d psi.
template <int N>
Jet<N> bilinear_jet(const Spinor& psi, const std::array<Spinor, 4>& dpsi, const ComplexMatrix& m, const GammaRep& rep)
{
    const ComplexMatrix b = rep[0] * m;  // psi^dagger (gamma^0 M) psi
    Jet<N> out(std::real(psi.dot(b * psi)));
    for (int a = 0; a < N; ++a) out.d[a] = std::real(dpsi[a].dot(b * psi) + psi.dot(b * dpsi[a]));
    return out;
}

/// Complex number with jet real and imaginary parts.
template <int N>
struct CJet {
    Jet<N> re;
    Jet<N> im;
};

template <int N> CJet<N> operator*(const CJet<N>& a, const CJet<N>& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <int N> CJet<N> operator*(const Jet<N>& s, const CJet<N>& a) { return {s * a.re, s * a.im}; }
template <int N> CJet<N> expi(const Jet<N>& phase) { return {cos(phase), sin(phase)}; }

template <int N>
cplx value_of(const CJet<N>& z)
{
    return {z.re.v, z.im.v};
}
template <int N>
cplx derivative_of(const CJet<N>& z, int axis)
{
    return {z.re.d[axis], z.im.d[axis]};
}

}  // namespace dirac_sv
