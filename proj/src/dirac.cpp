#include "dirac_sv/dirac.hpp"

namespace dirac_sv {

cplx dirac_density(const Spinor& psi, const std::array<Spinor, 4>& dpsi, const GammaRep& rep, double m)
{
    cplx out = -m * (psi.adjoint() * rep[0] * psi)(0, 0);
    for (int l = 0; l < rep.dim; ++l) {
        const cplx forward = (psi.adjoint() * rep[0] * rep[l] * dpsi[l])(0, 0);
        const cplx backward = (dpsi[l].adjoint() * rep[0] * rep[l] * psi)(0, 0);
        out += 0.5 * kI * (forward - backward);
    }
    return out;
}

}  // namespace dirac_sv
