#include "dirac_sv/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace dirac_sv {

Metric::Metric(int dim) : dim_(dim)
{
    if (dim != 2 && dim != 4) throw std::invalid_argument("metric dimension must be 2 or 4");
    diag_ = {1.0, -1.0, -1.0, -1.0};
}

RealMatrix Metric::matrix() const
{
    RealMatrix g = RealMatrix::Zero(dim_, dim_);
    for (int i = 0; i < dim_; ++i) g(i, i) = diag_[i];
    return g;
}

double Metric::dot(const RealVector& a, const RealVector& b) const
{
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += diag_[i] * a[i] * b[i];
    return s;
}

RealVector Metric::lower(const RealVector& a) const
{
    RealVector r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = diag_[i] * a[i];
    return r;
}

namespace {

ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d)
{
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

ComplexMatrix block4(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                     const ComplexMatrix& d)
{
    ComplexMatrix m(4, 4);
    m.topLeftCorner(2, 2) = a;
    m.topRightCorner(2, 2) = b;
    m.bottomLeftCorner(2, 2) = c;
    m.bottomRightCorner(2, 2) = d;
    return m;
}

}  // namespace

std::array<ComplexMatrix, 3> pauli_matrices()
{
    return {mat2(0, 1, 1, 0), mat2(0, -kI, kI, 0), mat2(1, 0, 0, -1)};
}

GammaRep make_gamma_2d()
{
    GammaRep rep;
    rep.dim = 2;
    rep.metric = Metric(2);
    rep.gammas[0] = mat2(0, 1, 1, 0);
    rep.gammas[1] = mat2(0, 1, -1, 0);
    return rep;
}

GammaRep make_gamma_4d()
{
    GammaRep rep;
    rep.dim = 4;
    rep.metric = Metric(4);
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
    rep.gammas[0] = block4(id, zero, zero, -id);
    const auto s = pauli_matrices();
    for (int a = 0; a < 3; ++a) rep.gammas[a + 1] = block4(zero, s[a], -s[a], zero);
    return rep;
}

double anticommutator_residual(const GammaRep& rep)
{
    double worst = 0.0;
    const ComplexMatrix id = rep.identity();
    for (int l = 0; l < rep.dim; ++l) {
        for (int k = l; k < rep.dim; ++k) {
            const ComplexMatrix ac = rep[l] * rep[k] + rep[k] * rep[l];
            worst = std::max(worst, max_abs_diff(ac, 2.0 * rep.metric(k, l) * id));
        }
    }
    return worst;
}

ComplexMatrix gamma5(const GammaRep& rep)
{
    if (rep.dim != 4) throw std::invalid_argument("gamma5 requires the 4-dimensional representation");
    return rep[0] * rep[1] * rep[2] * rep[3];
}

std::array<ComplexMatrix, 3> sigma_matrices(const GammaRep& rep)
{
    if (rep.dim != 4) throw std::invalid_argument("sigma matrices require the 4-dimensional representation");
    return {-kI * rep[2] * rep[3], -kI * rep[3] * rep[1], -kI * rep[1] * rep[2]};
}

ComplexMatrix sigma_dot(const std::array<ComplexMatrix, 3>& sigma, const Vec3& n)
{
    return n[0] * sigma[0] + n[1] * sigma[1] + n[2] * sigma[2];
}

ComplexMatrix projector_pi_2d()
{
    const GammaRep rep = make_gamma_2d();
    return 0.5 * (rep.identity() + rep[0]);
}

ComplexMatrix projector_pi_4d(const GammaRep& rep, const Vec3& z)
{
    if (std::abs(z.squaredNorm() - 1.0) > 1e-12) throw DomainError("projector direction z must be a unit vector");
    const ComplexMatrix id = rep.identity();
    return 0.25 * (id + rep[0]) * (id + sigma_dot(sigma_matrices(rep), z));
}

ComplexMatrix mat_exp(const ComplexMatrix& m)
{
    if (!m.allFinite()) throw std::invalid_argument("mat_exp: non-finite input");
    const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
    if (norm > 700.0) throw std::overflow_error("mat_exp: norm too large");

    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const ComplexMatrix a = m / std::ldexp(1.0, squarings);

    const auto n = m.rows();
    ComplexMatrix result = ComplexMatrix::Identity(n, n);
    ComplexMatrix term = ComplexMatrix::Identity(n, n);
    // |a| <= 1/2, so 20 terms leave a remainder below 2^-21 / 21!
    for (int k = 1; k <= 20; ++k) {
        term = term * a / static_cast<double>(k);
        result += term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    if (!result.allFinite()) throw std::overflow_error("mat_exp: overflow");
    return result;
}

int levi_civita(std::span<const int> indices)
{
    const auto n = indices.size();
    if (n < 2 || n > 4) throw std::invalid_argument("levi_civita: rank must be 2, 3 or 4");
    // rank 3 is indexed 1..3, ranks 2 and 4 are indexed from 0
    const int base = n == 3 ? 1 : 0;
    std::array<int, 4> p{};
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = indices[i] - base;
        if (p[i] < 0 || p[i] >= static_cast<int>(n)) return 0;
    }
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) sign = -sign;
        }
    }
    return sign;
}

double max_abs(const ComplexMatrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return max_abs(a - b);
}

}  // namespace dirac_sv
