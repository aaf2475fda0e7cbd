#pragma once

// Small complex matrices and the concrete Clifford-algebra representations
// used throughout: the 2x2 representation with diagonal gamma^0 gamma^1 and
// the 4x4 Dirac (standard) representation.
//
// Conventions
//   metric            g = diag(1, -1) or diag(1, -1, -1, -1)
//   gamma5            gamma^0 gamma^1 gamma^2 gamma^3 (no factor i, so gamma5^2 = -1)
//   sigma_alpha       {-i g2 g3, -i g3 g1, -i g1 g2}
//   Levi-Civita       eps_{0123} = +1 (lower indices), eps_{123} = +1, eps_{01} = +1

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>

namespace dirac_sv {

using cplx = std::complex<double>;
inline constexpr cplx kI{0.0, 1.0};

using ComplexMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;
using Spinor = Eigen::Matrix<cplx, Eigen::Dynamic, 1, 0, 4, 1>;
using RealMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;
using RealVector = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 4, 1>;
using Vec3 = Eigen::Vector3d;

/// Raised when an input lies on a singular set of a change of variables
/// (lightlike current, vanishing denominators, non-unit direction, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Metric {
public:
    explicit Metric(int dim);

    int dim() const { return dim_; }
    double operator()(int i, int k) const { return i == k ? diag_[i] : 0.0; }
    double diag(int i) const { return diag_[i]; }
    RealMatrix matrix() const;
    double dot(const RealVector& a, const RealVector& b) const;
    RealVector lower(const RealVector& a) const;

private:
    int dim_;
    std::array<double, 4> diag_{};
};

struct GammaRep {
    int dim = 0;
    std::array<ComplexMatrix, 4> gammas;
    Metric metric{2};

    const ComplexMatrix& operator[](int l) const { return gammas[l]; }
    int spinor_dim() const { return static_cast<int>(gammas[0].rows()); }
    ComplexMatrix identity() const { return ComplexMatrix::Identity(spinor_dim(), spinor_dim()); }
};

GammaRep make_gamma_2d();
GammaRep make_gamma_4d();

/// Largest entrywise deviation of gamma^l gamma^k + gamma^k gamma^l from 2 g^{kl} I.
double anticommutator_residual(const GammaRep& rep);

ComplexMatrix gamma5(const GammaRep& rep);
std::array<ComplexMatrix, 3> sigma_matrices(const GammaRep& rep);
std::array<ComplexMatrix, 3> pauli_matrices();

/// sigma . n for any triple of matrices.
ComplexMatrix sigma_dot(const std::array<ComplexMatrix, 3>& sigma, const Vec3& n);

ComplexMatrix projector_pi_2d();
ComplexMatrix projector_pi_4d(const GammaRep& rep, const Vec3& z);

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
/// Throws std::overflow_error when the result cannot be represented.
ComplexMatrix mat_exp(const ComplexMatrix& m);

/// Totally antisymmetric symbol of rank 2, 3 or 4 (0 on repeated indices).
int levi_civita(std::span<const int> indices);

inline ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }
double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace dirac_sv
