#pragma once

// Complex fields sampled on uniform periodic space-time grids (1+1D and
// 3+1D), with two derivative paths: exact differentiation of an attached
// plane-wave descriptor, and second-order central differences.

#include "dirac_sv/algebra.hpp"
#include "dirac_sv/jet.hpp"
#include "dirac_sv/random.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace dirac_sv {

/// Row-major periodic grid; axis 0 is time and varies slowest.
struct Grid {
    int dim = 2;
    std::array<int, 4> n{1, 1, 1, 1};
    std::array<double, 4> h{1.0, 1.0, 1.0, 1.0};

    static Grid uniform(int dim, int points, double spacing);
    /// Grid whose axis extents are given, with `points` samples per axis.
    static Grid with_extents(int dim, int points, const std::array<double, 4>& extents);

    std::size_t size() const;
    std::size_t stride(int axis) const;
    double extent(int axis) const { return n[axis] * h[axis]; }
    std::array<int, 4> unravel(std::size_t p) const;
    RealVector coordinates(std::size_t p) const;
    double cell_volume() const;
    /// Throws std::invalid_argument unless every axis has n >= 8 and h > 0.
    void validate() const;
};

/// a_c exp(-i k_l x^l) per component, with a shared wave covector k_l.
struct PlaneWave {
    RealVector k;
    std::vector<cplx> amplitudes;

    cplx phase_at(const RealVector& x) const;
    /// k_l k^l with signature (+,-,-,-)
    double k_squared() const;
    bool satisfies_kg(double lambda, double tol = 1e-14) const;
};

/// Plane wave with k_l = 2 pi m_l / L_l on the grid (so it is periodic) and
/// the lambda that puts it on the Klein-Gordon shell k.k = 1/lambda^2.
struct PeriodicKgWave {
    PlaneWave wave;
    double lambda = 0.0;
};
PeriodicKgWave periodic_kg_wave(const Grid& grid, const std::array<int, 4>& modes, cplx amplitude);

/// Plane wave on the KG shell for a given lambda and spatial covector.
PlaneWave kg_plane_wave(double lambda, const RealVector& spatial_k, cplx amplitude);

enum class Derivative { automatic, analytic, finite_difference };

class Field {
public:
    Field(const Grid& grid, int components);
    static Field sample(const Grid& grid, const PlaneWave& wave);
    static Field stack(std::span<const Field> parts);

    const Grid& grid() const { return grid_; }
    int components() const { return components_; }
    std::size_t points() const { return grid_.size(); }

    cplx& at(int c, std::size_t p) { return data_[c * points() + p]; }
    cplx at(int c, std::size_t p) const { return data_[c * points() + p]; }
    std::span<cplx> component(int c) { return {data_.data() + c * points(), points()}; }
    std::span<const cplx> component(int c) const { return {data_.data() + c * points(), points()}; }
    Field component_field(int c) const;

    const std::optional<PlaneWave>& wave() const { return wave_; }
    void set_wave(std::optional<PlaneWave> w) { wave_ = std::move(w); }
    void drop_wave() { wave_.reset(); }

    /// y += alpha x, elementwise on all components. The plane-wave
    /// descriptor survives only when both operands carry the same k.
    Field& add_scaled(cplx alpha, const Field& x);
    Field scaled(cplx alpha) const;

    double max_abs() const;
    /// max |sample - descriptor| (0 without a descriptor)
    double descriptor_mismatch() const;

private:
    Grid grid_;
    int components_;
    std::vector<cplx> data_;
    std::optional<PlaneWave> wave_;
};

double max_abs_diff(const Field& a, const Field& b);

/// out_r = sum_c m(r, c) f_c, keeping a plane-wave descriptor.
Field mix_components(const ComplexMatrix& m, const Field& f);

Field partial(const Field& f, int axis, Derivative mode = Derivative::automatic);
/// d_0 + sign d_1 on a 2D field
Field partial_lightcone(const Field& f, int sign, Derivative mode = Derivative::automatic);

/// max over the grid of |lambda^2 d_l d^l psi + psi| for a one-component field
double kg_residual(const Field& psi, double lambda, Derivative mode = Derivative::automatic);

/// One line per grid point: "i0 i1 [i2 i3] re im ..." (all components).
void dump_field(const Field& f, std::ostream& out);

double grid_sum(std::span<const double> values);

/// Smooth periodic scalar field: offset + sum_k a_k cos(2 pi m_k . x / L + theta_k).
struct TrigMode {
    std::array<int, 4> m{};
    double amplitude = 0.0;
    double phase = 0.0;
};

class TrigField {
public:
    TrigField() = default;
    TrigField(int dim, const std::array<double, 4>& extents, double offset, std::vector<TrigMode> modes);

    /// Random field with `count` modes of wavenumber |m_a| <= max_mode and
    /// total amplitude at most `amplitude` around `offset`.
    static TrigField random(Rng& rng, const Grid& grid, double offset, double amplitude, int count, int max_mode);
    static TrigField constant(const Grid& grid, double value);

    double eval(const RealVector& x) const;

    template <int N>
    Jet<N> eval(const std::array<Jet<N>, 4>& x) const
    {
        Jet<N> out(offset_);
        for (const auto& mode : modes_) {
            Jet<N> arg(mode.phase);
            for (int a = 0; a < dim_; ++a)
                if (mode.m[a] != 0) arg += x[a] * wavenumber(mode, a);
            out += mode.amplitude * cos(arg);
        }
        return out;
    }

    double offset() const { return offset_; }
    double max_deviation() const;

private:
    double wavenumber(const TrigMode& mode, int axis) const;

    int dim_ = 2;
    std::array<double, 4> extents_{1, 1, 1, 1};
    double offset_ = 0.0;
    std::vector<TrigMode> modes_;
};

/// Coordinates of grid point p as seeded jets (d x^a / d x^b = delta).
template <int N>
std::array<Jet<N>, 4> coordinate_jets(const Grid& grid, std::size_t p)
{
    const RealVector x = grid.coordinates(p);
    std::array<Jet<N>, 4> out{};
    for (int a = 0; a < N; ++a) out[a] = Jet<N>::variable(x[a], a);
    return out;
}

/// Coordinates x = Lambda^{-1} x~ as jets in the transformed coordinates x~.
template <int N>
std::array<Jet<N>, 4> pulled_back_jets(const RealMatrix& inverse, const RealVector& x_tilde)
{
    std::array<Jet<N>, 4> out{};
    for (int a = 0; a < N; ++a) {
        Jet<N> v(0.0);
        for (int b = 0; b < N; ++b) v += Jet<N>::variable(x_tilde[b], b) * inverse(a, b);
        out[a] = v;
    }
    return out;
}

}  // namespace dirac_sv
