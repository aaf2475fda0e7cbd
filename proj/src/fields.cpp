#include "dirac_sv/fields.hpp"

#include "dirac_sv/kernels.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dirac_sv {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double minkowski_square(const RealVector& k)
{
    double s = k[0] * k[0];
    for (Eigen::Index a = 1; a < k.size(); ++a) s -= k[a] * k[a];
    return s;
}

bool same_wave_vector(const PlaneWave& a, const PlaneWave& b)
{
    return a.k.size() == b.k.size() && (a.k - b.k).cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace

Grid Grid::uniform(int dim, int points, double spacing)
{
    if (dim != 2 && dim != 4) throw std::invalid_argument("grid dimension must be 2 or 4");
    Grid g;
    g.dim = dim;
    for (int a = 0; a < dim; ++a) {
        g.n[a] = points;
        g.h[a] = spacing;
    }
    g.validate();
    return g;
}

Grid Grid::with_extents(int dim, int points, const std::array<double, 4>& extents)
{
    if (dim != 2 && dim != 4) throw std::invalid_argument("grid dimension must be 2 or 4");
    Grid g;
    g.dim = dim;
    for (int a = 0; a < dim; ++a) {
        g.n[a] = points;
        g.h[a] = extents[a] / points;
    }
    g.validate();
    return g;
}

std::size_t Grid::size() const
{
    std::size_t s = 1;
    for (int a = 0; a < dim; ++a) s *= static_cast<std::size_t>(n[a]);
    return s;
}

std::size_t Grid::stride(int axis) const
{
    std::size_t s = 1;
    for (int a = dim - 1; a > axis; --a) s *= static_cast<std::size_t>(n[a]);
    return s;
}

std::array<int, 4> Grid::unravel(std::size_t p) const
{
    std::array<int, 4> idx{};
    for (int a = dim - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(p % n[a]);
        p /= n[a];
    }
    return idx;
}

RealVector Grid::coordinates(std::size_t p) const
{
    const auto idx = unravel(p);
    RealVector x(dim);
    for (int a = 0; a < dim; ++a) x[a] = idx[a] * h[a];
    return x;
}

double Grid::cell_volume() const
{
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= h[a];
    return v;
}

void Grid::validate() const
{
    for (int a = 0; a < dim; ++a) {
        if (n[a] < 8) throw std::invalid_argument(fmt::format("grid axis {} has {} points, need at least 8", a, n[a]));
        if (!(h[a] > 0.0) || !std::isfinite(h[a]))
            throw std::invalid_argument(fmt::format("grid axis {} has non-positive spacing", a));
    }
}

cplx PlaneWave::phase_at(const RealVector& x) const
{
    return std::exp(-kI * k.dot(x));
}

double PlaneWave::k_squared() const { return minkowski_square(k); }

bool PlaneWave::satisfies_kg(double lambda, double tol) const
{
    return std::abs(lambda * lambda * k_squared() - 1.0) <= tol;
}

PeriodicKgWave periodic_kg_wave(const Grid& grid, const std::array<int, 4>& modes, cplx amplitude)
{
    PeriodicKgWave out;
    out.wave.k = RealVector(grid.dim);
    for (int a = 0; a < grid.dim; ++a) out.wave.k[a] = kTwoPi * modes[a] / grid.extent(a);
    const double kk = minkowski_square(out.wave.k);
    if (!(kk > 0.0) || out.wave.k[0] <= 0.0)
        throw std::invalid_argument("periodic KG wave needs a future-timelike wave vector");
    out.wave.amplitudes = {amplitude};
    out.lambda = 1.0 / std::sqrt(kk);
    return out;
}

PlaneWave kg_plane_wave(double lambda, const RealVector& spatial_k, cplx amplitude)
{
    PlaneWave w;
    w.k = RealVector(spatial_k.size() + 1);
    w.k[0] = std::sqrt(1.0 / (lambda * lambda) + spatial_k.squaredNorm());
    w.k.tail(spatial_k.size()) = spatial_k;
    w.amplitudes = {amplitude};
    return w;
}

Field::Field(const Grid& grid, int components)
    : grid_(grid), components_(components), data_(static_cast<std::size_t>(components) * grid.size())
{
    if (components < 1) throw std::invalid_argument("field needs at least one component");
}

Field Field::sample(const Grid& grid, const PlaneWave& wave)
{
    if (wave.k.size() != grid.dim) throw std::invalid_argument("plane wave dimension does not match grid");
    Field f(grid, static_cast<int>(wave.amplitudes.size()));
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const cplx e = wave.phase_at(grid.coordinates(p));
        for (int c = 0; c < f.components_; ++c) f.at(c, p) = wave.amplitudes[c] * e;
    }
    f.wave_ = wave;
    return f;
}

Field Field::stack(std::span<const Field> parts)
{
    if (parts.empty()) throw std::invalid_argument("nothing to stack");
    int total = 0;
    for (const auto& part : parts) total += part.components();
    Field out(parts.front().grid(), total);
    bool keep = parts.front().wave().has_value();
    int c0 = 0;
    for (const auto& part : parts) {
        if (part.points() != out.points()) throw std::invalid_argument("stacked fields live on different grids");
        for (int c = 0; c < part.components(); ++c) {
            auto src = part.component(c);
            std::copy(src.begin(), src.end(), out.component(c0 + c).begin());
        }
        c0 += part.components();
        keep = keep && part.wave() && same_wave_vector(*part.wave(), *parts.front().wave());
    }
    if (keep) {
        PlaneWave w{parts.front().wave()->k, {}};
        for (const auto& part : parts)
            w.amplitudes.insert(w.amplitudes.end(), part.wave()->amplitudes.begin(), part.wave()->amplitudes.end());
        out.wave_ = std::move(w);
    }
    return out;
}

Field Field::component_field(int c) const
{
    Field out(grid_, 1);
    auto src = component(c);
    std::copy(src.begin(), src.end(), out.component(0).begin());
    if (wave_) out.wave_ = PlaneWave{wave_->k, {wave_->amplitudes[c]}};
    return out;
}

Field& Field::add_scaled(cplx alpha, const Field& x)
{
    if (x.components_ != components_ || x.points() != points())
        throw std::invalid_argument("field shapes differ");
    kernels::caxpy(alpha, x.data_.data(), data_.data(), data_.size());
    if (wave_ && x.wave_ && same_wave_vector(*wave_, *x.wave_)) {
        for (int c = 0; c < components_; ++c) wave_->amplitudes[c] += alpha * x.wave_->amplitudes[c];
    } else {
        wave_.reset();
    }
    return *this;
}

Field Field::scaled(cplx alpha) const
{
    Field out(grid_, components_);
    out.wave_ = wave_;
    if (out.wave_)
        for (auto& a : out.wave_->amplitudes) a = 0.0;
    out.add_scaled(alpha, *this);
    return out;
}

double Field::max_abs() const { return kernels::max_modulus(data_.data(), data_.size()); }

double Field::descriptor_mismatch() const
{
    if (!wave_) return 0.0;
    const Field exact = sample(grid_, *wave_);
    return kernels::max_modulus_diff(data_.data(), exact.data_.data(), data_.size());
}

double max_abs_diff(const Field& a, const Field& b)
{
    if (a.components() != b.components() || a.points() != b.points())
        throw std::invalid_argument("field shapes differ");
    double m = 0.0;
    for (int c = 0; c < a.components(); ++c)
        m = std::max(m, kernels::max_modulus_diff(a.component(c).data(), b.component(c).data(), a.points()));
    return m;
}

Field mix_components(const ComplexMatrix& m, const Field& f)
{
    if (m.cols() != f.components()) throw std::invalid_argument("matrix does not match field components");
    Field out(f.grid(), static_cast<int>(m.rows()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0.0) kernels::caxpy(m(r, c), f.component(c).data(), out.component(r).data(), f.points());
    if (f.wave()) {
        PlaneWave w{f.wave()->k, std::vector<cplx>(m.rows(), 0.0)};
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) w.amplitudes[r] += m(r, c) * f.wave()->amplitudes[c];
        out.set_wave(std::move(w));
    }
    return out;
}

namespace {

void fd_line_axis(std::span<const cplx> in, std::span<cplx> out, const Grid& g, int axis)
{
    const std::size_t n = static_cast<std::size_t>(g.n[axis]);
    const std::size_t s = g.stride(axis);
    const std::size_t outer = g.size() / (n * s);
    const double scale = 1.0 / (2.0 * g.h[axis]);
    if (s == 1) {
        for (std::size_t o = 0; o < outer; ++o)
            kernels::central_diff_periodic(in.data() + o * n, out.data() + o * n, n, scale);
        return;
    }
    // Slow axes: every line is a contiguous block of s points.
    for (std::size_t o = 0; o < outer; ++o) {
        const cplx* base = in.data() + o * n * s;
        cplx* dst = out.data() + o * n * s;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx* next = base + ((i + 1) % n) * s;
            const cplx* prev = base + ((i + n - 1) % n) * s;
            kernels::diff_scaled(reinterpret_cast<const double*>(next), reinterpret_cast<const double*>(prev),
                                 reinterpret_cast<double*>(dst + i * s), 2 * s, scale);
        }
    }
}

}  // namespace

Field partial(const Field& f, int axis, Derivative mode)
{
    const Grid& g = f.grid();
    if (axis < 0 || axis >= g.dim) throw std::invalid_argument("derivative axis out of range");
    if (mode == Derivative::automatic) mode = f.wave() ? Derivative::analytic : Derivative::finite_difference;
    if (mode == Derivative::analytic) {
        if (!f.wave()) throw std::invalid_argument("analytic derivative needs a plane-wave descriptor");
        const cplx factor = -kI * f.wave()->k[axis];
        Field out = f.scaled(factor);
        return out;
    }
    Field out(g, f.components());
    for (int c = 0; c < f.components(); ++c) fd_line_axis(f.component(c), out.component(c), g, axis);
    return out;
}

Field partial_lightcone(const Field& f, int sign, Derivative mode)
{
    if (f.grid().dim != 2) throw std::invalid_argument("lightcone derivative is defined in 1+1 dimensions");
    Field out = partial(f, 0, mode);
    out.add_scaled(sign >= 0 ? 1.0 : -1.0, partial(f, 1, mode));
    return out;
}

double kg_residual(const Field& psi, double lambda, Derivative mode)
{
    if (psi.components() != 1) throw std::invalid_argument("KG residual takes a one-component field");
    Field r = psi;
    const double l2 = lambda * lambda;
    for (int a = 0; a < psi.grid().dim; ++a) {
        const Field second = partial(partial(psi, a, mode), a, mode);
        r.add_scaled(a == 0 ? l2 : -l2, second);
    }
    return r.max_abs();
}

void dump_field(const Field& f, std::ostream& out)
{
    const Grid& g = f.grid();
    for (std::size_t p = 0; p < f.points(); ++p) {
        const auto idx = g.unravel(p);
        std::string line;
        for (int a = 0; a < g.dim; ++a) line += fmt::format("{} ", idx[a]);
        for (int c = 0; c < f.components(); ++c) {
            const cplx v = f.at(c, p);
            line += fmt::format("{:.17g} {:.17g}", v.real(), v.imag());
            if (c + 1 < f.components()) line += ' ';
        }
        out << line << '\n';
    }
}

double grid_sum(std::span<const double> values) { return kernels::sum(values.data(), values.size()); }

TrigField::TrigField(int dim, const std::array<double, 4>& extents, double offset, std::vector<TrigMode> modes)
    : dim_(dim), extents_(extents), offset_(offset), modes_(std::move(modes))
{
}

TrigField TrigField::random(Rng& rng, const Grid& grid, double offset, double amplitude, int count, int max_mode)
{
    std::array<double, 4> extents{1, 1, 1, 1};
    for (int a = 0; a < grid.dim; ++a) extents[a] = grid.extent(a);
    std::vector<TrigMode> modes(count);
    double total = 0.0;
    for (auto& m : modes) {
        for (int a = 0; a < grid.dim; ++a) m.m[a] = rng.integer(-max_mode, max_mode);
        m.amplitude = rng.uniform(0.2, 1.0);
        m.phase = rng.uniform(0.0, kTwoPi);
        total += m.amplitude;
    }
    for (auto& m : modes) m.amplitude *= amplitude / total;
    return TrigField(grid.dim, extents, offset, std::move(modes));
}

TrigField TrigField::constant(const Grid& grid, double value)
{
    std::array<double, 4> extents{1, 1, 1, 1};
    for (int a = 0; a < grid.dim; ++a) extents[a] = grid.extent(a);
    return TrigField(grid.dim, extents, value, {});
}

double TrigField::wavenumber(const TrigMode& mode, int axis) const
{
    return kTwoPi * mode.m[axis] / extents_[axis];
}

double TrigField::eval(const RealVector& x) const
{
    double out = offset_;
    for (const auto& mode : modes_) {
        double arg = mode.phase;
        for (int a = 0; a < dim_; ++a) arg += wavenumber(mode, a) * x[a];
        out += mode.amplitude * std::cos(arg);
    }
    return out;
}

double TrigField::max_deviation() const
{
    double s = 0.0;
    for (const auto& mode : modes_) s += std::abs(mode.amplitude);
    return s;
}

}  // namespace dirac_sv
