#include "iteral/fractal.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace iteral {

namespace {

template <class Step>
bool survives(std::complex<double> z, const EscapeParams& params, Step step)
{
    for (int i = 0; i < params.iterations; ++i) {
        z = step(z);
        if (!detail::is_finite(z)) return false;
        if (params.early_exit && !(std::norm(z) < params.escape_norm_sq)) return false;
    }
    return std::norm(z) < params.escape_norm_sq;
}

bool survives_map(std::complex<double> v, const EscapeMap& map, const EscapeParams& params)
{
    if (const auto* kind = std::get_if<TrigKind>(&map)) {
        if (*kind == TrigKind::Cosine)
            return survives(v, params, [](const std::complex<double>& z) { return std::cos(z); });
        return survives(v, params, [](const std::complex<double>& z) { return std::sin(z); });
    }
    const std::complex<double> c = std::get<Quadratic>(map).c.to_complex();
    return survives(v, params, [c](const std::complex<double>& z) { return z * z + c; });
}

}  // namespace

ScanRegion ScanRegion::normalized() const
{
    ScanRegion out = *this;
    out.corner1 = {std::min(corner1.re, corner2.re), std::min(corner1.im, corner2.im)};
    out.corner2 = {std::max(corner1.re, corner2.re), std::max(corner1.im, corner2.im)};
    return out;
}

void ScanRegion::validate() const
{
    if (grid < 2) throw std::invalid_argument("Grid (" + std::to_string(grid) + ") must be >= 2");
    for (double x : {corner1.re, corner1.im, corner2.re, corner2.im})
        if (!std::isfinite(x)) throw std::invalid_argument("scan region corners must be finite");
}

void EscapeParams::validate() const
{
    if (iterations < 1)
        throw std::invalid_argument("iterations (" + std::to_string(iterations) + ") must be >= 1");
    if (!(escape_norm_sq > 0.0) || std::isnan(escape_norm_sq))
        throw std::invalid_argument("escape threshold must be positive");
}

bool point_survives(ComplexPoint v, const EscapeMap& map, const EscapeParams& params)
{
    params.validate();
    return survives_map(v.to_complex(), map, params);
}

bool point_survives(ComplexPoint grid_point, const ScanTarget& target, const EscapeParams& params)
{
    if (const auto* julia = std::get_if<JuliaSet>(&target)) return point_survives(grid_point, julia->map, params);
    return point_survives(ComplexPoint{0.0, 0.0}, EscapeMap{Quadratic{grid_point}}, params);
}

ScanGrid make_scan_grid(const ScanRegion& region)
{
    region.validate();
    const auto n = static_cast<std::size_t>(region.grid);
    const double dzr = (region.corner2.re - region.corner1.re) / static_cast<double>(n - 1);
    const double dzi = (region.corner2.im - region.corner1.im) / static_cast<double>(n - 1);

    ScanGrid grid;
    grid.column_re.resize(n);
    grid.column_re_inner.resize(n);
    grid.row_im.resize(n);

    // Inner steps add the complex (0, dzi), so the real part picks up
    // "+ 0.0" once per row; that only matters for a -0.0 start.
    double re = region.corner1.re;
    for (std::size_t r = 0; r < n; ++r) {
        grid.column_re[r] = re;
        grid.column_re_inner[r] = re + 0.0;
        re = grid.column_re_inner[r] + dzr;
    }
    double im = region.corner1.im;
    for (std::size_t i = 0; i < n; ++i) {
        grid.row_im[i] = im;
        im += dzi;
    }
    return grid;
}

PointSet scan(const ScanRegion& region, const ScanTarget& target, const EscapeParams& params,
              const ScanOptions& options)
{
    params.validate();
    const ScanGrid grid = make_scan_grid(region);
    const auto n = static_cast<long>(region.grid);
    std::vector<std::vector<ComplexPoint>> columns(static_cast<std::size_t>(n));

    const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long r = 0; r < n; ++r) {
        auto& column = columns[static_cast<std::size_t>(r)];
        for (long i = 0; i < n; ++i) {
            const ComplexPoint p = grid.at(static_cast<std::size_t>(r), static_cast<std::size_t>(i));
            if (point_survives(p, target, params)) column.push_back(p);
        }
    }

    PointSet out;
    out.scanned = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::size_t total = 0;
    for (const auto& column : columns) total += column.size();
    out.points.reserve(total);
    for (const auto& column : columns) out.points.insert(out.points.end(), column.begin(), column.end());
    return out;
}

PointSet scan_serial(const ScanRegion& region, const ScanTarget& target, const EscapeParams& params)
{
    region.validate();
    params.validate();
    const unsigned int n = static_cast<unsigned int>(region.grid);
    const std::complex<double> z1 = region.corner1.to_complex();
    const std::complex<double> z2 = region.corner2.to_complex();
    const double dzr = (z2 - z1).real() / (n - 1);
    const std::complex<double> dzi(0.0, (z2 - z1).imag() / (n - 1));

    const auto literal = [&](std::complex<double> z) {
        if (params.early_exit) return point_survives(ComplexPoint{z.real(), z.imag()}, target, params);
        const auto iterations = static_cast<unsigned int>(params.iterations);
        if (const auto* julia = std::get_if<JuliaSet>(&target)) {
            if (const auto* kind = std::get_if<TrigKind>(&julia->map)) {
                std::complex<double> (*f)(const std::complex<double>&) =
                    *kind == TrigKind::Cosine ? static_cast<std::complex<double> (*)(const std::complex<double>&)>(std::cos)
                                              : static_cast<std::complex<double> (*)(const std::complex<double>&)>(std::sin);
                return std::norm(iteral(iterations, z, f)) < params.escape_norm_sq;
            }
            const std::complex<double> c = std::get<Quadratic>(julia->map).c.to_complex();
            return std::norm(iteral(iterations, z, [c](const std::complex<double>& w) { return w * w + c; }))
                   < params.escape_norm_sq;
        }
        const std::complex<double> c = z;
        return std::norm(iteral(iterations, std::complex<double>(0.0, 0.0),
                                [c](const std::complex<double>& w) { return w * w + c; }))
               < params.escape_norm_sq;
    };

    PointSet out;
    std::complex<double> z(z1);
    for (unsigned int r = 0; r < n; ++r, z += dzr) {
        for (unsigned int i = 0; i < n; ++i, z += dzi) {
            ++out.scanned;
            if (literal(z)) out.points.push_back({z.real(), z.imag()});
        }
        z = std::complex<double>(z.real(), z1.imag());
    }
    return out;
}

}  // namespace iteral
