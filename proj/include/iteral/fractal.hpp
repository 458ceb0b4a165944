#pragma once

#include "iteral/core.hpp"

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

namespace iteral {

struct ComplexPoint {
    double re = 0.0;
    double im = 0.0;

    std::complex<double> to_complex() const { return {re, im}; }
    bool operator==(const ComplexPoint&) const = default;
};

/// Rectangle of the complex plane sampled on a grid x grid lattice.
/// Corners are used as given: a scan steps from corner1 towards corner2.
struct ScanRegion {
    ComplexPoint corner1;
    ComplexPoint corner2;
    int grid = 2;

    /// Same rectangle with corner1 at the lower-left.
    ScanRegion normalized() const;
    /// Throws std::invalid_argument for grid < 2 or non-finite corners.
    void validate() const;
};

struct EscapeParams {
    int iterations = 50;
    /// Compared against the squared magnitude of the final iterate.
    double escape_norm_sq = 10.0;
    /// Stop as soon as an intermediate iterate reaches the threshold.
    /// Off by default: the reference criterion looks only at the last one.
    bool early_exit = false;

    void validate() const;
};

/// z -> z^2 + c
struct Quadratic {
    ComplexPoint c;
};

/// Map iterated from the seed v.
using EscapeMap = std::variant<TrigKind, Quadratic>;

/// True iff the orbit of v stays finite and its final squared magnitude is
/// below params.escape_norm_sq after exactly params.iterations steps.
bool point_survives(ComplexPoint v, const EscapeMap& map, const EscapeParams& params = {});

/// Grid points are seeds of a filled-in Julia set of `map`.
struct JuliaSet {
    EscapeMap map;
};

/// Grid points are parameters c of z^2 + c, iterated from 0.
struct MandelbrotSet {};

using ScanTarget = std::variant<JuliaSet, MandelbrotSet>;

bool point_survives(ComplexPoint grid_point, const ScanTarget& target, const EscapeParams& params);

struct PointSet {
    /// Surviving points in column order: real part outer, imaginary inner.
    std::vector<ComplexPoint> points;
    /// Number of grid points evaluated.
    std::size_t scanned = 0;
};

struct ScanOptions {
    /// Worker threads; 0 means the OpenMP default.
    int workers = 0;
};

/// Grid coordinates reproduced exactly as the original program generates
/// them by accumulating `+= step` along both axes.
struct ScanGrid {
    /// Real part of the first point of each column.
    std::vector<double> column_re;
    /// Real part of the remaining points of each column.
    std::vector<double> column_re_inner;
    /// Imaginary part of each row, shared by every column.
    std::vector<double> row_im;

    ComplexPoint at(std::size_t column, std::size_t row) const
    {
        return {row == 0 ? column_re[column] : column_re_inner[column], row_im[row]};
    }
};

ScanGrid make_scan_grid(const ScanRegion& region);

/// Column-parallel scan. Output is identical for any worker count.
PointSet scan(const ScanRegion& region, const ScanTarget& target, const EscapeParams& params = {},
              const ScanOptions& options = {});

/// Single-threaded transcription of the original nested loop, stepping a
/// std::complex cursor in place. Kept as the reference for scan().
PointSet scan_serial(const ScanRegion& region, const ScanTarget& target, const EscapeParams& params = {});

}  // namespace iteral
