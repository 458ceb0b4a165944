#pragma once

#include "iteral/fractal.hpp"

#include <ostream>
#include <span>
#include <string>

namespace iteral {

enum class OutputMode {
    /// Two right-aligned columns, fixed significant digits. Gnuplot's
    /// `plot "f.txt" with dots` reads it directly.
    GnuplotColumns,
    /// Single-space separated, shortest representation, no padding.
    DelimitedText,
};

struct OutputFormat {
    OutputMode mode = OutputMode::GnuplotColumns;
    int width = 25;
    int precision = 16;
};

/// Shortest decimal that round-trips, or the value at 16 significant
/// digits if round-tripping needs more.
std::string format_number(double value);

void write_point(std::ostream& out, const ComplexPoint& point, const OutputFormat& format = {});
void write_points(std::ostream& out, std::span<const ComplexPoint> points, const OutputFormat& format = {});

}  // namespace iteral
