#include "iteral/format.hpp"

#include <array>
#include <charconv>
#include <iomanip>
#include <locale>

namespace iteral {

namespace {

int significant_digits(std::string_view text)
{
    int digits = 0;
    bool leading = true;
    for (char ch : text) {
        if (ch == 'e' || ch == 'E') break;
        if (ch < '0' || ch > '9') continue;
        if (leading && ch == '0') continue;
        leading = false;
        ++digits;
    }
    return digits;
}

}  // namespace

std::string format_number(double value)
{
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    std::string_view shortest(buf.data(), static_cast<std::size_t>(res.ptr - buf.data()));
    if (significant_digits(shortest) <= 16) return std::string(shortest);
    res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 16);
    return std::string(buf.data(), res.ptr);
}

void write_point(std::ostream& out, const ComplexPoint& point, const OutputFormat& format)
{
    if (format.mode == OutputMode::DelimitedText) {
        out << format_number(point.re) << ' ' << format_number(point.im) << '\n';
        return;
    }
    out << std::setw(format.width) << std::setprecision(format.precision) << point.re << " "
        << std::setw(format.width) << std::setprecision(format.precision) << point.im << '\n';
}

void write_points(std::ostream& out, std::span<const ComplexPoint> points, const OutputFormat& format)
{
    const auto saved_flags = out.flags();
    const auto saved_precision = out.precision();
    const auto saved_locale = out.imbue(std::locale::classic());
    out.flags(std::ios_base::dec | std::ios_base::skipws);
    for (const auto& p : points) write_point(out, p, format);
    out.imbue(saved_locale);
    out.precision(saved_precision);
    out.flags(saved_flags);
}

}  // namespace iteral
