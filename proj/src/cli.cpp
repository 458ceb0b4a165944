#include "iteral/cli.hpp"

#include "iteral/calculus.hpp"
#include "iteral/core.hpp"
#include "iteral/dottie.hpp"
#include "iteral/format.hpp"
#include "iteral/series.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace iteral::cli {

namespace {

using iteral::format_number;

ScanRegion region_from(const std::vector<double>& corners, int grid)
{
    return ScanRegion{{corners[0], corners[1]}, {corners[2], corners[3]}, grid};
}

ComplexPoint point_from(const std::vector<double>& xy)
{
    return {xy[0], xy[1]};
}

OutputFormat output_format(const std::string& name)
{
    OutputFormat format;
    format.mode = name == "text" ? OutputMode::DelimitedText : OutputMode::GnuplotColumns;
    return format;
}

struct ScanFlags {
    std::vector<double> region;
    int grid = 500;
    int iterations = 50;
    double threshold = 10.0;
    bool early_exit = false;
    int workers = 0;
    std::string format = "columns";

    void attach(CLI::App* sub, std::vector<double> default_region)
    {
        region = std::move(default_region);
        sub->add_option("--region", region, "Corners x1,y1,x2,y2")->delimiter(',')->expected(4)->capture_default_str();
        sub->add_option("--grid", grid, "Points per side (>= 2)")->capture_default_str();
        sub->add_option("--iterations", iterations, "Iterations per point")->capture_default_str();
        sub->add_option("--threshold", threshold, "Escape bound on the squared magnitude")->capture_default_str();
        sub->add_flag("--early-exit", early_exit, "Stop a point once an iterate reaches the threshold");
        sub->add_option("--workers", workers, "Worker threads (0 = all cores)")->capture_default_str();
        sub->add_option("--format", format, "Point format")
            ->check(CLI::IsMember({"columns", "text"}))
            ->capture_default_str();
    }

    int stream(const ScanTarget& target, std::ostream& out) const
    {
        EscapeParams params;
        params.iterations = iterations;
        params.escape_norm_sq = threshold;
        params.early_exit = early_exit;
        const auto points = scan(region_from(region, grid).normalized(), target, params, ScanOptions{workers});
        write_points(out, points.points, output_format(format));
        return kExitOk;
    }
};

}  // namespace

int run_legacy(std::span<const std::string> args, std::string_view program, std::ostream& out,
               std::ostream& err, const ScanOptions& options)
{
    try {
        if (args.size() < 6) {
            out << "Usage: " << program << " x1 y1 x2 y2 grid cos|sin" << std::endl;
            return kExitOk;
        }
        const int grid = std::atoi(args[4].c_str());
        if (grid < 2) throw std::invalid_argument("Grid (" + args[4] + ") must be >= 2");
        if (args[5] != "sin" && args[5] != "cos") throw std::invalid_argument("Type sin or cos but not " + args[5]);

        const ScanRegion region{{std::atof(args[0].c_str()), std::atof(args[1].c_str())},
                                {std::atof(args[2].c_str()), std::atof(args[3].c_str())},
                                grid};
        const TrigKind kind = args[5] == "cos" ? TrigKind::Cosine : TrigKind::Sine;
        const auto points = scan(region, JuliaSet{kind}, EscapeParams{}, options);
        write_points(out, points.points);
        out.flush();
    } catch (const std::exception& e) {
        err << e.what() << std::endl;
        return kExitInvalidInput;
    } catch (...) {
        err << "Unknown exception" << std::endl;
        return kExitInternal;
    }
    return kExitOk;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    const std::string program = args.empty() ? std::string("iteral") : args[0];
    if (args.size() >= 2 && args[1] == "legacy")
        return run_legacy(args.subspan(2), program + " legacy", out, err);

    CLI::App app{"Iterals of cosine and sine: fixed points, derivatives, series and escape-time scans"};
    app.name(program);
    app.require_subcommand(1);

    // dottie
    auto* dottie_cmd = app.add_subcommand("dottie", "Solve cos(x) = x");
    double tol = 1e-12;
    std::string method_name = "newton";
    int digits = 0;
    dottie_cmd->add_option("--tol", tol, "Residual tolerance")->capture_default_str();
    dottie_cmd->add_option("--method", method_name, "fixed or newton")
        ->check(CLI::IsMember({"fixed", "newton"}))
        ->capture_default_str();
    dottie_cmd->add_option("--digits", digits, "Extended precision: number of decimal digits (<= 90)");

    // iterate
    auto* iterate_cmd = app.add_subcommand("iterate", "Apply cos or sin n times");
    std::string fname = "cos";
    int n = 0;
    double v = 0.0;
    double vi = 0.0;
    iterate_cmd->add_option("--f", fname, "cos or sin")->capture_default_str();
    iterate_cmd->add_option("--n", n, "Order")->required();
    iterate_cmd->add_option("--v", v, "Initial value (real part)")->required();
    auto* vi_opt = iterate_cmd->add_option("--vi", vi, "Initial value, imaginary part");

    // derivative
    auto* derivative_cmd = app.add_subcommand("derivative", "First derivative of an iteral");
    double x = 0.0;
    bool check = false;
    derivative_cmd->add_option("--f", fname, "cos or sin")->capture_default_str();
    derivative_cmd->add_option("--n", n, "Order")->required();
    derivative_cmd->add_option("--x", x, "Point")->required();
    derivative_cmd->add_flag("--check", check, "Also print a central finite difference");

    // series
    auto* series_cmd = app.add_subcommand("series", "Maclaurin coefficients of an iteral");
    int terms = 0;
    bool show_tail = false;
    series_cmd->add_option("--f", fname, "cos or sin")->capture_default_str();
    series_cmd->add_option("--order", n, "Iteral order (>= 1)")->required();
    series_cmd->add_option("--terms", terms, "Highest power N")->required();
    series_cmd->add_flag("--tail", show_tail, "Also print the tail bound on |z| <= 1");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Range of a cosine iteral or envelope of a sine iteral");
    bool distances = false;
    bounds_cmd->add_option("--f", fname, "cos or sin")->capture_default_str();
    bounds_cmd->add_option("--n", n, "Order")->required();
    bounds_cmd->add_flag("--distances", distances, "Also print the gaps between crossings of y = D");

    // extrema
    auto* extrema_cmd = app.add_subcommand("extrema", "Critical points of an iteral in (-kmax*pi, kmax*pi)");
    int k_max = 1;
    extrema_cmd->add_option("--f", fname, "cos or sin")->capture_default_str();
    extrema_cmd->add_option("--n", n, "Order")->required();
    extrema_cmd->add_option("--kmax", k_max, "Half-width in multiples of pi")->capture_default_str();

    // julia
    auto* julia_cmd = app.add_subcommand("julia", "Scan a filled-in Julia set");
    ScanFlags julia_flags;
    std::vector<double> c_param{0.0, 0.0};
    julia_flags.attach(julia_cmd, {-2.5, -2.5, 2.5, 2.5});
    julia_cmd->add_option("--f", fname, "cos, sin or quadratic")
        ->check(CLI::IsMember({"cos", "sin", "quadratic"}))
        ->capture_default_str();
    julia_cmd->add_option("--c", c_param, "Parameter re,im of z^2 + c")->delimiter(',')->expected(2);

    // mandelbrot
    auto* mandelbrot_cmd = app.add_subcommand("mandelbrot", "Scan the Mandelbrot set");
    ScanFlags mandelbrot_flags;
    mandelbrot_flags.attach(mandelbrot_cmd, {-2.0, -1.5, 1.0, 1.5});

    app.add_subcommand("legacy", "x1 y1 x2 y2 grid cos|sin (original scanner interface)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalidInput;
    }

    try {
        if (*dottie_cmd) {
            const auto method = method_name == "newton" ? DottieMethod::Newton : DottieMethod::FixedPoint;
            if (digits > 0) {
                const auto r = dottie_extended(digits, method);
                out << std::fixed << std::setprecision(digits) << r.value << '\n';
                out << std::defaultfloat << std::setprecision(3) << "method=" << to_string(r.method)
                    << " iterations=" << r.iterations_used << " residual=" << r.residual << '\n';
                return kExitOk;
            }
            const auto r = dottie(tol, method);
            out << format_number(r.value) << '\n';
            out << "method=" << to_string(r.method) << " iterations=" << r.iterations_used
                << " residual=" << format_number(r.residual) << '\n';
            return kExitOk;
        }
        if (*iterate_cmd) {
            const TrigKind kind = parse_trig_kind(fname);
            if (vi_opt->count() == 0) {
                out << format_number(iterate(kind, n, v)) << '\n';
                return kExitOk;
            }
            const auto orbit = iterate_checked(kind, n, std::complex<double>(v, vi));
            if (orbit.finite)
                out << format_number(orbit.value.real()) << ' ' << format_number(orbit.value.imag()) << '\n';
            else
                out << "nonfinite after " << orbit.steps << " steps\n";
            return kExitOk;
        }
        if (*derivative_cmd) {
            const TrigKind kind = parse_trig_kind(fname);
            const double value = iteral_derivative(kind, n, x);
            out << format_number(value) << '\n';
            if (check) {
                const double h = 1e-6;
                const double fd = (iterate(kind, n, x + h) - iterate(kind, n, x - h)) / (2 * h);
                out << "finite-difference " << format_number(fd) << " difference "
                    << format_number(std::abs(fd - value)) << '\n';
            }
            return kExitOk;
        }
        if (*series_cmd) {
            const auto series = iteral_maclaurin(parse_trig_kind(fname), n, terms);
            for (int k = 0; k <= series.order(); ++k)
                out << (k == 0 ? "" : " ") << 'c' << k << '=' << format_number(series[k]);
            out << '\n';
            if (show_tail) out << "tail_bound=" << format_number(series.tail_bound()) << '\n';
            return kExitOk;
        }
        if (*bounds_cmd) {
            const TrigKind kind = parse_trig_kind(fname);
            if (kind == TrigKind::Cosine) {
                const auto range = cos_iteral_range(n);
                out << format_number(range.lower) << ' ' << format_number(range.upper) << '\n';
            } else {
                const auto env = sin_iteral_envelope(n);
                out << format_number(env.lo) << ' ' << format_number(env.hi) << '\n';
            }
            if (distances) {
                const auto d = intersection_distances(n, dottie(1e-15).value);
                out << "small=" << format_number(d.small) << " large=" << format_number(d.large) << '\n';
            }
            return kExitOk;
        }
        if (*extrema_cmd) {
            for (double locus : extrema_locations(parse_trig_kind(fname), n, k_max))
                out << format_number(locus) << '\n';
            return kExitOk;
        }
        if (*julia_cmd) {
            EscapeMap map = fname == "quadratic" ? EscapeMap{Quadratic{point_from(c_param)}}
                                                 : EscapeMap{parse_trig_kind(fname)};
            return julia_flags.stream(JuliaSet{map}, out);
        }
        if (*mandelbrot_cmd) return mandelbrot_flags.stream(MandelbrotSet{}, out);
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        err << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::length_error& e) {
        err << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::overflow_error& e) {
        err << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (...) {
        err << "Unknown exception" << '\n';
        return kExitInternal;
    }
    err << app.help();
    return kExitInvalidInput;
}

}  // namespace iteral::cli
