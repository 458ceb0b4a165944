#include "iteral/dottie.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace iteral {

std::string_view to_string(DottieMethod method)
{
    return method == DottieMethod::Newton ? "newton" : "fixed-point";
}

namespace {

template <class Real>
std::string describe(const Real& x)
{
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

template <class Real>
void check_tolerance(const Real& tolerance)
{
    using std::isfinite;
    using boost::multiprecision::isfinite;
    if (!(tolerance > 0) || !isfinite(tolerance))
        throw std::invalid_argument("tolerance must be positive and finite");
    const Real floor = minimum_dottie_tolerance<Real>();
    if (tolerance < floor)
        throw std::domain_error("tolerance " + describe(tolerance)
                                + " is below the minimum achievable tolerance "
                                + describe(floor));
}

template <class Real>
DottieResult<Real> fixed_point(const Real& tolerance, int max_iterations)
{
    using std::abs;
    using std::cos;
    Real x = 1;
    for (int k = 1; k <= max_iterations; ++k) {
        const Real next = cos(x);
        const Real step = abs(next - x);
        x = next;
        const Real residual = abs(cos(x) - x);
        if (2 * step <= tolerance && residual <= tolerance)
            return {x, k, residual, DottieMethod::FixedPoint};
    }
    throw std::runtime_error("fixed-point iteration did not reach tolerance in "
                             + std::to_string(max_iterations) + " steps");
}

template <class Real>
DottieResult<Real> newton(const Real& tolerance, int max_iterations)
{
    using std::abs;
    using std::cos;
    using std::sin;
    Real x = Real(3) / 4;
    for (int k = 1; k <= max_iterations; ++k) {
        // g' = -sin(x) - 1 stays below -1.5 near the root.
        x -= (cos(x) - x) / (-sin(x) - 1);
        const Real residual = abs(cos(x) - x);
        if (residual <= tolerance) return {x, k, residual, DottieMethod::Newton};
    }
    throw std::runtime_error("Newton iteration did not reach tolerance in "
                             + std::to_string(max_iterations) + " steps");
}

}  // namespace

template <class Real>
DottieResult<Real> solve_dottie(const Real& tolerance, DottieMethod method, int max_iterations)
{
    check_tolerance(tolerance);
    return method == DottieMethod::Newton ? newton(tolerance, max_iterations)
                                          : fixed_point(tolerance, max_iterations);
}

template DottieResult<double> solve_dottie(const double&, DottieMethod, int);
template DottieResult<ExtendedReal> solve_dottie(const ExtendedReal&, DottieMethod, int);

DottieResult<ExtendedReal> dottie_extended(int digits, DottieMethod method)
{
    if (digits < 1 || digits > 90)
        throw std::invalid_argument("extended Dottie digits must be in [1, 90], got "
                                    + std::to_string(digits));
    const ExtendedReal tolerance = boost::multiprecision::pow(ExtendedReal(10), -digits) / 2;
    return solve_dottie(tolerance, method);
}

}  // namespace iteral
