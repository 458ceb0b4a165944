#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <limits>
#include <string_view>

namespace iteral {

enum class DottieMethod { FixedPoint, Newton };

std::string_view to_string(DottieMethod method);

/// 100 decimal digits; used only by the extended-precision solver.
using ExtendedReal = boost::multiprecision::cpp_bin_float_100;

template <class Real>
struct DottieResult {
    Real value{};
    int iterations_used = 0;
    Real residual{};  ///< |cos(value) - value|
    DottieMethod method = DottieMethod::FixedPoint;
};

/// Smallest tolerance the solver accepts for a given scalar type.
template <class Real>
Real minimum_dottie_tolerance()
{
    return 4 * std::numeric_limits<Real>::epsilon();
}

/// Solves cos(x) = x.
///
/// FixedPoint iterates x <- cos(x) from 1 and stops once a step is at most
/// tolerance/2 and the residual is at most tolerance. Newton works on
/// g(x) = cos(x) - x from 0.75 and stops on the residual alone.
///
/// Throws std::invalid_argument for non-positive or non-finite tolerances,
/// std::domain_error when the tolerance is below minimum_dottie_tolerance(),
/// and std::runtime_error if max_iterations is exhausted.
template <class Real>
DottieResult<Real> solve_dottie(const Real& tolerance, DottieMethod method,
                                int max_iterations = 100000);

extern template DottieResult<double> solve_dottie(const double&, DottieMethod, int);
extern template DottieResult<ExtendedReal> solve_dottie(const ExtendedReal&, DottieMethod, int);

inline DottieResult<double> dottie(double tolerance, DottieMethod method = DottieMethod::FixedPoint)
{
    return solve_dottie(tolerance, method);
}

/// Solves to the requested number of decimal digits (at most 90).
DottieResult<ExtendedReal> dottie_extended(int digits, DottieMethod method = DottieMethod::Newton);

}  // namespace iteral
