#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace iteral {

enum class TrigKind { Cosine, Sine };

std::string_view to_string(TrigKind kind);

/// Parses "cos"/"sin" (also "cosine"/"sine"). Throws std::invalid_argument
/// naming the offending text otherwise.
TrigKind parse_trig_kind(std::string_view name);

/// n-fold iterate of f started at v. Order 0 is the identity.
template <class T, class F>
T iteral(unsigned int n, const T& v, F f)
{
    T tmp = v;
    for (unsigned int i = 0; i < n; ++i) tmp = f(tmp);
    return tmp;
}

/// One application of cos or sin. Resolved through ADL so that
/// std::complex and Boost.Multiprecision scalars work unchanged.
template <class T>
T apply_once(TrigKind kind, const T& x)
{
    using std::cos;
    using std::sin;
    return kind == TrigKind::Cosine ? T(cos(x)) : T(sin(x));
}

template <class T>
struct IteralSpec {
    TrigKind kind = TrigKind::Cosine;
    int order = 0;
    T initial{};
};

namespace detail {
inline void check_order(int order)
{
    if (order < 0)
        throw std::invalid_argument("iteral order (" + std::to_string(order) + ") must be >= 0");
}

template <class T>
bool is_finite(const T& x)
{
    using std::isfinite;
    return isfinite(x);
}

template <class T>
bool is_finite(const std::complex<T>& z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}
}  // namespace detail

/// kind applied `order` times to `initial`.
template <class T>
T iterate(TrigKind kind, int order, const T& initial)
{
    detail::check_order(order);
    T x = initial;
    for (int i = 0; i < order; ++i) x = apply_once(kind, x);
    return x;
}

template <class T>
T iterate(const IteralSpec<T>& spec)
{
    return iterate(spec.kind, spec.order, spec.initial);
}

/// Result of an iteration that may leave the representable range.
/// `steps` counts the applications performed before stopping; when
/// `finite` is false, `value` holds the first non-finite iterate.
template <class T>
struct Orbit {
    T value{};
    bool finite = true;
    int steps = 0;
};

/// Like iterate(), but stops at the first non-finite iterate instead of
/// carrying NaN/Inf through the remaining steps.
template <class T>
Orbit<T> iterate_checked(TrigKind kind, int order, const T& initial)
{
    detail::check_order(order);
    Orbit<T> orbit{initial, detail::is_finite(initial), 0};
    while (orbit.finite && orbit.steps < order) {
        orbit.value = apply_once(kind, orbit.value);
        ++orbit.steps;
        orbit.finite = detail::is_finite(orbit.value);
    }
    return orbit;
}

/// Range of the order-n cosine iteral over the whole real line.
struct RangeBound {
    double lower = 0.0;
    double upper = 0.0;
    int order = 0;
};

/// Closed-form range for n >= 2: both endpoints are cosine iterals
/// started at 1, of orders n-1-(n%2) and n-2+(n%2).
RangeBound cos_iteral_range(int order);

/// Image of [-1, 1] under the order-n sine iteral; lo == -hi.
struct Envelope {
    double lo = 0.0;
    double hi = 0.0;
};

Envelope sin_iteral_envelope(int order);

/// Alternating gaps between consecutive crossings of y = D by the
/// order-n cosine iteral.
struct IntersectionDistances {
    double small = 0.0;
    double large = 0.0;
};

IntersectionDistances intersection_distances(int order, double dottie);

}  // namespace iteral
