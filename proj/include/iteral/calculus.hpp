#pragma once

#include "iteral/core.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace iteral {

/// d/dx of the order-n iteral, as the product of n sines (cosine family,
/// with sign (-1)^n) or n cosines (sine family) of the lower-order iterals.
/// Order 0 returns 1.
template <class T>
T iteral_derivative(TrigKind kind, int order, const T& x)
{
    using std::cos;
    using std::sin;
    detail::check_order(order);
    T product = T(1);
    T inner = x;
    for (int k = 0; k < order; ++k) {
        if (kind == TrigKind::Cosine) {
            product *= -sin(inner);
            inner = cos(inner);
        } else {
            product *= cos(inner);
            inner = sin(inner);
        }
    }
    return product;
}

/// Shape of the first-derivative product.
struct DerivativeProduct {
    TrigKind kind = TrigKind::Cosine;
    int order = 0;
    int sign = 1;
    int factor_count = 0;
};

DerivativeProduct derivative_product(TrigKind kind, int order);

/// Weak composition of `total()` into `size()` non-negative parts.
struct Composition {
    std::vector<int> parts;

    int size() const { return static_cast<int>(parts.size()); }
    int total() const;
    bool operator==(const Composition&) const = default;
};

inline constexpr std::uint64_t kDefaultCompositionCap = 10'000'000;

/// C(n+m-1, m-1), saturating at UINT64_MAX.
std::uint64_t composition_count(int m, int n);

namespace detail {
void check_composition_request(int m, int n, std::uint64_t cap);
}

/// Visits every weak composition of n into m parts in lexicographic order.
/// The span passed to `visit` is only valid during the call.
template <class Visitor>
void for_each_composition(int m, int n, Visitor&& visit,
                          std::uint64_t cap = kDefaultCompositionCap)
{
    detail::check_composition_request(m, n, cap);
    std::vector<int> parts(static_cast<std::size_t>(m), 0);
    parts.back() = n;
    const std::span<const int> view(parts);
    while (true) {
        visit(view);
        // Next in lexicographic order: bump the rightmost bumpable prefix
        // entry and dump the remainder into the last slot.
        int i = m - 2;
        while (i >= 0 && parts.back() == 0) {
            parts.back() += parts[static_cast<std::size_t>(i)];
            parts[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return;
        ++parts[static_cast<std::size_t>(i)];
        --parts.back();
    }
}

std::vector<Composition> enumerate_compositions(int m, int n,
                                                std::uint64_t cap = kDefaultCompositionCap);

inline constexpr int kMaxExactFactorial = 20;

/// n! / prod(j_k!) in exact integer arithmetic. Throws std::overflow_error
/// when the parts sum above kMaxExactFactorial.
std::uint64_t multinomial(std::span<const int> parts);

/// n-th derivative of a product of m factors:
///   sum over weak compositions j of n into m parts of
///   multinomial(j) * prod_l factor(l, j_l),
/// where factor(l, j) is the j-th derivative of factor l (0-based index).
/// Scalar may be an exact type (integers, boost::rational).
template <class Scalar, class FactorDerivative>
Scalar product_nth_derivative(FactorDerivative&& factor, int m, int n,
                              std::uint64_t cap = kDefaultCompositionCap)
{
    if (n > kMaxExactFactorial)
        throw std::overflow_error("derivative order " + std::to_string(n)
                                  + " exceeds exact multinomial limit "
                                  + std::to_string(kMaxExactFactorial));
    Scalar sum = Scalar(0);
    for_each_composition(
        m, n,
        [&](std::span<const int> parts) {
            Scalar term = Scalar(static_cast<long long>(multinomial(parts)));
            for (int l = 0; l < m; ++l) term *= factor(l, parts[static_cast<std::size_t>(l)]);
            sum += term;
        },
        cap);
    return sum;
}

/// Second derivative of the order-m cosine iteral at 0:
/// (-1)^m * prod_{k=1}^{m-1} sin(cos^(k-1)(1)).
double second_derivative_at_zero(int m);

/// Critical points of the order-n iteral within the open interval
/// (-k_max*pi, k_max*pi), ascending.
///   cosine, n >= 2: k*pi/2      cosine, n == 1: k*pi
///   sine,   n >= 1: pi/2 + k*pi
/// Order 0 has no critical points and throws std::invalid_argument.
std::vector<double> extrema_locations(TrigKind kind, int order, int k_max);

}  // namespace iteral
