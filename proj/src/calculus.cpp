#include "iteral/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace iteral {

__extension__ typedef unsigned __int128 uint128;

DerivativeProduct derivative_product(TrigKind kind, int order)
{
    detail::check_order(order);
    DerivativeProduct shape;
    shape.kind = kind;
    shape.order = order;
    shape.factor_count = order;
    shape.sign = (kind == TrigKind::Cosine && order % 2 == 1) ? -1 : 1;
    return shape;
}

int Composition::total() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::uint64_t composition_count(int m, int n)
{
    if (m < 1 || n < 0) return 0;
    // C(n+m-1, k) with k = min(m-1, n), built incrementally; each partial
    // product is itself a binomial coefficient so the division is exact.
    const std::uint64_t k = static_cast<std::uint64_t>(std::min(m - 1, n));
    const std::uint64_t top = static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(m) - 1;
    uint128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (top - k + i) / i;
        if (c > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(c);
}

namespace detail {
void check_composition_request(int m, int n, std::uint64_t cap)
{
    if (m < 1) throw std::invalid_argument("composition needs m >= 1 parts, got " + std::to_string(m));
    if (n < 0) throw std::invalid_argument("composition total must be >= 0, got " + std::to_string(n));
    const std::uint64_t count = composition_count(m, n);
    if (count > cap)
        throw std::length_error(std::to_string(count) + " compositions of " + std::to_string(n)
                                + " into " + std::to_string(m) + " parts exceed the cap of "
                                + std::to_string(cap));
}
}  // namespace detail

std::vector<Composition> enumerate_compositions(int m, int n, std::uint64_t cap)
{
    std::vector<Composition> out;
    detail::check_composition_request(m, n, cap);
    out.reserve(static_cast<std::size_t>(composition_count(m, n)));
    for_each_composition(
        m, n, [&](std::span<const int> parts) { out.push_back({{parts.begin(), parts.end()}}); },
        cap);
    return out;
}

std::uint64_t multinomial(std::span<const int> parts)
{
    int total = 0;
    for (int j : parts) {
        if (j < 0) throw std::invalid_argument("multinomial parts must be non-negative");
        total += j;
    }
    if (total > kMaxExactFactorial)
        throw std::overflow_error("multinomial total " + std::to_string(total)
                                  + " exceeds exact limit " + std::to_string(kMaxExactFactorial));
    // Product of binomials C(remaining, j); every factor fits in 64 bits.
    std::uint64_t result = 1;
    int remaining = total;
    for (int j : parts) {
        std::uint64_t binom = 1;
        for (int i = 1; i <= j; ++i)
            binom = binom * static_cast<std::uint64_t>(remaining - j + i) / static_cast<std::uint64_t>(i);
        result *= binom;
        remaining -= j;
    }
    return result;
}

double second_derivative_at_zero(int m)
{
    if (m < 1) throw std::invalid_argument("order must be >= 1, got " + std::to_string(m));
    double product = (m % 2 == 0) ? 1.0 : -1.0;
    double inner = 1.0;  // cos^(k-1)(1)
    for (int k = 1; k < m; ++k) {
        product *= std::sin(inner);
        inner = std::cos(inner);
    }
    return product;
}

std::vector<double> extrema_locations(TrigKind kind, int order, int k_max)
{
    detail::check_order(order);
    if (order == 0) throw std::invalid_argument("order-0 iteral is y = x and has no extrema");
    if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");

    constexpr double pi = std::numbers::pi;
    std::vector<double> loci;
    const auto push_if_inside = [&](double x, long twice_index, long limit) {
        // Compare on the exact half-period index, not on the rounded x.
        if (std::labs(twice_index) < limit) loci.push_back(x);
    };
    const long limit = 2L * k_max;  // |x| < k_max*pi  <=>  |2x/pi| < 2*k_max

    if (kind == TrigKind::Cosine && order >= 2) {
        for (long k = -limit; k <= limit; ++k) push_if_inside(static_cast<double>(k) * pi / 2, k, limit);
    } else if (kind == TrigKind::Cosine) {
        for (long k = -k_max; k <= k_max; ++k) push_if_inside(static_cast<double>(k) * pi, 2 * k, limit);
    } else {
        for (long k = -k_max - 1; k <= k_max; ++k)
            push_if_inside(pi / 2 + static_cast<double>(k) * pi, 2 * k + 1, limit);
    }
    return loci;
}

}  // namespace iteral
