#include "iteral/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace iteral {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double inverse_factorial(int k)
{
    return std::exp(-std::lgamma(static_cast<double>(k) + 1.0));
}

void check_truncation(int order)
{
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0, got " + std::to_string(order));
}

// Sum of 1/k! over k > order with k of the given parity.
double factorial_tail(int order, int parity)
{
    double tail = 0.0;
    for (int k = order + 1; k <= order + 60; ++k)
        if (k % 2 == parity) tail += inverse_factorial(k);
    return tail;
}

double l1(std::span<const double> c)
{
    double s = 0.0;
    for (double x : c) s += std::abs(x);
    return s;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<double> coefficients, double tail_bound)
    : coefficients_(std::move(coefficients)), tail_bound_(tail_bound)
{
    if (coefficients_.empty()) throw std::invalid_argument("power series needs at least c_0");
    if (!(tail_bound_ >= 0.0)) throw std::invalid_argument("tail bound must be non-negative");
}

PowerSeries PowerSeries::constant(double value, int order)
{
    check_truncation(order);
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = value;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::identity(int order)
{
    if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[1] = 1.0;
    return PowerSeries(std::move(c));
}

double PowerSeries::l1_norm() const
{
    return l1(coefficients_);
}

double PowerSeries::evaluate(double z) const
{
    double acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::complex<double> PowerSeries::evaluate(std::complex<double> z) const
{
    std::complex<double> acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    const int order = std::min(a.order(), b.order());
    std::vector<double> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) c[static_cast<std::size_t>(k)] = a[k] + b[k];
    const double dropped = l1(a.coefficients().subspan(static_cast<std::size_t>(order) + 1))
                           + l1(b.coefficients().subspan(static_cast<std::size_t>(order) + 1));
    return PowerSeries(std::move(c), a.tail_bound() + b.tail_bound() + dropped);
}

PowerSeries cos_series(int order)
{
    check_truncation(order);
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    for (int k = 0; 2 * k <= order; ++k)
        c[static_cast<std::size_t>(2 * k)] = (k % 2 == 0 ? 1.0 : -1.0) * inverse_factorial(2 * k);
    return PowerSeries(std::move(c), factorial_tail(order, 0));
}

PowerSeries sin_series(int order)
{
    check_truncation(order);
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    for (int k = 0; 2 * k + 1 <= order; ++k)
        c[static_cast<std::size_t>(2 * k + 1)] = (k % 2 == 0 ? 1.0 : -1.0) * inverse_factorial(2 * k + 1);
    return PowerSeries(std::move(c), factorial_tail(order, 1));
}

PowerSeries cauchy_product(const PowerSeries& a, const PowerSeries& b)
{
    const int order = std::min(a.order(), b.order());
    std::vector<double> full(static_cast<std::size_t>(a.order() + b.order()) + 1, 0.0);
    for (int i = 0; i <= a.order(); ++i)
        for (int j = 0; j <= b.order(); ++j) full[static_cast<std::size_t>(i + j)] += a[i] * b[j];

    const double dropped = l1(std::span<const double>(full).subspan(static_cast<std::size_t>(order) + 1));
    // |fg - PQ| <= |f - P| (|Q| + |g - Q|) + |P| |g - Q|
    const double propagated = a.tail_bound() * (b.l1_norm() + b.tail_bound()) + a.l1_norm() * b.tail_bound();
    full.resize(static_cast<std::size_t>(order) + 1);
    return PowerSeries(std::move(full), propagated + dropped);
}

double outer_tail_estimate(const std::function<double(int)>& bound, int truncation, double radius)
{
    if (radius == 0.0) return 0.0;
    if (!std::isfinite(radius)) return kInf;
    const double log_r = std::log(radius);
    double sum = 0.0;
    double previous = kInf;
    for (int k = truncation + 1; k <= truncation + 100000; ++k) {
        const double b = bound(k);
        if (!(b >= 0.0)) return kInf;
        const double term = b == 0.0 ? 0.0 : std::exp(std::log(b) + k * log_r);
        if (!std::isfinite(term)) return kInf;
        sum += term;
        const bool settled = term <= 1e-20 * sum || term < 1e-300;
        if (settled && term <= previous && k > truncation + 8) return sum;
        previous = term;
    }
    return kInf;
}

PowerSeries series_compose(const PowerSeries& outer, const PowerSeries& inner, const ComposeOptions& options)
{
    const auto bound = options.outer_coefficient_bound ? options.outer_coefficient_bound
                                                       : std::function<double(int)>(inverse_factorial);
    const int terms = outer.order();
    const int order = inner.order();
    const double radius = inner.l1_norm();
    const double widened = radius + inner.tail_bound();

    // Coefficients through `order` depend on the outer terms beyond
    // `terms` by at most this much.
    const double coefficient_tail = outer_tail_estimate(bound, terms, radius);
    if (!(coefficient_tail <= options.max_outer_tail)) {
        std::ostringstream msg;
        msg << "outer series truncated at " << terms << " leaves a tail estimate of " << coefficient_tail
            << " (limit " << options.max_outer_tail << ")";
        throw std::domain_error(msg.str());
    }

    std::vector<double> result(static_cast<std::size_t>(order) + 1, 0.0);
    std::vector<double> power(static_cast<std::size_t>(order) + 1, 0.0);
    std::vector<double> next(power.size());
    std::vector<double> carry(power.size(), 0.0);
    power[0] = 1.0;

    double dropped = 0.0;     // terms of inner^k above `order`
    double perturbed = 0.0;   // effect of inner's own tail
    double radius_pow = 1.0;
    double widened_pow = 1.0;
    for (int k = 0; k <= terms; ++k) {
        if (k > 0) {
            std::fill(next.begin(), next.end(), 0.0);
            for (int i = 0; i <= order; ++i) {
                if (power[static_cast<std::size_t>(i)] == 0.0) continue;
                for (int j = 0; i + j <= order; ++j)
                    next[static_cast<std::size_t>(i + j)] += power[static_cast<std::size_t>(i)] * inner[j];
            }
            power.swap(next);
            radius_pow *= radius;
            widened_pow *= widened;
        }
        const double ok = outer[k];
        if (ok == 0.0) continue;
        for (int j = 0; j <= order; ++j) {
            // Neumaier summation: the outer terms alternate in sign.
            const auto idx = static_cast<std::size_t>(j);
            const double term = ok * power[idx];
            const double sum = result[idx] + term;
            carry[idx] += std::abs(result[idx]) >= std::abs(term) ? (result[idx] - sum) + term
                                                                  : (term - sum) + result[idx];
            result[idx] = sum;
        }
        dropped += std::abs(ok) * std::max(0.0, radius_pow - l1(power));
        perturbed += std::abs(ok) * (widened_pow - radius_pow);
    }

    for (std::size_t j = 0; j < result.size(); ++j) result[j] += carry[j];

    double tail = outer_tail_estimate(bound, terms, widened) + perturbed + dropped;
    if (!std::isfinite(tail)) tail = kInf;
    return PowerSeries(std::move(result), tail);
}

PowerSeries iteral_maclaurin(TrigKind kind, int order, int truncation)
{
    if (order < 1) throw std::invalid_argument("iteral Maclaurin series needs order >= 1, got " + std::to_string(order));
    check_truncation(truncation);
    const auto base = [kind](int n) { return kind == TrigKind::Cosine ? cos_series(n) : sin_series(n); };

    PowerSeries series = base(truncation);
    for (int level = 2; level <= order; ++level) {
        const double radius = series.l1_norm();
        int terms = std::max(truncation, 2);
        while (terms < 400 && outer_tail_estimate(inverse_factorial, terms, radius) > 1e-18) ++terms;
        series = series_compose(base(terms), series);
    }
    return series;
}

}  // namespace iteral
