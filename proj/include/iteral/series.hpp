#pragma once

#include "iteral/core.hpp"

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace iteral {

/// Truncated Maclaurin series c_0 + c_1 z + ... + c_N z^N in the monomial
/// basis.
///
/// `tail_bound` bounds |f(z) - sum c_k z^k| on the closed unit disk, where f
/// is the analytic function the series stands for. It covers both the
/// dropped terms and any inaccuracy in the stored coefficients, and is
/// carried through cauchy_product and series_compose. A value of 0 means the
/// coefficients represent f exactly (a polynomial).
class PowerSeries {
public:
    explicit PowerSeries(std::vector<double> coefficients, double tail_bound = 0.0);

    static PowerSeries constant(double value, int order);
    /// z, truncated at `order` (>= 1).
    static PowerSeries identity(int order);

    int order() const { return static_cast<int>(coefficients_.size()) - 1; }
    double operator[](int k) const { return coefficients_[static_cast<std::size_t>(k)]; }
    std::span<const double> coefficients() const { return coefficients_; }
    double tail_bound() const { return tail_bound_; }

    /// Sum of |c_k|; bounds |P(z)| on the unit disk.
    double l1_norm() const;

    double evaluate(double z) const;
    std::complex<double> evaluate(std::complex<double> z) const;

private:
    std::vector<double> coefficients_;
    double tail_bound_ = 0.0;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);

/// Maclaurin series of cos and sin truncated at N, with the dropped-term
/// bound on the unit disk.
PowerSeries cos_series(int order);
PowerSeries sin_series(int order);

/// Coefficient convolution, truncated to the smaller operand order.
PowerSeries cauchy_product(const PowerSeries& a, const PowerSeries& b);

struct ComposeOptions {
    /// Bound on |outer_k| for k beyond the outer truncation. The default
    /// 1/k! holds for cos, sin and their iterals' outer layers.
    std::function<double(int)> outer_coefficient_bound;
    /// Largest acceptable contribution of the unrepresented outer terms.
    double max_outer_tail = 1e-8;
};

/// outer(inner(z)) as sum_{k<=T} outer_k * inner^k with T = outer.order(),
/// every power re-expanded and truncated at inner.order(). inner.c_0 may
/// be non-zero.
///
/// Throws std::domain_error carrying the tail estimate when the outer terms
/// beyond T cannot be bounded below options.max_outer_tail.
PowerSeries series_compose(const PowerSeries& outer, const PowerSeries& inner,
                           const ComposeOptions& options = {});

/// Bound on sum_{k>T} b(k) r^k, or +inf if the sum does not settle.
double outer_tail_estimate(const std::function<double(int)>& bound, int truncation, double radius);

/// Maclaurin series of the order-n iteral truncated at N, built by n-1
/// compositions of the base series. Cosine iterals have only even powers
/// and c_0 equal to cos^(n-1)(1); sine iterals have only odd powers.
PowerSeries iteral_maclaurin(TrigKind kind, int order, int truncation);

}  // namespace iteral
