#include "iteral/core.hpp"

#include <numbers>

namespace iteral {

std::string_view to_string(TrigKind kind)
{
    return kind == TrigKind::Cosine ? "cos" : "sin";
}

TrigKind parse_trig_kind(std::string_view name)
{
    if (name == "cos" || name == "cosine") return TrigKind::Cosine;
    if (name == "sin" || name == "sine") return TrigKind::Sine;
    throw std::invalid_argument("Type sin or cos but not " + std::string(name));
}

RangeBound cos_iteral_range(int order)
{
    if (order < 2)
        throw std::invalid_argument("cosine iteral range formula needs order >= 2, got "
                                    + std::to_string(order));
    const int parity = order % 2;
    RangeBound bound;
    bound.order = order;
    bound.lower = iterate(TrigKind::Cosine, order - 1 - parity, 1.0);
    bound.upper = iterate(TrigKind::Cosine, order - 2 + parity, 1.0);
    return bound;
}

Envelope sin_iteral_envelope(int order)
{
    if (order < 1)
        throw std::invalid_argument("sine iteral envelope needs order >= 1, got "
                                    + std::to_string(order));
    return {iterate(TrigKind::Sine, order, -1.0), iterate(TrigKind::Sine, order, 1.0)};
}

IntersectionDistances intersection_distances(int order, double dottie)
{
    if (order < 1)
        throw std::invalid_argument("intersection distances are undefined for order "
                                    + std::to_string(order));
    if (!(dottie > 0.6 && dottie < 0.8))
        throw std::invalid_argument("Dottie value must lie in (0.6, 0.8)");
    if (order == 1) return {2.0 * dottie, 2.0 * (std::numbers::pi - dottie)};
    return {2.0 * dottie, std::numbers::pi - 2.0 * dottie};
}

}  // namespace iteral
