#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace layershock {

enum class Limiter { None, Minmod, Superbee, MC, VanLeer };

/// Wave limiter φ(θ) for the ratio θ of upwind to local wave strength.
inline double limiter_value(double theta, Limiter lim) noexcept {
    switch (lim) {
        case Limiter::None:
            return 1.0;
        case Limiter::Minmod:
            return std::max(0.0, std::min(1.0, theta));
        case Limiter::Superbee:
            return std::max({0.0, std::min(1.0, 2.0 * theta), std::min(2.0, theta)});
        case Limiter::MC:
            return std::max(0.0, std::min({0.5 * (1.0 + theta), 2.0, 2.0 * theta}));
        case Limiter::VanLeer:
            return (theta + std::abs(theta)) / (1.0 + std::abs(theta));
    }
    return 1.0;
}

/// φ(num/den) for den > 0, folding the ratio into the limiter formula so
/// that each evaluation costs at most one division.
inline double limiter_ratio(double num, double den, Limiter lim) noexcept {
    switch (lim) {
        case Limiter::None:
            return 1.0;
        case Limiter::Minmod:
            if (num <= 0.0) return 0.0;
            return num >= den ? 1.0 : num / den;
        case Limiter::Superbee:
            if (num <= 0.0) return 0.0;
            if (num >= 2.0 * den) return 2.0;
            if (num >= den) return num / den;
            return std::min(1.0, 2.0 * num / den);
        case Limiter::MC:
            if (num <= 0.0) return 0.0;
            return std::min({0.5 * (1.0 + num / den), 2.0, 2.0 * num / den});
        case Limiter::VanLeer:
            if (num <= 0.0) return 0.0;
            return 2.0 * num / (den + num);
    }
    return 1.0;
}

std::string_view to_string(Limiter lim) noexcept;
std::optional<Limiter> parse_limiter(std::string_view name) noexcept;

}  // namespace layershock
