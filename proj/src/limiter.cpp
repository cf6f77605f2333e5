#include "layershock/limiter.hpp"

namespace layershock {

std::string_view to_string(Limiter lim) noexcept {
    switch (lim) {
        case Limiter::None:
            return "none";
        case Limiter::Minmod:
            return "minmod";
        case Limiter::Superbee:
            return "superbee";
        case Limiter::MC:
            return "mc";
        case Limiter::VanLeer:
            return "vanleer";
    }
    return "none";
}

std::optional<Limiter> parse_limiter(std::string_view name) noexcept {
    for (Limiter lim : {Limiter::None, Limiter::Minmod, Limiter::Superbee, Limiter::MC, Limiter::VanLeer}) {
        if (name == to_string(lim)) return lim;
    }
    return std::nullopt;
}

}  // namespace layershock
