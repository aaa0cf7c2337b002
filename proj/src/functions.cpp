#include "sextic/functions.hpp"

#include <array>
#include <utility>

#include "sextic/band.hpp"
#include "sextic/sextic.hpp"
#include "sextic/weierstrass.hpp"

namespace sextic {

namespace {

constexpr std::array<std::pair<std::string_view, FunctionId>, 8> kNames{{
    {"s", FunctionId::s},
    {"c", FunctionId::c},
    {"t", FunctionId::t},
    {"q", FunctionId::q},
    {"wp", FunctionId::wp},
    {"wpprime", FunctionId::wpprime},
    {"f", FunctionId::f},
    {"g", FunctionId::g},
}};

}  // namespace

std::optional<FunctionId> parse_function(std::string_view name) {
    for (const auto& [n, id] : kNames)
        if (n == name) return id;
    return std::nullopt;
}

std::string_view function_name(FunctionId id) {
    for (const auto& [n, i] : kNames)
        if (i == id) return n;
    return "?";
}

Extended evaluate(FunctionId id, Complex z) {
    switch (id) {
        case FunctionId::s: return eval_sc(z).s;
        case FunctionId::c: return eval_sc(z).c;
        case FunctionId::t: return t_band(z);
        case FunctionId::q: return q_global(z);
        case FunctionId::wp: return wp(z);
        case FunctionId::wpprime: return wp_prime(z);
        case FunctionId::f: return eval_fg(z).f;
        case FunctionId::g: return eval_fg(z).g;
    }
    throw usage_error("unknown function id");
}

}  // namespace sextic
