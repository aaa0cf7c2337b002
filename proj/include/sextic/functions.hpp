#pragma once

#include <optional>
#include <string_view>

#include "sextic/common.hpp"

namespace sextic {

/// Functions exposed on the command line.
enum class FunctionId { s, c, t, q, wp, wpprime, f, g };

std::optional<FunctionId> parse_function(std::string_view name);
std::string_view function_name(FunctionId id);

/// Evaluates the selected function. t uses the band extension; s, c, f and g
/// use continuation; q, wp and wpprime are global. Domain and path errors
/// propagate as exceptions.
Extended evaluate(FunctionId id, Complex z);

}  // namespace sextic
