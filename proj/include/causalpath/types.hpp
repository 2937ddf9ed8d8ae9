#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace causalpath {

/// Causal direction verdict. XtoY is the positive class for every metric.
enum class Direction { XtoY, YtoX };

/// The four direction criteria, in their canonical order.
enum class Method { M1_gradient, M2_residual, M3_gencorr, M4_cam };

inline constexpr std::array<Method, 4> kAllMethods = {
    Method::M1_gradient, Method::M2_residual, Method::M3_gencorr, Method::M4_cam};

constexpr Direction opposite(Direction d) noexcept {
    return d == Direction::XtoY ? Direction::YtoX : Direction::XtoY;
}

std::string_view to_string(Direction d) noexcept;
std::string_view to_string(Method m) noexcept;

/// Short label ("M1".."M4").
std::string_view short_name(Method m) noexcept;

std::optional<Direction> parse_direction(std::string_view text);

/// Accepts "M1".."M4" or the long enum spelling, case-insensitive.
std::optional<Method> parse_method(std::string_view text);

/// Parses a comma-separated method list such as "M2,M3,M4". Throws ConfigError.
std::vector<Method> parse_method_list(std::string_view text);

std::string join_methods(const std::vector<Method>& methods, std::string_view sep = "+");

}  // namespace causalpath
