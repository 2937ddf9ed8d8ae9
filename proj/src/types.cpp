#include "causalpath/types.hpp"

#include "causalpath/errors.hpp"

#include <algorithm>
#include <cctype>

namespace causalpath {

std::string_view to_string(Direction d) noexcept {
    return d == Direction::XtoY ? "XtoY" : "YtoX";
}

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::M1_gradient: return "M1_gradient";
        case Method::M2_residual: return "M2_residual";
        case Method::M3_gencorr: return "M3_gencorr";
        case Method::M4_cam: return "M4_cam";
    }
    return "unknown";
}

std::string_view short_name(Method m) noexcept {
    switch (m) {
        case Method::M1_gradient: return "M1";
        case Method::M2_residual: return "M2";
        case Method::M3_gencorr: return "M3";
        case Method::M4_cam: return "M4";
    }
    return "M?";
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::optional<Direction> parse_direction(std::string_view text) {
    const std::string t = lower(trim(text));
    if (t == "xtoy" || t == "x->y") return Direction::XtoY;
    if (t == "ytox" || t == "y->x") return Direction::YtoX;
    return std::nullopt;
}

std::optional<Method> parse_method(std::string_view text) {
    const std::string t = lower(trim(text));
    for (Method m : kAllMethods) {
        if (t == lower(short_name(m)) || t == lower(to_string(m))) return m;
    }
    return std::nullopt;
}

std::vector<Method> parse_method_list(std::string_view text) {
    std::vector<Method> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view token = text.substr(0, comma);
        const auto m = parse_method(token);
        if (!m) throw ConfigError("unknown method '" + std::string(trim(token)) + "'");
        if (std::find(out.begin(), out.end(), *m) != out.end())
            throw ConfigError("method listed twice: " + std::string(short_name(*m)));
        out.push_back(*m);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty()) throw ConfigError("empty method list");
    return out;
}

std::string join_methods(const std::vector<Method>& methods, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < methods.size(); ++i) {
        if (i) out += sep;
        out += short_name(methods[i]);
    }
    return out;
}

}  // namespace causalpath
