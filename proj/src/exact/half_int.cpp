#include "qlat/exact/half_int.hpp"

#include "qlat/error.hpp"

#include <cmath>
#include <cstdlib>

namespace qlat {

HalfInt HalfInt::from_double(double v) {
    const double twice = 2.0 * v;
    const double rounded = std::round(twice);
    if (!std::isfinite(v) || std::abs(twice - rounded) > 1e-9)
        throw InvalidArgument("not a half-integer: " + std::to_string(v));
    return from_twice(static_cast<int>(rounded));
}

HalfInt HalfInt::parse(const std::string &text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        char *end = nullptr;
        const long num = std::strtol(text.c_str(), &end, 10);
        if (end != text.c_str() + slash)
            throw InvalidArgument("malformed half-integer: " + text);
        const std::string den_text = text.substr(slash + 1);
        const long den = std::strtol(den_text.c_str(), &end, 10);
        if (*end != '\0' || den_text.empty() || (den != 1 && den != 2))
            throw InvalidArgument("malformed half-integer: " + text);
        return from_twice(static_cast<int>(den == 1 ? 2 * num : num));
    }
    char *end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || *end != '\0')
        throw InvalidArgument("malformed half-integer: " + text);
    return from_double(v);
}

int HalfInt::as_int() const {
    if (!is_integer())
        throw InvalidArgument("half-integer " + to_string() + " is not an integer");
    return twice_ / 2;
}

std::string HalfInt::to_string() const {
    if (is_integer())
        return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

} // namespace qlat
