#pragma once

#include <charconv>
#include <string>

namespace fpdea {

// Shortest round-trip decimal form, locale independent. Used by every
// writer that must be byte-reproducible.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace fpdea
