#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace forddisc {

// Raised when an input is valid in principle but exceeds the configured
// resource cap (table sizes, streaming order, enumeration width).  Callers
// that want a bigger budget raise the cap explicitly instead of catching this.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Streaming operations refuse orders beyond this cap unless the
// FORD_DISC_MAX_ORDER environment variable overrides it.
inline unsigned streaming_cap() {
    static const unsigned cap = [] {
        if (const char* env = std::getenv("FORD_DISC_MAX_ORDER")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v >= 2 && v <= 62) return static_cast<unsigned>(v);
        }
        return 26u;
    }();
    return cap;
}

} // namespace forddisc
