#include "cdpauth/types.hpp"

#include "cdpauth/errors.hpp"

namespace cdpauth {

const char* to_string(Role role) {
    switch (role) {
        case Role::original: return "original";
        case Role::fake: return "fake";
        case Role::probe: return "probe";
        case Role::estimate: return "estimate";
    }
    return "unknown";
}

Role role_from_string(const std::string& s) {
    if (s == "original") return Role::original;
    if (s == "fake") return Role::fake;
    if (s == "probe") return Role::probe;
    if (s == "estimate") return Role::estimate;
    throw IngestionError("unknown role: '" + s + "'");
}

void validate_template(const DigitalTemplate& t) {
    if (t.pixels.rows() < 2 || t.pixels.cols() < 2)
        throw ParameterError("template must be at least 2x2");
    for (double v : t.pixels.flat())
        if (v != 0.0 && v != 1.0)
            throw ParameterError("template pixels must be exactly 0 or 1");
}

void validate_printed(const PrintedCode& x) {
    if (x.pixels.rows() < 2 || x.pixels.cols() < 2)
        throw ParameterError("printed code must be at least 2x2");
    for (double v : x.pixels.flat())
        if (!(v >= 0.0 && v <= 1.0))
            throw ParameterError("printed code pixels must lie in [0,1]");
}

} // namespace cdpauth
