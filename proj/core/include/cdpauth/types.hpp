#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "cdpauth/matrix.hpp"

namespace cdpauth {

// Label of a registered printing process, e.g. "synth55".
struct PrinterId {
    std::string label;
    auto operator<=>(const PrinterId&) const = default;
};

// Binary code the defender designs and keeps. Pixel value 1 means ink.
struct DigitalTemplate {
    Matrix pixels;                      // values exactly 0 or 1
    int id = 0;
    std::optional<std::uint64_t> seed;  // present when generated in-process
};

enum class Role { original, fake, probe, estimate };

const char* to_string(Role role);
Role role_from_string(const std::string& s);

// Grayscale acquisition of a printed code, reflectance convention:
// ink is dark, so a printed ink pixel sits near 0 and bare paper near 1.
struct PrintedCode {
    Matrix pixels;  // values in [0, 1]
    int id = 0;
    Role role = Role::probe;
    std::optional<PrinterId> printer;
    std::optional<PrinterId> source_printer;  // for fakes: printer of the copied original
};

// Throwing validators for the type invariants above.
void validate_template(const DigitalTemplate& t);
void validate_printed(const PrintedCode& x);

} // namespace cdpauth
