#include "cdpauth/rng.hpp"

#include <array>

namespace cdpauth::rng {

double gaussian_at(std::uint64_t key, std::uint64_t counter) {
    // Twelve sub-draws per gaussian; counters are disjoint per value.
    double s = 0.0;
    for (std::uint64_t k = 0; k < 12; ++k) {
        s += unit_at(key, counter * 12 + k);
    }
    return s - 6.0;
}

double Stream::next_gaussian() {
    double s = 0.0;
    for (int k = 0; k < 12; ++k) s += next_unit();
    return s - 6.0;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace cdpauth::rng
