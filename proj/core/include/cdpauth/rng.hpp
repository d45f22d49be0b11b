#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace cdpauth::rng {

// Counter-based generation: every value is a pure integer mix of key words,
// so streams are reproducible byte-for-byte across platforms and independent
// of call order. The mixer is the splitmix64 finalizer.
constexpr std::uint64_t GOLDEN = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t x) {
    x += GOLDEN;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Fold any number of words into one key.
constexpr std::uint64_t derive(std::uint64_t k) { return mix64(k); }
template <typename... Rest>
constexpr std::uint64_t derive(std::uint64_t k, std::uint64_t next, Rest... rest) {
    return derive(mix64(k) ^ (next + GOLDEN), rest...);
}

constexpr std::uint64_t u64_at(std::uint64_t key, std::uint64_t counter) {
    return mix64(key ^ mix64(counter));
}

// Uniform double in [0, 1) using the top 53 bits.
constexpr double to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

constexpr double unit_at(std::uint64_t key, std::uint64_t counter) {
    return to_unit(u64_at(key, counter));
}

// Standard-normal draw as an Irwin-Hall sum of 12 uniforms. Exact mean 0 and
// variance 1, tails clipped at +-6 sigma; uses only integer mixing and
// addition, so values are platform-stable.
double gaussian_at(std::uint64_t key, std::uint64_t counter);

// FNV-1a 64-bit hash, hex-encoded; used for data fingerprints.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

// Small sequential stream over the counter generator, for shuffles and
// ad-hoc sampling inside a single deterministic scope.
class Stream {
public:
    explicit Stream(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() { return u64_at(key_, counter_++); }
    double next_unit() { return to_unit(next_u64()); }
    double next_gaussian();

    // Unbiased-enough bounded draw (Lemire multiply-shift); deterministic.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace cdpauth::rng
