#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace coreclust {

// All randomness in the project flows from a single 64-bit seed through
// named sub-streams, so that e.g. the partitioning stream can be varied
// without disturbing the injection stream.

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::mt19937_64 substream(std::uint64_t seed, std::string_view name,
                                 std::uint64_t index = 0) {
    std::uint64_t tag = fnv1a(name);
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32),
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

} // namespace coreclust
