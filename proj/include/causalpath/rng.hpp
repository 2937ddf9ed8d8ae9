#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace causalpath {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Counter-based seed for stream `index` of entity `key` under a run seed.
/// Independent of processing order, so parallel and serial runs agree.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::string_view key,
                                    std::uint64_t index) noexcept {
    return splitmix64(splitmix64(splitmix64(seed) ^ fnv1a(key)) ^ index);
}

}  // namespace causalpath
