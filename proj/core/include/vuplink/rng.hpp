#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace vuplink {

using RandomStream = std::mt19937_64;

/// SplitMix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for the stream owned by one (master seed, coordinates...) tuple.
/// Independent of the order in which streams are created, so any worker
/// layout reproduces the same draws.
[[nodiscard]] constexpr std::uint64_t stream_seed(std::uint64_t master,
                                                  std::initializer_list<std::uint64_t> coords) noexcept {
    std::uint64_t h = mix64(master);
    for (auto c : coords) {
        h = mix64(h ^ mix64(c + 0x632be59bd9b4e019ULL));
    }
    return h;
}

[[nodiscard]] inline RandomStream make_stream(std::uint64_t master,
                                              std::initializer_list<std::uint64_t> coords) {
    return RandomStream{stream_seed(master, coords)};
}

}  // namespace vuplink
