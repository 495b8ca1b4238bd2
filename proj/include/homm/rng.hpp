#ifndef HOMM_RNG_HPP
#define HOMM_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace homm {

// All randomness in the library flows from one master seed. Sub-seeds are
// derived with splitmix64 so that independent subsystems (sampling draws,
// null replicas, generators) get decorrelated, reproducible streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t index = 0) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the tag
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return splitmix64(master ^ splitmix64(h ^ splitmix64(index)));
}

// Unbiased integer in [0, n). std::uniform_int_distribution is not pinned
// down by the standard, so we roll our own rejection sampler to keep results
// identical across standard libraries.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace homm

#endif
