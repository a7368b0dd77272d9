// Seeded random source with a pinned generator and draw scheme, so that a
// (algorithm id, seed) pair fully determines every run.
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lpa {

// Recorded in run metadata. Bump if the generator or the draw scheme changes.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/u53";

// splitmix64 finalizer; used to derive independent per-run seeds from a base
// seed without correlated low bits.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : gen_(seed), seed_(seed) {}

    // Uniform on [0,1) from the top 53 bits. std::uniform_real_distribution is
    // avoided on purpose: its output sequence is not pinned by the standard.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::uint64_t raw() { return gen_(); }
    std::uint64_t seed() const { return seed_; }

private:
    std::mt19937_64 gen_;
    std::uint64_t seed_;
};

}  // namespace lpa
