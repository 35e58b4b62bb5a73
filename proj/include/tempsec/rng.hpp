#pragma once

#include <cstdint>
#include <random>

namespace tempsec {

// Deterministic random source. Doubles are produced from the top 53 bits of
// the generator output so streams are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    bool coin() { return (gen_() & 1u) != 0; }

    // splitmix64 step; used to derive independent per-trial seeds from a
    // master seed without correlated low bits.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace tempsec
