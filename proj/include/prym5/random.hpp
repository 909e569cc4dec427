#pragma once

#include "prym5/field.hpp"

#include <cstdint>
#include <random>

namespace prym5 {

// Seeded generator with deterministic child streams. Draws avoid the std
// distributions so results do not depend on the standard library vendor.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(mix(seed)) {}

    std::uint64_t seed() const { return seed_; }

    // Independent stream derived from this seed and a label.
    Rng split(std::uint64_t label) const { return Rng(mix(seed_ ^ mix(label + 0x9e3779b97f4a7c15ull))); }

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do r = eng_();
        while (r >= limit);
        return r % n;
    }

    Fq element(const GF& F) { return F.element(below(F.order())); }
    Fq nonzero(const GF& F) { return F.element(1 + below(F.order() - 1)); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

}  // namespace prym5
