#pragma once

#include <cstdint>
#include <random>

namespace fano {

// Deterministic RNG used throughout. std::uniform_int_distribution is not
// portable across standard libraries, so reductions are done by hand; a run
// is then reproducible from (seed) alone on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

    // uniform in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 gen_;
};

inline constexpr std::uint64_t kDefaultSeed = 20081014;   // published default, see README
inline constexpr std::uint32_t kDefaultPrime = 65521;     // largest prime below 2^16

}  // namespace fano
