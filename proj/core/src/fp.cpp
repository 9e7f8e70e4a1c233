#include "fanocalc/fp.hpp"

#include <bit>

namespace fano {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    // deterministic Miller-Rabin for 32-bit inputs
    const std::uint32_t s = static_cast<std::uint32_t>(std::countr_zero(n - 1));
    const std::uint64_t d = (n - 1) >> s;
    for (std::uint64_t a : {2ull, 7ull, 61ull}) {
        std::uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = x * base % n;
            base = base * base % n;
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (std::uint32_t r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace fano
