#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fano {

// Prime field F_p for p < 2^31. Elements are plain uint32_t in [0,p);
// the field object carries the modulus so element types stay POD.
class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2) throw std::invalid_argument("modulus must be >= 2");
        if (p >= (1u << 31)) throw std::invalid_argument("modulus must be < 2^31");
    }

    std::uint32_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<Elem>(s);
    }
    Elem sub(Elem a, Elem b) const {
        return a >= b ? a - b : static_cast<Elem>(a + p_ - b);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(std::uint64_t(a) * b % p_);
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one(), base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero in F_p");
        return pow(a, p_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

private:
    std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace fano
