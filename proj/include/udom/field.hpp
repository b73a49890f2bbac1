#pragma once

#include <cstdint>

#include "udom/errors.hpp"

namespace udom {

/* Scalar arithmetic in the prime field Z/p.  Elements are canonical
 * representatives in [0, p).  p must be a prime below 2^31 so that products
 * fit comfortably in 64-bit intermediates. */
class Fp {
public:
    explicit Fp(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

    /* Multiplicative inverse via Fermat; a must be nonzero. */
    std::uint32_t inv(std::uint32_t a) const;

    /* Canonical representative of an arbitrary signed value. */
    std::uint32_t reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

} // namespace udom
