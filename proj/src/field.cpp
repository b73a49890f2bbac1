#include "udom/field.hpp"

namespace udom {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Fp::Fp(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) {
        throw NotPrimeError("field characteristic must be a prime below 2^31, got " +
                            std::to_string(p));
    }
}

std::uint32_t Fp::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint64_t base = a % p_, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t Fp::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw NoSolutionError("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

} // namespace udom
