#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace quandlekit::number_theory {

auto mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t;
auto pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) -> std::uint64_t;

// Trial division; exact.
auto is_prime(std::uint64_t n) -> bool;
auto factorize(std::uint64_t n) -> std::vector<std::pair<std::uint64_t, std::uint32_t>>;

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;
};

auto as_prime_power(std::uint64_t n) -> std::optional<PrimePower>;

auto euler_phi(std::uint64_t n) -> std::uint64_t;

// Order of a in (Z/m)^×, using the factorisation of phi(m); 0 when
// gcd(a, m) != 1.
auto multiplicative_order(std::uint64_t a, std::uint64_t m) -> std::uint64_t;

// Checked integer power; nullopt on overflow.
auto checked_pow(std::uint64_t base, std::uint32_t exponent) -> std::optional<std::uint64_t>;

} // namespace quandlekit::number_theory
