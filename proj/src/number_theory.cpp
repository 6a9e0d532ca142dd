#include <quandlekit/number_theory.hpp>

#include <numeric>

namespace quandlekit::number_theory {

__extension__ using uint128 = unsigned __int128;

auto mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t
{
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

auto pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) -> std::uint64_t
{
    if (m == 1)
        return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exponent != 0) {
        if (exponent & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

auto is_prime(std::uint64_t n) -> bool
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

auto factorize(std::uint64_t n) -> std::vector<std::pair<std::uint64_t, std::uint32_t>>
{
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        std::uint32_t e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        factors.emplace_back(d, e);
    }
    if (n > 1)
        factors.emplace_back(n, 1);
    return factors;
}

auto as_prime_power(std::uint64_t n) -> std::optional<PrimePower>
{
    auto factors = factorize(n);
    if (factors.size() != 1)
        return std::nullopt;
    return PrimePower{factors[0].first, factors[0].second};
}

auto euler_phi(std::uint64_t n) -> std::uint64_t
{
    auto result = n;
    for (auto [p, e] : factorize(n))
        result = result / p * (p - 1);
    return result;
}

auto multiplicative_order(std::uint64_t a, std::uint64_t m) -> std::uint64_t
{
    if (m == 1)
        return 1;
    if (std::gcd(a % m, m) != 1)
        return 0;
    auto order = euler_phi(m);
    for (auto [p, e] : factorize(order)) {
        for (std::uint32_t k = 0; k < e && order % p == 0; ++k) {
            if (pow_mod(a, order / p, m) != 1)
                break;
            order /= p;
        }
    }
    return order;
}

auto checked_pow(std::uint64_t base, std::uint32_t exponent) -> std::optional<std::uint64_t>
{
    std::uint64_t result = 1;
    for (std::uint32_t k = 0; k < exponent; ++k) {
        if (base != 0 && result > UINT64_MAX / base)
            return std::nullopt;
        result *= base;
    }
    return result;
}

} // namespace quandlekit::number_theory
