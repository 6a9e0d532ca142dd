#pragma once

#include <cstdint>
#include <vector>

namespace quandlekit {

// GF(p^a) as Z_p[x] / (modulus). An element is stored by its index
// sum_k c_k p^k, where c_k is the coefficient of x^k; ordering elements by
// index is lexicographic on (c_{a-1}, ..., c_0).
class GaloisField {
public:
    using element_type = std::uint32_t;

    // Modulus: the smallest monic irreducible of degree a, ordering the
    // candidates by the index of their non-leading coefficients.
    GaloisField(std::uint32_t p, std::uint32_t a);

    auto characteristic() const -> std::uint32_t { return _p; }
    auto degree() const -> std::uint32_t { return _a; }
    auto size() const -> std::uint32_t { return _size; }
    // Coefficients c_0..c_a of the modulus (c_a = 1).
    auto modulus() const -> const std::vector<std::uint32_t> & { return _modulus; }

    auto coefficients(element_type x) const -> std::vector<std::uint32_t>;
    auto from_coefficients(const std::vector<std::uint32_t> & coeffs) const -> element_type;

    auto add(element_type x, element_type y) const -> element_type;
    auto sub(element_type x, element_type y) const -> element_type;
    auto neg(element_type x) const -> element_type;
    auto mul(element_type x, element_type y) const -> element_type;
    // Throws ParamOutOfRange on zero.
    auto inv(element_type x) const -> element_type;
    auto pow(element_type x, std::uint64_t k) const -> element_type;

    auto one() const -> element_type { return 1; }
    auto multiplicative_order(element_type x) const -> std::uint64_t;
    auto is_generator(element_type x) const -> bool;
    // Smallest-index generator of the multiplicative group.
    auto smallest_generator() const -> element_type;

private:
    std::uint32_t _p, _a, _size;
    std::vector<std::uint32_t> _modulus;
};

// Coefficient vectors c_0..c_d over Z_p, no trailing zeros.
auto is_irreducible(const std::vector<std::uint32_t> & poly, std::uint32_t p) -> bool;

} // namespace quandlekit
