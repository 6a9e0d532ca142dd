#pragma once

#include <quandlekit/galois_field.hpp>
#include <quandlekit/quandle.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace quandlekit {

inline constexpr std::size_t default_construction_cap = 2048;

struct PrimitiveRootResult {
    std::uint64_t p = 0;
    // smallest primitive root mod p
    std::uint64_t g = 0;
    // g if g is primitive mod p^2, else g + p; primitive mod every p^a
    std::uint64_t h = 0;
    bool lifted = false;
};

// Throws NotOddPrime.
auto primitive_root(std::uint64_t p) -> PrimitiveRootResult;

// a*b = h*a - (h-1)*b mod m, element k <-> residue k-1.
// Throws MultiplierNotInvertible if gcd(h, m) != 1.
auto affine_quandle(std::uint64_t m, std::int64_t h, std::size_t cap = default_construction_cap) -> QuandleTable;

// affine_quandle(p^{c-1}, h_p): an SHQ with profile (1, (p-1), (p-1)p, ..., (p-1)p^{c-2}).
auto shq_family(std::uint64_t p, std::uint32_t c, std::size_t cap = default_construction_cap) -> QuandleTable;

// x*y = h*x + (1-h)*y over GF(p^a); element k <-> field index k-1.
// Throws DegenerateMultiplier for h = 0 or h = 1.
auto galois_affine_quandle(std::uint32_t p, std::uint32_t a, GaloisField::element_type multiplier,
    std::size_t cap = default_construction_cap) -> QuandleTable;

// galois_affine_quandle with the smallest generator of GF(p^a)^×: profile (1, p^a - 1).
auto cyclic_type_quandle(std::uint32_t p, std::uint32_t a, std::size_t cap = default_construction_cap) -> QuandleTable;

// Labels (1-based) of T(z) = p*z mod p^c, from Z_{p^{c-1}} into Z_{p^c}.
auto family_embedding_map(std::uint64_t p, std::uint32_t c) -> std::vector<index_t>;

struct EmbeddingReport {
    std::uint64_t p = 0;
    std::uint32_t c = 0;
    bool injective = false;
    bool homomorphism = false;
    bool image_closed = false;
    bool image_isomorphic = false;
    std::vector<index_t> image; // labels in the target
    std::string failure;        // first failure, with witness labels

    auto passed() const -> bool { return injective && homomorphism && image_closed && image_isomorphic; }
};

// Checks T maps shq_family(p, c) into shq_family(p, c+1) as a closed,
// isomorphic subquandle.
auto family_embedding(std::uint64_t p, std::uint32_t c, std::size_t cap = default_construction_cap) -> EmbeddingReport;

} // namespace quandlekit
