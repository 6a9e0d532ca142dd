#pragma once

#include <quandlekit/element.hpp>
#include <quandlekit/error.hpp>
#include <quandlekit/permutation.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quandlekit {

// Entry (i, j) holds the label of i*j; labels are 1-based and unchecked.
using RawTable = std::vector<std::vector<std::int64_t>>;

// First axiom violation found, witness given in 1-based labels:
// IdempotencyViolation (i), RightInvertibilityViolation (j),
// DistributivityViolation (i, j, k), EntryOutOfRange (i, j), NonSquare (row).
struct Violation {
    ErrorKind kind;
    std::vector<index_t> witness;

    auto message() const -> std::string;
};

struct ValidationResult {
    std::optional<Violation> violation;

    auto ok() const -> bool { return ! violation.has_value(); }
};

// Scans idempotency, then columns, then (i, j, k) in lexicographic order and
// reports the first failure.
auto validate_quandle(const RawTable & raw) -> ValidationResult;

namespace detail {
    struct TrustedTag {
        explicit TrustedTag() = default;
    };
}

// A validated quandle operation table. Immutable.
class QuandleTable {
public:
    // Throws QuandleError carrying the first violation.
    static auto from_rows(const RawTable & raw) -> QuandleTable;
    // 0-based row-major entries; validated.
    static auto from_indices(std::size_t n, std::vector<index_t> entries) -> QuandleTable;

    // For constructions that are quandles by construction (relabelings,
    // restrictions to closed subsets, affine formulas). Not validated.
    QuandleTable(detail::TrustedTag, std::size_t n, std::vector<index_t> entries);

    auto order() const -> std::size_t { return _n; }
    auto op(Element x, Element y) const -> Element { return Element{at(x.index(), y.index())}; }
    auto at(index_t x, index_t y) const -> index_t { return _entries[x * _n + y]; }
    // Column j as R_j: right_image(j)[x] = x*j.
    auto column(index_t j) const -> std::span<const index_t> { return {_columns.data() + j * _n, _n}; }
    auto row(index_t i) const -> std::span<const index_t> { return {_entries.data() + i * _n, _n}; }
    auto entries() const -> const std::vector<index_t> & { return _entries; }

    auto to_rows() const -> RawTable;

    // Table of the same quandle with every element x renamed phi(x).
    auto relabeled(const Permutation & phi) const -> QuandleTable;

    friend auto operator==(const QuandleTable & a, const QuandleTable & b) -> bool
    {
        return a._n == b._n && a._entries == b._entries;
    }
    friend auto operator<=>(const QuandleTable & a, const QuandleTable & b)
    {
        if (auto c = a._n <=> b._n; c != 0)
            return c;
        return a._entries <=> b._entries;
    }

private:
    std::size_t _n = 0;
    std::vector<index_t> _entries;
    std::vector<index_t> _columns;
};

auto trivial_quandle(std::size_t n) -> QuandleTable;

// R_i : j -> j*i
auto right_translation(const QuandleTable & q, Element i) -> Permutation;
auto right_translations(const QuandleTable & q) -> std::vector<Permutation>;

// Builds j*i := R_i(j). Checks R_{R_i(j)} = R_i R_j R_i^-1 over (i, j) first,
// then R_i(i) = i; throws ConjugationViolation (i, j) or FixedPointMissing (i).
auto from_translations(std::span<const Permutation> translations) -> QuandleTable;

} // namespace quandlekit
