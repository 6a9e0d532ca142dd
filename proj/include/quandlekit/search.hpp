#pragma once

#include <quandlekit/quandle.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quandlekit {

inline constexpr std::size_t default_search_order_cap = 32;

struct SearchSpec {
    // 1 = l_1 < l_2 < ... < l_c, c >= 2
    std::vector<std::uint32_t> target_profile;
    std::optional<std::size_t> max_results;
    bool dedup_isomorphic = false;
    std::size_t max_order = default_search_order_cap;
    // Worker threads; output does not depend on this.
    unsigned threads = 1;
};

struct GeneratorStats {
    index_t element = 0; // label n_i of the generator R_{n_i}
    // Candidates for R_{n_i} over all partial tuples: permutations fixing
    // n_i alone, of the target cycle type, commuting with R_1^{l_i},
    // preserving each X_j (j >= i) and acting as an automorphism on the
    // translations already fixed.
    std::uint64_t generated = 0;
    // of those, the ones whose R_1-conjugates satisfy every translation
    // relation internal to {1} ∪ L_i
    std::uint64_t block_consistent = 0;
};

struct SearchStats {
    // Product over generators of the number of permutations with the target
    // cycle type fixing their own index; exact decimal.
    std::string raw_space;
    std::vector<GeneratorStats> generators;
    // partial generator tuples refuted by cross-block relations
    std::uint64_t partial_pruned = 0;
    std::uint64_t tuples_examined = 0;
    std::uint64_t conjugation_consistent = 0;
    std::uint64_t distributive = 0;
    std::uint64_t connected = 0;
    std::uint64_t profile_matched = 0;
    double elapsed_ms = 0;
};

struct SearchResult {
    // canonical labels, sorted by the flattened table
    std::vector<QuandleTable> quandles;
    // Filled when dedup_isomorphic: indices into quandles, each class sorted,
    // classes ordered by their first member.
    std::vector<std::vector<std::size_t>> iso_classes;
    SearchStats stats;
    bool truncated = false;
};

// Throws InvalidProfile, RepeatedLengthsUnsupported or SizeLimitExceeded.
void validate_search_spec(const SearchSpec & spec);

auto search_by_profile(const SearchSpec & spec) -> SearchResult;

// Same enumeration, statistics only.
auto prune_report(const SearchSpec & spec) -> SearchStats;

// Number of permutations of n = sum(lengths) points with the given cycle type
// that fix one specified point (lengths distinct, l_1 = 1); exact decimal.
auto class_slice_size(const std::vector<std::uint32_t> & lengths) -> std::string;

} // namespace quandlekit
