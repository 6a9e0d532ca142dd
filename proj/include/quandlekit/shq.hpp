#pragma once

#include <quandlekit/quandle.hpp>
#include <quandlekit/structure.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quandlekit {

// Parameters of a Super Hayashi Quandle: every right translation has cycle
// type (1 = l_1 < l_2 < ... < l_c) with l_{i-1} | l_i, ell = l_2 and
// ell + 1 = p^a.
struct ShqParams {
    std::uint64_t ell = 0;
    std::uint32_t c = 0;
    std::uint64_t p = 0;
    std::uint32_t a = 0;

    friend auto operator==(const ShqParams &, const ShqParams &) -> bool = default;
};

struct ShqClassification {
    std::optional<ShqParams> params;
    Profile profile;
    // Why params is absent; empty when present.
    std::string diagnostic;

    auto is_shq() const -> bool { return params.has_value(); }
};

auto classify_shq(const QuandleTable & q) -> ShqClassification;

// True iff lengths start at 1, increase strictly, each divides the next and
// there are at least two.
auto has_shq_shape(const std::vector<std::uint64_t> & lengths) -> bool;

// (1, ell, ell(ell+1), ..., ell(ell+1)^{c-2}); ParamOutOfRange unless
// ell >= 2 and c >= 2.
auto predicted_profile(std::uint64_t ell, std::uint32_t c) -> std::vector<std::uint64_t>;

enum class Admissibility { NotRuledOut, RuledOut };
enum class ObstructionReason { None, NotPrimePower, FormulaMismatch };

struct AdmissibilityVerdict {
    Admissibility verdict = Admissibility::NotRuledOut;
    ObstructionReason reason = ObstructionReason::None;
    // FormulaMismatch: 1-based position i of the first l_i off the formula.
    std::size_t index = 0;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
    std::string explanation;

    auto ruled_out() const -> bool { return verdict == Admissibility::RuledOut; }
};

// Necessary conditions only: NotRuledOut does not assert existence.
// Throws NotSHQShape unless has_shq_shape(lengths).
auto check_profile_admissible(const std::vector<std::uint64_t> & lengths) -> AdmissibilityVerdict;

// Canonical labels: R_1 = (n_1)(n_1+1 ... n_2)...(n_{c-1}+1 ... n_c).
class CanonicalDecomposition {
public:
    CanonicalDecomposition() = default;
    CanonicalDecomposition(std::vector<std::uint32_t> lengths, Permutation relabeling);

    auto cycle_count() const -> std::size_t { return _lengths.size(); }
    // l_i, n_i for 1-based i
    auto length(std::size_t i) const -> std::uint32_t { return _lengths.at(i - 1); }
    auto partial_sum(std::size_t i) const -> std::uint32_t { return _partial_sums.at(i - 1); }
    auto lengths() const -> const std::vector<std::uint32_t> & { return _lengths; }
    // X_i = {1..n_i}
    auto prefix(std::size_t i) const -> ElementSet;
    // L_i = {n_i - l_i + 1 .. n_i}
    auto block(std::size_t i) const -> ElementSet;
    // 1-based i with x in L_i
    auto block_of(Element x) const -> std::size_t;
    // original element -> canonical element
    auto relabeling() const -> const Permutation & { return _relabeling; }

private:
    std::vector<std::uint32_t> _lengths;
    std::vector<std::uint32_t> _partial_sums;
    Permutation _relabeling;
};

struct CanonicalForm {
    QuandleTable table;
    CanonicalDecomposition decomposition;
};

// Cycles of R_1 ordered by length; each starts at its smallest original
// label. Throws NotRelabelable if R_1 repeats a cycle length.
auto canonical_relabel(const QuandleTable & q) -> CanonicalForm;

// Decomposition of a table already in canonical form (identity relabeling);
// throws NotCanonical otherwise.
auto canonical_decomposition(const QuandleTable & q) -> CanonicalDecomposition;

struct Check {
    bool passed = true;
    std::string detail;
    std::vector<std::uint64_t> witness;
};

// R_{n_{i-1}+k} = R_1^k R_{n_i} R_1^{-k} for i in 2..c, k in 1..l_i.
// Failure witness is (i, k). Throws NotCanonical.
auto check_conjugation_relations(const QuandleTable & q) -> Check;

struct FixBlockPartition {
    std::uint64_t exponent = 0;
    // Distinct sets Fix(R_x^exponent), each sorted, ordered by smallest
    // element (the representative).
    std::vector<ElementSet> blocks;
    // element index -> position in blocks of the set fixed by R_x^exponent
    std::vector<std::size_t> block_of;

    auto fixed_set(Element x) const -> const ElementSet & { return blocks[block_of[x.index()]]; }
};

// Throws NotAPartition if the fixed sets do not partition the quandle into
// equal-sized blocks.
auto fix_blocks(const QuandleTable & q, std::uint64_t exponent) -> FixBlockPartition;

struct SubquandleClassSummary {
    std::size_t order = 0;
    Profile profile;
    std::size_t members = 0;
    // i with the class isomorphic to X_i; 0 if none.
    std::size_t matches_prefix = 0;
    ElementSet representative;
};

struct MainTheoremReport {
    ShqClassification classification;
    Check order_check, profile_check, prime_power_check, subquandle_check;
    // Non-singleton classes, ascending by order; X itself included.
    std::vector<SubquandleClassSummary> classes;

    auto is_shq() const -> bool { return classification.is_shq(); }
    auto all_passed() const -> bool;
};

// Checks are left at their defaults (passed, empty detail) when q is not an SHQ.
auto verify_main_theorem(const QuandleTable & q, const EnumerationLimits & limits = {}) -> MainTheoremReport;

struct LcmReport {
    std::uint64_t triples = 0;
    std::uint64_t violations = 0;
    std::vector<std::uint64_t> first_witness; // labels (x_t, x_u, x_t*x_u)
};

// For x_t, x_u in cycles of R_1 of lengths l_t, l_u with x_t*x_u in a cycle
// of length l_v, counts triples where l_v does not divide lcm(l_t, l_u).
auto lcm_divisibility(const QuandleTable & q) -> LcmReport;

} // namespace quandlekit
