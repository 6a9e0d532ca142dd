#pragma once

#include <quandlekit/quandle.hpp>

#include <optional>
#include <string>
#include <vector>

namespace quandlekit {

struct Connectivity {
    bool connected = false;
    // Orbits of the right multiplication group, each sorted, ordered by
    // smallest element.
    std::vector<ElementSet> orbits;
};

// Orbit closure under the right translations; the group itself is never
// materialised.
auto connectivity(const QuandleTable & q) -> Connectivity;
auto is_connected(const QuandleTable & q) -> bool;

// Every row (left translation) is a bijection.
auto is_latin(const QuandleTable & q) -> bool;

struct Profile {
    // Connected: the single shared cycle structure. Otherwise the distinct
    // cycle structures of the right translations, sorted.
    std::vector<CycleStructure> structures;
    std::optional<CycleStructure> connected_form;

    auto to_string() const -> std::string;

    friend auto operator==(const Profile &, const Profile &) -> bool = default;
};

// Throws ProfileInconsistency if the quandle is connected and two right
// translations disagree.
auto profile(const QuandleTable & q) -> Profile;

// Cycle structures of all n right translations, in element order.
auto translation_cycle_structures(const QuandleTable & q) -> std::vector<CycleStructure>;

// Smallest subset containing seed and closed under *.
auto subquandle_closure(const QuandleTable & q, const ElementSet & seed) -> ElementSet;
auto is_closed(const QuandleTable & q, const ElementSet & subset) -> bool;

// Restriction of q to a closed subset, relabelled 1..|subset| in increasing
// order of the original labels.
auto subquandle_table(const QuandleTable & q, const ElementSet & subset) -> QuandleTable;

// A bijection phi with phi(x*y) = phi(x)*phi(y), or nothing.
auto are_isomorphic(const QuandleTable & a, const QuandleTable & b) -> std::optional<Permutation>;
auto is_homomorphism(const QuandleTable & a, const QuandleTable & b, const Permutation & phi) -> bool;

struct SubquandleEntry {
    ElementSet elements;
    Profile profile;
    // Index into SubquandleInventory::subquandles of the first entry of the
    // same isomorphism class.
    std::size_t class_representative = 0;
};

struct SubquandleInventory {
    // Sorted by (order, element labels).
    std::vector<SubquandleEntry> subquandles;

    auto class_representatives() const -> std::vector<std::size_t>;
};

struct EnumerationLimits {
    std::size_t max_order = 512;
    std::size_t max_subquandles = 200000;
};

// Breadth-first growth from singleton closures, one outside element at a
// time; throws SizeLimitExceeded past either limit.
auto enumerate_subquandles(const QuandleTable & q, const EnumerationLimits & limits = {}) -> SubquandleInventory;

} // namespace quandlekit
